#include "varembed/monomial.hpp"

#include "varembed/errors.hpp"

#include <algorithm>
#include <numeric>

namespace varembed {

Monomial::Monomial(std::vector<int> e) : exps(std::move(e)) {
    for (int x : exps)
        if (x < 0) throw input_error("monomial exponents must be non-negative");
}

Monomial Monomial::unit(int arity) {
    Monomial m;
    m.exps.assign(static_cast<std::size_t>(arity), 0);
    return m;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_unit() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::all_positive() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e > 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw input_error("monomial arity mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

bool divides(const Monomial& d, const Monomial& m) {
    if (d.arity() != m.arity()) throw input_error("monomial arity mismatch");
    for (std::size_t i = 0; i < d.exps.size(); ++i)
        if (d.exps[i] > m.exps[i]) return false;
    return true;
}

Monomial exact_quotient(const Monomial& m, const Monomial& d) {
    if (!divides(d, m)) throw input_error("monomial quotient is not exact");
    Monomial r = m;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= d.exps[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw input_error("monomial arity mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
    return r;
}

std::strong_ordering canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw input_error("monomial arity mismatch");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (auto c = a.exps[i] <=> b.exps[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

} // namespace varembed
