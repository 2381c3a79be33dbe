#pragma once

#include <compare>
#include <vector>

namespace varembed {

/// Exponent vector of fixed arity. Entries are non-negative.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e);
    static Monomial unit(int arity);

    int arity() const { return static_cast<int>(exps.size()); }
    int degree() const;
    int exp(int var) const { return exps[static_cast<std::size_t>(var)]; }
    bool is_unit() const;
    bool all_positive() const;
    bool has_zero_exponent() const { return !all_positive(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& d, const Monomial& m);
/// Pre: divides(d, m).
Monomial exact_quotient(const Monomial& m, const Monomial& d);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Fixed internal tiebreak used for term storage and hashing-independent
/// printing: total degree first, then lexicographic by variable index.
/// Not exposed as a MonomialOrder.
std::strong_ordering canonical_cmp(const Monomial& a, const Monomial& b);

} // namespace varembed
