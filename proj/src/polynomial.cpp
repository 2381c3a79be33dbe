#include "varembed/polynomial.hpp"

#include "varembed/errors.hpp"

#include <algorithm>

namespace varembed {

namespace {

void require_same_context(const Polynomial& a, const Polynomial& b) {
    if (a.context() != b.context()) throw input_error("variable context mismatch");
}

struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_cmp(a, b) == std::strong_ordering::greater;
    }
};

Polynomial from_accumulator(VarContext ctx, std::map<Monomial, Rational, CanonicalGreater>&& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back(Term{m, std::move(c)});
    return Polynomial::from_terms(std::move(ctx), std::move(terms));
}

} // namespace

Polynomial Polynomial::constant(VarContext ctx, Rational c) {
    Polynomial p(ctx);
    if (c != 0) p.terms_.push_back(Term{Monomial::unit(ctx.arity()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VarContext ctx, int var) {
    ctx.name(var); // range check
    Monomial m = Monomial::unit(ctx.arity());
    m.exps[static_cast<std::size_t>(var)] = 1;
    Polynomial p(ctx);
    p.terms_.push_back(Term{std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(VarContext ctx, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mono.arity() != ctx.arity())
            throw input_error("term arity does not match the context");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return canonical_cmp(a.mono, b.mono) == std::strong_ordering::greater;
    });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (Term& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    Polynomial p(std::move(ctx));
    p.terms_ = std::move(merged);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

Rational Polynomial::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw input_error("polynomial is not constant");
    return terms_[0].coeff;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    if (is_zero()) return -1;
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.exp(var));
    return d;
}

bool Polynomial::contains_var(int var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.mono.exp(var) > 0; });
}

Rational Polynomial::coeff(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) t.coeff = -t.coeff;
    return Polynomial::from_terms(p.context(), std::move(terms));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_context(a, b);
    // Merge of two canonically sorted term lists.
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
        auto c = canonical_cmp(ia->mono, ib->mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(*ia++);
        } else if (c == std::strong_ordering::less) {
            out.push_back(*ib++);
        } else {
            Rational s = ia->coeff + ib->coeff;
            if (s != 0) out.push_back(Term{ia->mono, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return Polynomial::from_terms(a.context(), std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a, b);
    std::map<Monomial, Rational, CanonicalGreater> acc;
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
    return from_accumulator(a.context(), std::move(acc));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.context());
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) t.coeff *= c;
    return Polynomial::from_terms(p.context(), std::move(terms));
}

Polynomial term_mul(const Polynomial& p, const Monomial& m, const Rational& c) {
    if (c == 0) return Polynomial(p.context());
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return Polynomial::from_terms(p.context(), std::move(terms));
}

Polynomial pow(const Polynomial& p, int k) {
    if (k < 0) throw input_error("negative polynomial power");
    Polynomial one = Polynomial::constant(p.context(), Rational(1));
    if (k == 0) return one;
    if (k < 4) {
        Polynomial r = p;
        for (int i = 1; i < k; ++i) r = r * p;
        return r;
    }
    Polynomial base = p, result = one;
    int e = k;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images) {
    const VarContext& ctx = p.context();
    for (const auto& [var, image] : images) {
        ctx.name(var); // range check
        if (image.context() != ctx)
            throw input_error("substitution image context mismatch for variable '" +
                              ctx.name(var) + "'");
    }
    // Per-variable power cache; exponents repeat across terms.
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power_of = [&](int var, int e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto img = images.find(var);
        Polynomial base =
            img != images.end() ? img->second : Polynomial::variable(ctx, var);
        return powers.emplace(key, pow(base, e)).first->second;
    };
    Polynomial result(ctx);
    for (const Term& t : p.terms()) {
        Polynomial factor = Polynomial::constant(ctx, t.coeff);
        for (int var = 0; var < ctx.arity(); ++var) {
            int e = t.mono.exp(var);
            if (e > 0) factor = factor * power_of(var, e);
        }
        result = result + factor;
    }
    return result;
}

Polynomial diff(const Polynomial& p, int var) {
    p.context().name(var); // range check, throws for unknown variables
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        int e = t.mono.exp(var);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.exps[static_cast<std::size_t>(var)] = e - 1;
        terms.push_back(Term{std::move(m), Rational(e) * t.coeff});
    }
    return Polynomial::from_terms(p.context(), std::move(terms));
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.context().arity())
        throw input_error("evaluation point length does not match the arity");
    Rational sum(0);
    for (const Term& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            int e = t.mono.exps[i];
            if (e > 0) v *= rational_pow(point[i], static_cast<unsigned long>(e));
        }
        sum += v;
    }
    return sum;
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw input_error("division by the zero polynomial");
    require_same_context(p, d);
    // Leading-term division under the canonical (graded) order. The stored
    // term lists are already sorted, so the front term is leading.
    const Term& lead_d = d.terms().front();
    Polynomial rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lead_r = rem.terms().front();
        if (!divides(lead_d.mono, lead_r.mono)) return std::nullopt;
        Term t{exact_quotient(lead_r.mono, lead_d.mono), lead_r.coeff / lead_d.coeff};
        rem = rem - term_mul(d, t.mono, t.coeff);
        quot.push_back(std::move(t));
    }
    Polynomial q = Polynomial::from_terms(p.context(), std::move(quot));
    if (d * q != p) return std::nullopt; // re-multiplication check
    return q;
}

Polynomial reindex(const Polynomial& p, const VarContext& target) {
    std::vector<int> where(static_cast<std::size_t>(p.context().arity()));
    for (int i = 0; i < p.context().arity(); ++i)
        where[static_cast<std::size_t>(i)] = target.require_index(p.context().name(i));
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Monomial m = Monomial::unit(target.arity());
        for (int i = 0; i < p.context().arity(); ++i)
            m.exps[static_cast<std::size_t>(where[static_cast<std::size_t>(i)])] =
                t.mono.exp(i);
        terms.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

} // namespace varembed
