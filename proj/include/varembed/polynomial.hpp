#pragma once

#include "varembed/context.hpp"
#include "varembed/monomial.hpp"
#include "varembed/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace varembed {

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable context. Terms are stored with nonzero coefficients only,
/// sorted descending by the canonical tiebreak, so equal polynomials compare
/// equal structurally. Immutable after construction; all operations below
/// are pure functions.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(VarContext ctx, Rational c);
    static Polynomial variable(VarContext ctx, int var);
    static Polynomial from_terms(VarContext ctx, std::vector<Term> terms);

    const VarContext& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; 0 for the zero polynomial.
    Rational constant_value() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(int var) const;
    bool contains_var(int var) const;
    Rational coeff(const Monomial& m) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    VarContext ctx_;
    std::vector<Term> terms_; // descending canonical_cmp, no zero coefficients
};

Polynomial operator-(const Polynomial& p);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& p);

/// Multiplies by a single term. Cheaper than building a one-term polynomial.
Polynomial term_mul(const Polynomial& p, const Monomial& m, const Rational& c);

/// pow(p, 0) == 1. Repeated squaring for k >= 4, plain iteration below.
Polynomial pow(const Polynomial& p, int k);

/// Simultaneous substitution; variables absent from the map stay fixed.
/// Every image must live in the same context as p.
Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images);

/// Formal partial derivative.
Polynomial diff(const Polynomial& p, int var);

/// Exact evaluation at a rational point (length must match the arity).
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

/// Exact division: returns q with p == d * q, or nullopt when no such q
/// exists. The result is re-verified by multiplication before returning.
/// Throws input_error when d is the zero polynomial.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d);

/// Re-embeds p into a context that contains (at least) all of p's variable
/// names, matching variables by name.
Polynomial reindex(const Polynomial& p, const VarContext& target);

} // namespace varembed
