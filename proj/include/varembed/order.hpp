#pragma once

#include "varembed/context.hpp"
#include "varembed/monomial.hpp"
#include "varembed/polynomial.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace varembed {

/// Pure lexicographic monomial order induced by a ranking of the variables.
/// The ranking lists variable indices from least to greatest; comparison
/// scans from the greatest variable down and the first differing exponent
/// decides. Any power of a lower variable is smaller than a higher variable.
class MonomialOrder {
public:
    /// `ranking` must be a permutation of 0..n-1, least variable first.
    explicit MonomialOrder(std::vector<int> ranking);

    /// Ranking that makes the first declared variable the greatest:
    /// for vars x, y, z this is the order z < y < x.
    static MonomialOrder default_for(const VarContext& ctx);

    int arity() const { return static_cast<int>(ranking_.size()); }
    const std::vector<int>& ranking() const { return ranking_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    std::vector<int> ranking_;
};

/// Order-maximal monomial of p with its coefficient. Throws input_error on
/// the zero polynomial.
std::pair<Monomial, Rational> leading_monomial(const Polynomial& p, const MonomialOrder& ord);

/// All n! pure lexicographic orders, enumerated deterministically
/// (lexicographic order on the ranking sequences). Throws when n > cap.
std::vector<MonomialOrder> all_lex_orders(int n, int cap = 6);

/// Parses an order literal such as "z<y<x" (least variable first,
/// whitespace insignificant). Every context variable must appear exactly
/// once.
MonomialOrder parse_order(const std::string& literal, const VarContext& ctx);

/// Renders the order literal, e.g. "z<y<x".
std::string order_literal(const MonomialOrder& ord, const VarContext& ctx);

} // namespace varembed
