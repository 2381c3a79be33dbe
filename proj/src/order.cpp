#include "varembed/order.hpp"

#include "varembed/errors.hpp"

#include <algorithm>
#include <numeric>

namespace varembed {

MonomialOrder::MonomialOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.empty()) throw input_error("order ranking must not be empty");
    std::vector<bool> seen(ranking_.size(), false);
    for (int v : ranking_) {
        if (v < 0 || v >= arity() || seen[static_cast<std::size_t>(v)])
            throw input_error("order ranking must be a permutation of the variables");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

MonomialOrder MonomialOrder::default_for(const VarContext& ctx) {
    std::vector<int> ranking(static_cast<std::size_t>(ctx.arity()));
    std::iota(ranking.rbegin(), ranking.rend(), 0);
    return MonomialOrder(std::move(ranking));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != arity() || b.arity() != arity())
        throw input_error("monomial arity does not match the order");
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
        if (auto c = a.exp(*it) <=> b.exp(*it); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::pair<Monomial, Rational> leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw input_error("the zero polynomial has no leading monomial");
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms())
        if (ord.greater(t.mono, best->mono)) best = &t;
    return {best->mono, best->coeff};
}

std::vector<MonomialOrder> all_lex_orders(int n, int cap) {
    if (n < 1) throw input_error("order enumeration needs at least one variable");
    if (n > cap)
        throw input_error("order enumeration over " + std::to_string(n) +
                          " variables exceeds the cap of " + std::to_string(cap));
    std::vector<int> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 0);
    std::vector<MonomialOrder> orders;
    do {
        orders.emplace_back(ranking);
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return orders;
}

MonomialOrder parse_order(const std::string& literal, const VarContext& ctx) {
    std::string compact;
    for (char c : literal)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    std::vector<int> ranking;
    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t lt = compact.find('<', start);
        std::string name = compact.substr(start, lt == std::string::npos ? lt : lt - start);
        if (name.empty()) throw input_error("malformed order literal '" + literal + "'");
        ranking.push_back(ctx.require_index(name));
        if (lt == std::string::npos) break;
        start = lt + 1;
    }
    if (static_cast<int>(ranking.size()) != ctx.arity())
        throw input_error("order literal '" + literal +
                          "' must mention every variable exactly once");
    return MonomialOrder(std::move(ranking)); // ctor rejects repeats
}

std::string order_literal(const MonomialOrder& ord, const VarContext& ctx) {
    if (ord.arity() != ctx.arity()) throw input_error("order arity does not match the context");
    std::string out;
    for (std::size_t i = 0; i < ord.ranking().size(); ++i) {
        if (i > 0) out += '<';
        out += ctx.name(ord.ranking()[i]);
    }
    return out;
}

} // namespace varembed
