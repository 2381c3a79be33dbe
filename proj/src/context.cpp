#include "varembed/context.hpp"

#include "varembed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace varembed {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw input_error("variable context must declare at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw input_error("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw input_error("duplicate variable name '" + n + "'");
    }
}

const std::string& VarContext::name(int var) const {
    if (var < 0 || var >= arity()) throw input_error("variable index out of range");
    return names_[static_cast<std::size_t>(var)];
}

std::optional<int> VarContext::index_of(std::string_view name) const {
    for (int i = 0; i < arity(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

int VarContext::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw input_error("unknown variable '" + std::string(name) + "'");
}

VarContext VarContext::extended(const std::string& fresh) const {
    if (index_of(fresh)) throw input_error("variable name '" + fresh + "' already declared");
    auto names = names_;
    names.push_back(fresh);
    return VarContext(std::move(names));
}

VarContext VarContext::without(int var) const {
    name(var); // range check
    auto names = names_;
    names.erase(names.begin() + var);
    return VarContext(std::move(names));
}

VarContext VarContext::renamed(int var, const std::string& fresh) const {
    name(var); // range check
    if (index_of(fresh)) throw input_error("variable name '" + fresh + "' already declared");
    auto names = names_;
    names[static_cast<std::size_t>(var)] = fresh;
    return VarContext(std::move(names));
}

} // namespace varembed
