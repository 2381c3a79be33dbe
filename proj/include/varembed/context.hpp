#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varembed {

/// Ordered list of distinct variable names. The index <-> name bijection is
/// fixed for the lifetime of the value; polynomials refer to variables by
/// index into their context.
class VarContext {
public:
    VarContext() = default;
    explicit VarContext(std::vector<std::string> names);

    int arity() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int var) const;
    std::optional<int> index_of(std::string_view name) const;
    /// Throws input_error when `name` is not declared.
    int require_index(std::string_view name) const;

    VarContext extended(const std::string& fresh) const;
    VarContext without(int var) const;
    VarContext renamed(int var, const std::string& fresh) const;

    friend bool operator==(const VarContext&, const VarContext&) = default;

private:
    std::vector<std::string> names_;
};

} // namespace varembed
