#pragma once

#include <stdexcept>
#include <string>

namespace varembed {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input: context mismatches, violated construction hypotheses,
/// malformed problem files.
class input_error : public error {
public:
    explicit input_error(const std::string& what) : error(what) {}
};

/// Text that failed to parse. `position` is a 0-based character offset
/// into the parsed string.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : input_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A configured resource cap was hit. Distinct from mathematical failure:
/// the computation was cut short and nothing is known about the answer.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

} // namespace varembed
