#pragma once

#include <gmpxx.h>

#include <string>

namespace varembed {

/// Exact rational scalar. mpq_class arithmetic keeps values canonical:
/// numerator and denominator coprime, denominator positive, zero as 0/1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws input_error when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "123", "-7" or "-15/16". Strict: optional leading '-', decimal
/// digits, optional '/' with a positive decimal denominator.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "n" or "n/d" with d > 1.
std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, unsigned long exp);

} // namespace varembed
