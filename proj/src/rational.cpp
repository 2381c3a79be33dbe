#include "varembed/rational.hpp"

#include "varembed/errors.hpp"

#include <cctype>

namespace varembed {

Rational make_rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    std::size_t p = i;
    if (p < n && text[p] == '-') ++p;
    std::size_t num_end = digits(p);
    if (num_end == p) throw input_error("malformed rational '" + text + "'");
    std::size_t q = num_end;
    if (q < n) {
        if (text[q] != '/') throw input_error("malformed rational '" + text + "'");
        std::size_t den_end = digits(q + 1);
        if (den_end == q + 1 || den_end != n)
            throw input_error("malformed rational '" + text + "'");
        mpz_class den(text.substr(q + 1));
        if (den == 0) throw input_error("rational with zero denominator in '" + text + "'");
    }
    Rational r(text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& base, unsigned long exp) {
    if (exp == 0) return Rational(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace varembed
