#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cym {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational_of(long num, unsigned long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Crude size proxy used by pivot heuristics: total limb footprint.
inline std::size_t rational_weight(const Rational& r) {
    return mpz_size(r.get_num().get_mpz_t()) + mpz_size(r.get_den().get_mpz_t());
}

inline unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
    return a / std::gcd(a, b) * b;
}

}  // namespace cym
