#pragma once

#include <gmpxx.h>
#include <string>

namespace gessel {

// Exact arbitrary-precision rational, always canonical (lowest terms,
// positive denominator). GMP guarantees both after canonicalize().
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

} // namespace gessel
