#pragma once

#include <gmpxx.h>

#include <string>

namespace flagpush {

// Exact arbitrary-precision arithmetic. All coefficients in the library are
// Rational; there is no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Prints "a" or "a/b" (canonical form, denominator omitted when 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace flagpush
