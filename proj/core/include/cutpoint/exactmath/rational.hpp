#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cutpoint {

// Arbitrary-precision integers and canonical rationals (denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1). GMP keeps mpq_class canonical through
// every arithmetic operation; the helpers below keep it canonical on entry.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// Accepts "p/q", "p", with optional sign and surrounding blanks.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Exact binary64 -> rational conversion (every finite double is a dyadic rational).
Rational exact_from_double(double value);

double to_double(const Rational& value);

Rational rational_pow(const Rational& base, unsigned long exponent);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace cutpoint
