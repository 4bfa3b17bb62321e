#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace latint {

/// Exact rational number; every index value and coefficient is carried in this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal literal such as "-0.125" or "1e-3".
/// The decimal form is converted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

/// Exact rational from the shortest round-trip decimal spelling of a double.
Rational rational_from_double(double value);

/// Canonical "p/q" string, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with `significant` digits, round-half-even, %g layout.
std::string to_decimal(const Rational& value, int significant = 12);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// a! * b! / c!
Rational factorial_ratio(unsigned a, unsigned b, unsigned c);

}  // namespace latint
