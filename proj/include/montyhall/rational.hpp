#pragma once

// Exact rational numbers backed by GMP, plus the parsing and decimal
// rendering used at the input/output boundary.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace montyhall {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long num, long den) { return Rational(num, den); }

/// Parses "3", "1/3" or "0.05" into an exact rational. Decimals are read
/// digit-by-digit, so "0.05" is exactly 5/100. Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Fraction in lowest terms, "n/d", or "n" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Renders `value` to `significant` significant digits with round-half-even
/// applied to the exact value. Fixed notation with trailing zeros trimmed;
/// switches to "d.ddde-XX" style only when the decimal exponent is below -4
/// or at least `significant`.
std::string to_decimal_string(const Rational& value, int significant = 12);

/// Same rendering for a double, taken as the exact binary value it holds.
std::string to_decimal_string(double value, int significant = 12);

double to_double(const Rational& value);

}  // namespace montyhall
