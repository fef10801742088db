#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dillab {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { Down, Up, Nearest };

/// num / den in canonical form; throws InvalidArgument for den == 0.
Rational ratio(const Integer& num, const Integer& den);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
/// Negative exponents invert the base; zero base with negative exponent throws.
Rational pow(const Rational& base, long exponent);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// a / 2^bits
Rational dyadic(const Integer& numerator, unsigned long bits);

/// Rounds q onto the grid 2^-bits in the requested direction.
Rational round_dyadic(const Rational& q, unsigned long bits, Rounding dir);

/// Fixed-point decimal with `digits` digits after the point. Down/Up round
/// toward -inf/+inf so a pair (lo Down, hi Up) is still a valid enclosure.
std::string to_decimal(const Rational& q, unsigned digits, Rounding dir = Rounding::Nearest);

/// Decimal with `significant` significant digits (fixed-point notation, no
/// exponent); small magnitudes get as many leading zeros as needed.
std::string to_decimal_sig(const Rational& q, unsigned significant, Rounding dir);

/// Parses "p", "p/q" or a finite decimal such as "1e-9" or "0.05" exactly.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

double to_double(const Rational& q);

/// True iff the integer fits in a signed 64-bit value.
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace dillab
