#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plancherel {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/r", "-p", "0.25", "1e-9", "2.5E+3" into an exact rational.
/// Throws DomainError naming the offending character position.
Rational parse_rational(std::string_view text);

/// Canonical "p/r" form ("p" when the denominator is 1).
std::string to_string(const Rational& x);

enum class Rounding { Nearest, Up, Down };

/// Scientific decimal with `digits` significant digits, e.g. "1.2345e-08".
/// Up/Down round toward +inf/-inf.
std::string to_decimal(const Rational& x, int digits = 25, Rounding mode = Rounding::Nearest);

/// Exact rational value of a string produced by to_decimal (or any decimal).
inline Rational decimal_value(std::string_view text) { return parse_rational(text); }

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

/// floor(x * 2^bits) / 2^bits
Rational round_down_dyadic(const Rational& x, unsigned long bits);

Rational abs(const Rational& x);

/// True if q is an integer >= 2.
bool is_integer_at_least_two(const Rational& q);

}  // namespace plancherel
