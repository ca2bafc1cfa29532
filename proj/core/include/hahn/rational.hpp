#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hahn {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "p/q", or a decimal literal such as "-3.14159" or "1e-8"
/// into an exact rational. Throws HahnError(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Nearest integer, ties rounded away from zero.
Integer round_nearest(const Rational& value);

int sign(const Rational& value);

/// Exact conversion of a finite double.
Rational from_double(double value);

}  // namespace hahn
