#include "hahn/rational.hpp"

#include <cctype>
#include <cmath>

#include "hahn/error.hpp"

namespace hahn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw HahnError(ErrorKind::ParseError, "malformed number '" + std::string(whole) + "'");
  Integer value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw HahnError(ErrorKind::ParseError, "malformed number '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Integer pow10(long n) {
  Integer p = 1;
  for (long i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw HahnError(ErrorKind::ParseError, "empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(trim(s.substr(0, slash)), s);
    Integer q = parse_integer(trim(s.substr(slash + 1)), s);
    if (q == 0) throw HahnError(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    Integer ex = parse_integer(s.substr(e + 1), s);
    if (abs(ex) > 10000) throw HahnError(ErrorKind::ParseError, "exponent out of range in '" + std::string(s) + "'");
    exponent = ex.convert_to<long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
    fraction_digits = static_cast<long>(mantissa.size() - dot - 1);
  } else {
    digits = std::string(mantissa);
  }
  if (digits.empty()) throw HahnError(ErrorKind::ParseError, "malformed number '" + std::string(s) + "'");
  Integer numerator = parse_integer(digits, s);
  if (negative) numerator = -numerator;
  const long shift = exponent - fraction_digits;
  if (shift >= 0) return Rational(numerator * pow10(shift));
  return Rational(numerator, pow10(-shift));
}

std::string format_rational(const Rational& value) {
  const Integer p = numerator(value);
  const Integer q = denominator(value);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer floor(const Rational& value) {
  const Integer n = numerator(value);
  const Integer d = denominator(value);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil(const Rational& value) {
  const Integer n = numerator(value);
  const Integer d = denominator(value);
  Integer q = n / d;
  if (n > 0 && q * d != n) q += 1;
  return q;
}

Integer round_nearest(const Rational& value) {
  const Rational half(1, 2);
  return value >= 0 ? floor(value + half) : Integer(-floor(-value + half));
}

int sign(const Rational& value) { return value > 0 ? 1 : (value < 0 ? -1 : 0); }

Rational from_double(double value) {
  if (!std::isfinite(value)) throw HahnError(ErrorKind::InvalidArgument, "non-finite value has no rational form");
  return Rational(value);
}

}  // namespace hahn
