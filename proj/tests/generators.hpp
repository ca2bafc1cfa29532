#pragma once

// Hand-rolled random generators for property tests. Every generator draws
// from a caller-owned engine so failures reproduce from the printed seed.

#include <random>
#include <vector>

#include "hahn/series.hpp"

namespace hahn::testgen {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20240611;

enum class Variant { Rational, Generator, Lex };

inline const char* name(Variant v) {
  switch (v) {
    case Variant::Rational: return "rational";
    case Variant::Generator: return "generator";
    case Variant::Lex: return "lex";
  }
  return "?";
}

inline GroupPtr group_for(Variant v) {
  static const GroupPtr pi_group = ExponentGroup::with_generator(GeneratorEnclosure::pi(30));
  static const GroupPtr lex_group = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  switch (v) {
    case Variant::Rational: return ExponentGroup::rational_line();
    case Variant::Generator: return pi_group;
    case Variant::Lex: return lex_group;
  }
  return ExponentGroup::rational_line();
}

inline int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Engine& rng) {
  const int den = uniform(rng, 1, 3);
  int num = uniform(rng, -5, 5);
  if (num == 0) num = 1;
  return Rational(num, den);
}

inline Complex small_complex(Engine& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

template <class C>
C coefficient(Engine& rng) {
  if constexpr (std::is_same_v<C, Rational>) return small_rational(rng);
  else return small_complex(rng);
}

/// Strictly positive exponent of the group. Lex exponents keep alpha > 0 so
/// Neumann powers always climb past the validity order.
inline Exponent positive_exponent(Engine& rng, Variant v) {
  const GroupPtr g = group_for(v);
  switch (v) {
    case Variant::Rational: return Exponent::real(g, Rational(uniform(rng, 1, 6), 2));
    case Variant::Generator:
      if (uniform(rng, 0, 2) == 0) return Exponent::real(g, Rational(uniform(rng, 0, 1), 2), 1);
      return Exponent::real(g, Rational(uniform(rng, 1, 6), 2));
    case Variant::Lex: return Exponent::lex(g, Rational(uniform(rng, 1, 6), 2), uniform(rng, -2, 2));
  }
  return Exponent::zero(g);
}

inline Validity validity_for(Variant v) {
  const GroupPtr g = group_for(v);
  return Validity::below(v == Variant::Lex ? Exponent::lex(g, 4, 0) : Exponent::real(g, 4));
}

/// Constant terms for invertible series. Complex ones have modulus in [1, 2]
/// so the inverse's coefficient growth (and hence its rounding error) stays
/// comparable to the rational case.
template <class C>
C unit_coefficient(Engine& rng) {
  if constexpr (std::is_same_v<C, Rational>) {
    return small_rational(rng);
  } else {
    std::uniform_real_distribution<double> mod(1.0, 2.0), arg(-3.14159, 3.14159);
    return std::polar(mod(rng), arg(rng));
  }
}

/// Random series with up to `max_terms` positive-exponent terms and, if
/// requested, a nonzero constant term.
template <class C>
Series<C> series(Engine& rng, Variant v, bool with_constant, int max_terms = 4) {
  const GroupPtr g = group_for(v);
  std::vector<typename Series<C>::Term> terms;
  if (with_constant) terms.emplace_back(Exponent::zero(g), unit_coefficient<C>(rng));
  const int n = uniform(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) terms.emplace_back(positive_exponent(rng, v), coefficient<C>(rng));
  return Series<C>::from_terms(g, std::move(terms), validity_for(v));
}

}  // namespace hahn::testgen
