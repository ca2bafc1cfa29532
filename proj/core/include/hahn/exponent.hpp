#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "hahn/rational.hpp"

namespace hahn {

/// A real number known through a rational enclosure [midpoint - radius,
/// midpoint + radius]. A zero radius means the value is exactly `midpoint`.
class GeneratorEnclosure {
 public:
  static GeneratorEnclosure exact(Rational value);
  static GeneratorEnclosure interval(Rational midpoint, Rational radius);
  /// Decimal midpoint and radius, e.g. ("3.141595", "0.000005").
  static GeneratorEnclosure from_decimal(std::string_view midpoint, std::string_view radius);
  /// pi truncated to `digits` decimals with radius 10^-digits (digits <= 60).
  static GeneratorEnclosure pi(int digits = 30);
  /// sqrt(q) bracketed by integer square roots at 10^-digits resolution.
  static GeneratorEnclosure sqrt_of(std::uint64_t q, int digits = 18);

  const Rational& midpoint() const { return midpoint_; }
  const Rational& radius() const { return radius_; }
  bool declared_rational() const { return declared_rational_; }
  bool is_exact() const { return radius_ == 0; }
  Rational lower() const { return midpoint_ - radius_; }
  Rational upper() const { return midpoint_ + radius_; }
  double approx() const { return to_double(midpoint_); }

  bool operator==(const GeneratorEnclosure&) const = default;

 private:
  GeneratorEnclosure(Rational midpoint, Rational radius, bool declared_rational);

  Rational midpoint_;
  Rational radius_;
  bool declared_rational_ = false;
};

enum class GroupKind { RationalLine, RationalPlusGenerator, LexPair };

class ExponentGroup;
using GroupPtr = std::shared_ptr<const ExponentGroup>;

/// An ordered abelian group of exponents: a subgroup of the reals generated
/// by the rationals and at most one extra real generator, optionally paired
/// lexicographically with (scaled) integers for logarithmic exponents.
class ExponentGroup {
 public:
  static GroupPtr rational_line();
  static GroupPtr with_generator(GeneratorEnclosure generator);
  /// Lexicographic pairs (alpha, beta / beta_denominator) with alpha in `first`.
  static GroupPtr lex_pair(const GroupPtr& first, std::int64_t beta_denominator = 1);

  GroupKind kind() const { return kind_; }
  bool is_lex_pair() const { return kind_ == GroupKind::LexPair; }
  /// Irrational generator of the first component, if any. Exact generators
  /// are folded into the rational coordinate and never reported here.
  const std::optional<GeneratorEnclosure>& generator() const { return generator_; }
  /// Generator as declared at construction (may be exact).
  const std::optional<GeneratorEnclosure>& declared_generator() const { return declared_; }
  GroupKind first_kind() const { return first_kind_; }
  std::int64_t beta_denominator() const { return beta_denominator_; }

  /// The first component as a group of its own (the group itself unless LexPair).
  GroupPtr first_component() const;

  bool operator==(const ExponentGroup& other) const;

 private:
  ExponentGroup() = default;

  GroupKind kind_ = GroupKind::RationalLine;
  GroupKind first_kind_ = GroupKind::RationalLine;
  std::optional<GeneratorEnclosure> declared_;
  std::optional<GeneratorEnclosure> generator_;
  std::int64_t beta_denominator_ = 1;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

enum class Ordering { Less, Equal, Greater };

/// Element `a + b*g` of the first component, paired with `beta` (in units of
/// 1/beta_denominator) for lexicographic groups.
class Exponent {
 public:
  static Exponent zero(GroupPtr group);
  /// `a + b*g`; for LexPair groups the logarithmic component is zero.
  static Exponent real(GroupPtr group, Rational a, Rational b = 0);
  static Exponent lex(GroupPtr group, Rational a, std::int64_t beta);
  static Exponent lex(GroupPtr group, Rational a, Rational b, std::int64_t beta);

  const GroupPtr& group() const { return group_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t beta() const { return beta_; }

  /// Floating value of the first component (generator at its midpoint).
  double alpha_value() const;
  /// beta / beta_denominator.
  double beta_value() const;
  bool is_zero() const { return a_ == 0 && b_ == 0 && beta_ == 0; }

  std::string to_string() const;

 private:
  Exponent(GroupPtr group, Rational a, Rational b, std::int64_t beta);

  GroupPtr group_;
  Rational a_;
  Rational b_;
  std::int64_t beta_ = 0;
};

/// Total order on a shared group. Throws UndecidableComparison when the
/// generator enclosure cannot separate the two values, GroupMismatch when
/// the groups differ.
Ordering compare(const Exponent& lhs, const Exponent& rhs);

/// Sign of the first component; throws UndecidableComparison when unresolved.
int first_component_sign(const Exponent& e);

inline bool operator<(const Exponent& l, const Exponent& r) { return compare(l, r) == Ordering::Less; }
inline bool operator>(const Exponent& l, const Exponent& r) { return compare(l, r) == Ordering::Greater; }
inline bool operator<=(const Exponent& l, const Exponent& r) { return compare(l, r) != Ordering::Greater; }
inline bool operator>=(const Exponent& l, const Exponent& r) { return compare(l, r) != Ordering::Less; }
/// Coordinate equality; exponents are canonical so this agrees with compare().
bool operator==(const Exponent& l, const Exponent& r);

Exponent add(const Exponent& l, const Exponent& r);
Exponent negate(const Exponent& e);
Exponent int_scale(std::int64_t n, const Exponent& e);

inline Exponent operator+(const Exponent& l, const Exponent& r) { return add(l, r); }
inline Exponent operator-(const Exponent& e) { return negate(e); }
inline Exponent operator-(const Exponent& l, const Exponent& r) { return add(l, negate(r)); }

bool is_positive(const Exponent& e);

/// Least N >= 0 with -beta <= N * alpha over a strictly positive support
/// (the admissibility condition for logarithmic supports). Throws
/// NotAdmissible for non-positive elements.
std::int64_t star_bound(std::span<const Exponent> support);

/// "Exact modulo e_gamma for gamma >= bound", or exact when unbounded.
class Validity {
 public:
  static Validity exact() { return Validity(); }
  static Validity below(Exponent bound) { return Validity(std::move(bound)); }

  bool is_exact() const { return !bound_.has_value(); }
  const Exponent& bound() const { return *bound_; }
  const std::optional<Exponent>& bound_opt() const { return bound_; }

  /// True when coefficients at `e` are determined.
  bool admits(const Exponent& e) const { return is_exact() || e < *bound_; }
  Validity shifted(const Exponent& by) const;

  friend Validity min(const Validity& a, const Validity& b);
  friend bool operator==(const Validity& a, const Validity& b);

 private:
  Validity() = default;
  explicit Validity(Exponent bound) : bound_(std::move(bound)) {}

  std::optional<Exponent> bound_;
};

}  // namespace hahn
