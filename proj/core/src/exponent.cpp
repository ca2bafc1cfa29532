#include "hahn/exponent.hpp"

#include <algorithm>

#include "hahn/error.hpp"

namespace hahn {
namespace {

constexpr std::string_view kPiDigits =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286";

Integer pow10(int n) {
  Integer p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

// Interval [lo, hi] containing a + b*g for the group's generator.
struct Interval {
  Rational lo;
  Rational hi;
};

Interval first_component_interval(const Rational& a, const Rational& b, const ExponentGroup& group) {
  if (b == 0) return {a, a};
  const auto& g = group.generator();
  if (!g) throw HahnError(ErrorKind::InvalidArgument, "generator coordinate in a group without generator");
  Rational x = a + b * g->lower();
  Rational y = a + b * g->upper();
  if (x > y) std::swap(x, y);
  return {x, y};
}

int interval_sign(const Interval& iv, const char* what) {
  if (iv.lo > 0) return 1;
  if (iv.hi < 0) return -1;
  if (iv.lo == 0 && iv.hi == 0) return 0;
  throw HahnError(ErrorKind::UndecidableComparison,
                  std::string(what) + ": generator enclosure [" + format_rational(iv.lo) + ", " +
                      format_rational(iv.hi) + "] straddles the threshold; supply a tighter enclosure");
}

void require_same(const Exponent& l, const Exponent& r) {
  if (!same_group(l.group(), r.group())) throw HahnError(ErrorKind::GroupMismatch, "exponents from different groups");
}

}  // namespace

GeneratorEnclosure::GeneratorEnclosure(Rational midpoint, Rational radius, bool declared_rational)
    : midpoint_(std::move(midpoint)), radius_(std::move(radius)), declared_rational_(declared_rational) {}

GeneratorEnclosure GeneratorEnclosure::exact(Rational value) { return {std::move(value), Rational(0), true}; }

GeneratorEnclosure GeneratorEnclosure::interval(Rational midpoint, Rational radius) {
  if (radius < 0) throw HahnError(ErrorKind::InvalidArgument, "enclosure radius must be non-negative");
  return {std::move(midpoint), std::move(radius), false};
}

GeneratorEnclosure GeneratorEnclosure::from_decimal(std::string_view midpoint, std::string_view radius) {
  return interval(parse_rational(midpoint), parse_rational(radius));
}

GeneratorEnclosure GeneratorEnclosure::pi(int digits) {
  if (digits < 1 || digits > 60) throw HahnError(ErrorKind::InvalidArgument, "pi enclosure digits must lie in [1, 60]");
  const std::string_view truncated = kPiDigits.substr(0, 2 + static_cast<std::size_t>(digits));
  const Rational lower = parse_rational(truncated);
  const Rational width(Integer(1), pow10(digits));
  return interval(lower + width / 2, width / 2);
}

GeneratorEnclosure GeneratorEnclosure::sqrt_of(std::uint64_t q, int digits) {
  if (digits < 0 || digits > 60) throw HahnError(ErrorKind::InvalidArgument, "sqrt enclosure digits must lie in [0, 60]");
  const Integer scale = pow10(digits);
  const Integer scaled = Integer(q) * scale * scale;
  const Integer s = boost::multiprecision::sqrt(scaled);
  if (s * s == scaled) return exact(Rational(s, scale));
  return interval(Rational(2 * s + 1, 2 * scale), Rational(Integer(1), 2 * scale));
}

GroupPtr ExponentGroup::rational_line() {
  static const GroupPtr line = [] {
    auto g = std::shared_ptr<ExponentGroup>(new ExponentGroup());
    return GroupPtr(g);
  }();
  return line;
}

GroupPtr ExponentGroup::with_generator(GeneratorEnclosure generator) {
  auto g = std::shared_ptr<ExponentGroup>(new ExponentGroup());
  g->kind_ = GroupKind::RationalPlusGenerator;
  g->first_kind_ = GroupKind::RationalPlusGenerator;
  if (!generator.is_exact()) g->generator_ = generator;
  g->declared_ = std::move(generator);
  return g;
}

GroupPtr ExponentGroup::lex_pair(const GroupPtr& first, std::int64_t beta_denominator) {
  if (first->is_lex_pair()) throw HahnError(ErrorKind::InvalidArgument, "lexicographic groups cannot be nested");
  if (beta_denominator < 1) throw HahnError(ErrorKind::InvalidArgument, "beta denominator must be positive");
  auto g = std::shared_ptr<ExponentGroup>(new ExponentGroup(*first));
  g->kind_ = GroupKind::LexPair;
  g->beta_denominator_ = beta_denominator;
  return g;
}

GroupPtr ExponentGroup::first_component() const {
  if (!is_lex_pair()) return std::shared_ptr<ExponentGroup>(new ExponentGroup(*this));
  auto g = std::shared_ptr<ExponentGroup>(new ExponentGroup(*this));
  g->kind_ = first_kind_;
  g->beta_denominator_ = 1;
  return g;
}

bool ExponentGroup::operator==(const ExponentGroup& other) const {
  return kind_ == other.kind_ && first_kind_ == other.first_kind_ && declared_ == other.declared_ &&
         beta_denominator_ == other.beta_denominator_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

Exponent::Exponent(GroupPtr group, Rational a, Rational b, std::int64_t beta)
    : group_(std::move(group)), a_(std::move(a)), b_(std::move(b)), beta_(beta) {
  if (!group_) throw HahnError(ErrorKind::InvalidArgument, "exponent without group");
  if (b_ != 0 && !group_->generator()) {
    if (group_->declared_generator()) {
      a_ += b_ * group_->declared_generator()->midpoint();
      b_ = 0;
    } else {
      throw HahnError(ErrorKind::InvalidArgument, "generator coordinate outside the rational line");
    }
  }
  if (beta_ != 0 && !group_->is_lex_pair())
    throw HahnError(ErrorKind::InvalidArgument, "logarithmic coordinate outside a lexicographic group");
}

Exponent Exponent::zero(GroupPtr group) { return {std::move(group), 0, 0, 0}; }
Exponent Exponent::real(GroupPtr group, Rational a, Rational b) { return {std::move(group), std::move(a), std::move(b), 0}; }
Exponent Exponent::lex(GroupPtr group, Rational a, std::int64_t beta) { return {std::move(group), std::move(a), 0, beta}; }
Exponent Exponent::lex(GroupPtr group, Rational a, Rational b, std::int64_t beta) {
  return {std::move(group), std::move(a), std::move(b), beta};
}

double Exponent::alpha_value() const {
  double v = to_double(a_);
  if (b_ != 0) v += to_double(b_) * group_->generator()->approx();
  return v;
}

double Exponent::beta_value() const {
  return static_cast<double>(beta_) / static_cast<double>(group_->beta_denominator());
}

std::string Exponent::to_string() const {
  std::string first;
  if (b_ == 0) {
    first = format_rational(a_);
  } else if (a_ == 0) {
    first = format_rational(b_) + "*g";
  } else {
    first = format_rational(a_) + (b_ > 0 ? "+" : "") + format_rational(b_) + "*g";
  }
  if (!group_->is_lex_pair()) return first;
  return "(" + first + "," + format_rational(Rational(beta_, group_->beta_denominator())) + ")";
}

Ordering compare(const Exponent& lhs, const Exponent& rhs) {
  require_same(lhs, rhs);
  const int s = interval_sign(first_component_interval(lhs.a() - rhs.a(), lhs.b() - rhs.b(), *lhs.group()), "compare");
  if (s > 0) return Ordering::Greater;
  if (s < 0) return Ordering::Less;
  if (lhs.beta() < rhs.beta()) return Ordering::Less;
  if (lhs.beta() > rhs.beta()) return Ordering::Greater;
  return Ordering::Equal;
}

int first_component_sign(const Exponent& e) {
  return interval_sign(first_component_interval(e.a(), e.b(), *e.group()), "sign");
}

bool operator==(const Exponent& l, const Exponent& r) {
  return same_group(l.group(), r.group()) && l.a() == r.a() && l.b() == r.b() && l.beta() == r.beta();
}

Exponent add(const Exponent& l, const Exponent& r) {
  require_same(l, r);
  return Exponent::lex(l.group(), l.a() + r.a(), l.b() + r.b(), l.beta() + r.beta());
}

Exponent negate(const Exponent& e) { return Exponent::lex(e.group(), -e.a(), -e.b(), -e.beta()); }

Exponent int_scale(std::int64_t n, const Exponent& e) {
  return Exponent::lex(e.group(), e.a() * n, e.b() * n, e.beta() * n);
}

bool is_positive(const Exponent& e) { return compare(e, Exponent::zero(e.group())) == Ordering::Greater; }

std::int64_t star_bound(std::span<const Exponent> support) {
  std::int64_t n = 0;
  for (const Exponent& e : support) {
    const Interval alpha = first_component_interval(e.a(), e.b(), *e.group());
    const int s = interval_sign(alpha, "star_bound");
    if (s < 0 || (s == 0 && e.beta() <= 0))
      throw HahnError(ErrorKind::NotAdmissible, "support element " + e.to_string() + " is not positive");
    if (e.beta() >= 0) continue;
    // least N with N * alpha >= t, certified over the whole enclosure
    const Rational t(-e.beta(), e.group()->beta_denominator());
    const Integer from_upper = ceil(t / alpha.hi);
    const Integer from_lower = ceil(t / alpha.lo);
    if (from_upper != from_lower)
      throw HahnError(ErrorKind::UndecidableComparison,
                      "star_bound: generator enclosure too wide to fix N for " + e.to_string());
    n = std::max(n, from_lower.convert_to<std::int64_t>());
  }
  return n;
}

Validity Validity::shifted(const Exponent& by) const {
  if (is_exact()) return *this;
  return below(*bound_ + by);
}

Validity min(const Validity& a, const Validity& b) {
  if (a.is_exact()) return b;
  if (b.is_exact()) return a;
  return *a.bound_ <= *b.bound_ ? a : b;
}

bool operator==(const Validity& a, const Validity& b) {
  if (a.is_exact() || b.is_exact()) return a.is_exact() && b.is_exact();
  return *a.bound_ == *b.bound_;
}

}  // namespace hahn
