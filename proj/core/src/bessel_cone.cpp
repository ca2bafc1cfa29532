#include "hahn/bessel_cone.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace hahn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearIntegerSin = 1e-8;
const Complex kI(0.0, 1.0);

double factorial(int n) { return std::tgamma(n + 1.0); }

/// sin(pi v) and e^{-i pi v} with the argument reduced exactly.
struct Trig {
  double sin_pi;
  Complex phase;  // e^{-i nu pi}
};

Trig reduced_trig(const Rational& v) {
  const Integer n = round_nearest(v);
  const double d = to_double(v - Rational(n));
  const bool odd = (n % 2) != 0;
  const double s = std::sin(kPi * d) * (odd ? -1.0 : 1.0);
  const double c = std::cos(kPi * d) * (odd ? -1.0 : 1.0);
  return {s, Complex(c, -s)};
}

Trig order_trig(const Order& nu) {
  if (nu.rational_value()) return reduced_trig(*nu.rational_value());
  return reduced_trig(nu.generator()->midpoint());
}

/// Coefficient arrays of the kernel at fixed (x, y), x <= y.
class CoefficientEngine {
 public:
  CoefficientEngine(const Order& nu, int K) : nu_(nu), K_(K) {
    if (K < 1) throw HahnError(ErrorKind::InvalidArgument, "expansion needs K >= 1");
    v_ = nu.value();
    if (nu.is_integer()) {
      n_ = nu.integer_value();
      a_ = h_coeffs(n_, K);
      branch_ = n_ == 0 ? KernelBranch::NuZeroMeromorphic : KernelBranch::Integer;
      // psi(m+1) + psi(n+m+1) over m! (n+m)!, signs included
      psi_.resize(static_cast<std::size_t>(K));
      for (int m = 0; m < K; ++m)
        psi_[m] = (digamma(m + 1) + digamma(n_ + m + 1)) * (m % 2 ? -1.0 : 1.0) / (factorial(m) * factorial(n_ + m));
      finite_.resize(static_cast<std::size_t>(std::max(n_, 0)));
      for (int j = 0; j < n_; ++j) finite_[j] = factorial(n_ - j - 1) / factorial(j);
    } else {
      trig_ = order_trig(nu);
      if (std::abs(trig_.sin_pi) < kNearIntegerSin)
        throw HahnError(ErrorKind::NearIntegerOrder,
                        "|sin(nu pi)| below 1e-8; use the integer branch or a tighter enclosure");
      a_ = h_coeffs(v_, K);
      b_ = h_coeffs(-v_, K);
    }
  }

  KernelBranch branch() const { return branch_; }

  KernelCoefficients at(double x, double y) const {
    if (!(x > 0) || !(y > 0)) throw HahnError(ErrorKind::InvalidArgument, "kernel points must be positive");
    if (x > y) std::swap(x, y);
    KernelCoefficients out;
    out.branch = branch_;
    const std::size_t K = static_cast<std::size_t>(K_);
    std::vector<double> xs(K), ys(K);  // a_i x^{2i}, a_j y^{2j}
    double x2 = 1, y2 = 1;
    for (std::size_t i = 0; i < K; ++i) {
      xs[i] = a_[i] * x2;
      ys[i] = a_[i] * y2;
      x2 *= x * x;
      y2 *= y * y;
    }
    const double sq = std::sqrt(x * y);
    if (branch_ == KernelBranch::NonInteger) {
      std::vector<double> yb(K);
      y2 = 1;
      for (std::size_t j = 0; j < K; ++j) {
        yb[j] = b_[j] * y2;
        y2 *= y * y;
      }
      const double s = trig_.sin_pi;
      const double reg_pref = kPi / (2 * s) * sq * std::pow(x / y, v_);
      const Complex shift_pref = -(kPi / 2) * trig_.phase / (std::pow(4.0, v_) * s) * std::pow(x * y, v_ + 0.5);
      out.regular.resize(K);
      out.shifted.resize(K);
      for (std::size_t k = 0; k < K; ++k) {
        double c = 0, d = 0;
        for (std::size_t i = 0; i <= k; ++i) {
          c += xs[i] * ys[k - i];
          d += xs[i] * yb[k - i];
        }
        out.regular[k] = reg_pref * d;
        out.shifted[k] = shift_pref * c;
      }
      return out;
    }
    const int n = n_;
    const double quarter_n = std::pow(x * y / 4.0, n);
    const double ratio_n = std::pow(x / y, n);
    const double half_y2 = (y / 2) * (y / 2);
    std::vector<double> q(K, 0.0), p(K, 0.0), t(K, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
      if (static_cast<int>(k) >= n) {
        const std::size_t j = k - static_cast<std::size_t>(n);
        double hh = 0;
        for (std::size_t i = 0; i <= j; ++i) hh += xs[i] * ys[j - i];
        q[k] = quarter_n * hh;
        double tt = 0;
        double yp = 1;
        for (std::size_t m = 0; m <= j; ++m) {
          tt += xs[j - m] * psi_[m] * yp;
          yp *= half_y2;
        }
        t[k] = quarter_n * tt;
      }
      double pp = 0;
      double yp = 1;
      for (int j = 0; j < n && j <= static_cast<int>(k); ++j) {
        pp += xs[k - static_cast<std::size_t>(j)] * finite_[j] * yp;
        yp *= half_y2;
      }
      p[k] = pp;
    }
    const Complex log_factor = 1.0 + (2.0 * kI / kPi) * std::log(y / 2);
    out.regular.resize(K);
    out.logarithmic.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
      out.logarithmic[k] = sq * q[k];
      out.regular[k] = (kI * kPi / 2.0) * sq * (log_factor * q[k] - (kI / kPi) * ratio_n * p[k] - (kI / kPi) * t[k]);
    }
    return out;
  }

 private:
  Order nu_;
  int K_;
  double v_ = 0;
  int n_ = 0;
  KernelBranch branch_ = KernelBranch::NonInteger;
  Trig trig_{0, 0};
  std::vector<double> a_, b_, psi_, finite_;
};

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

// ---- Order ----

Order Order::rational(Rational value) {
  if (value < 0) throw HahnError(ErrorKind::InvalidArgument, "orders must be non-negative");
  Order o;
  o.rational_ = std::move(value);
  return o;
}

Order Order::enclosure(GeneratorEnclosure g) {
  if (g.is_exact()) return rational(g.midpoint());
  if (g.lower() < 0) throw HahnError(ErrorKind::InvalidArgument, "orders must be non-negative");
  Order o;
  o.generator_ = std::move(g);
  return o;
}

Order Order::parse(std::string_view text, int digits) {
  if (text == "pi") return enclosure(GeneratorEnclosure::pi(digits));
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    const Rational q = parse_rational(text.substr(5, text.size() - 6));
    if (denominator(q) != 1 || q < 0) throw HahnError(ErrorKind::ParseError, "sqrt() takes a non-negative integer");
    return enclosure(GeneratorEnclosure::sqrt_of(numerator(q).convert_to<std::uint64_t>(), digits));
  }
  return rational(parse_rational(text));
}

double Order::value() const { return rational_ ? to_double(*rational_) : generator_->approx(); }

bool Order::is_integer() const { return rational_ && denominator(*rational_) == 1; }

int Order::integer_value() const {
  if (!is_integer()) throw HahnError(ErrorKind::InvalidArgument, "order is not an integer");
  return numerator(*rational_).convert_to<int>();
}

double Order::sin_pi() const { return order_trig(*this).sin_pi; }

std::string Order::to_string() const {
  if (rational_) return format_rational(*rational_);
  return format_double(generator_->approx());
}

std::string_view to_string(KernelBranch branch) {
  switch (branch) {
    case KernelBranch::NonInteger: return "NonInteger";
    case KernelBranch::Integer: return "Integer";
    case KernelBranch::NuZeroMeromorphic: return "NuZeroMeromorphic";
  }
  return "Unknown";
}

std::string_view to_string(BoundPart part) {
  switch (part) {
    case BoundPart::A1: return "a1";
    case BoundPart::A2: return "a2";
    case BoundPart::B1: return "b1";
    case BoundPart::B2: return "b2";
  }
  return "unknown";
}

std::string_view to_string(HsWeight weight) {
  return weight == HsWeight::Exponential ? "exponential" : "gaussian";
}

// ---- expansions ----

KernelCoefficients kernel_coefficients(const Order& nu, double x, double y, int K) {
  return CoefficientEngine(nu, K).at(x, y);
}

KernelExpansion resolvent_kernel_series(const Order& nu, double x, double y, int K) {
  const CoefficientEngine engine(nu, K);
  const KernelCoefficients coeffs = engine.at(x, y);
  using Term = Series<Complex>::Term;
  std::vector<Term> terms;
  GroupPtr group;
  Validity validity = Validity::exact();
  if (coeffs.branch == KernelBranch::NonInteger) {
    group = nu.rational_value() ? ExponentGroup::rational_line() : ExponentGroup::with_generator(*nu.generator());
    const Exponent bound = Exponent::real(group, 2 * K);
    validity = Validity::below(bound);
    for (int k = 0; k < K; ++k) {
      terms.emplace_back(Exponent::real(group, 2 * k), coeffs.regular[k]);
      const Exponent e = nu.rational_value() ? Exponent::real(group, 2 * *nu.rational_value() + 2 * k)
                                             : Exponent::real(group, 2 * k, 2);
      if (e < bound) terms.emplace_back(e, coeffs.shifted[k]);
    }
  } else {
    group = ExponentGroup::lex_pair(ExponentGroup::rational_line());
    validity = Validity::below(Exponent::lex(group, 2 * K, -1));
    for (int k = 0; k < K; ++k) {
      terms.emplace_back(Exponent::lex(group, 2 * k, -1), coeffs.logarithmic[k]);
      terms.emplace_back(Exponent::lex(group, 2 * k, 0), coeffs.regular[k]);
    }
  }
  return {nu, std::min(x, y), std::max(x, y), coeffs.branch, K,
          Series<Complex>::from_terms(group, std::move(terms), validity)};
}

Complex resolvent_kernel_direct(const Order& nu, const LogPoint& lambda, double x, double y) {
  if (!(x > 0) || !(y > 0)) throw HahnError(ErrorKind::InvalidArgument, "kernel points must be positive");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const LogPoint at_lo(lambda.r * lo, lambda.phi);
  const LogPoint at_hi(lambda.r * hi, lambda.phi);
  double v = nu.value();
  if (!nu.is_integer() && std::abs(nu.sin_pi()) < kNearIntegerSin)
    throw HahnError(ErrorKind::NearIntegerOrder, "order too close to an integer for the non-integer Hankel formula");
  if (nu.is_integer()) v = nu.integer_value();
  return (kI * kPi / 2.0) * std::sqrt(x * y) * bessel_J(v, at_lo) * hankel_H1(v, at_hi);
}

// ---- coefficient bounds ----

BoundReport coeff_bound_check(const Order& nu, double x, double y, int k, double R, BoundPart part,
                              BoundParams params) {
  if (k < 0 || !(R > 0)) throw HahnError(ErrorKind::InvalidArgument, "bound check needs k >= 0 and R > 0");
  if (x > y) std::swap(x, y);
  const bool a_part = part == BoundPart::A1 || part == BoundPart::A2;
  if (a_part == nu.is_integer())
    throw HahnError(ErrorKind::InvalidArgument, "a-bounds need a non-integer order, b-bounds an integer order");
  const KernelCoefficients coeffs = kernel_coefficients(nu, x, y, k + 1);
  const std::size_t ki = static_cast<std::size_t>(k);
  const double Rk = std::pow(R, -2.0 * k);
  const double growth = std::exp(R * (x + y));
  BoundReport rep;
  rep.part = part;
  rep.k = k;
  rep.R = R;
  const double v = nu.value();
  switch (part) {
    case BoundPart::A1: {
      // f1 coefficients: the series coefficient divided by i pi / 2
      rep.lhs = std::abs(coeffs.shifted[ki]) * 2 / kPi;
      const double s = std::abs(nu.sin_pi());
      rep.rhs = Rk * std::pow(x * y, v + 0.5) * growth / (std::pow(4.0, v) * s * std::pow(std::tgamma(v + 1), 2));
      break;
    }
    case BoundPart::A2: {
      if (x < params.c || R < params.r0)
        throw HahnError(ErrorKind::InvalidArgument, "the f2 bound needs x >= c and R >= r0");
      rep.lhs = std::abs(coeffs.regular[ki]) * 2 / kPi;
      const double s = std::abs(nu.sin_pi());
      const double tau = kPi / 2 * std::abs(v * v - 0.25) / (params.r0 * params.c);
      const double c_nu = std::sqrt(2 / kPi) * std::pow(2.0, v) * (1 + tau * std::exp(tau)) / (s * std::tgamma(v + 1));
      const double c2 = c_nu * std::pow(params.r0, -v);
      rep.rhs = Rk * c2 / std::sqrt(R) * std::sqrt(x) * std::pow(x / y, v) * growth;
      break;
    }
    case BoundPart::B1: {
      const int n = nu.integer_value();
      rep.lhs = std::abs(coeffs.logarithmic[ki]);
      rep.rhs = Rk * std::sqrt(x * y) * std::pow(R / 2, 2 * n) / std::pow(factorial(n), 2) * growth;
      break;
    }
    case BoundPart::B2: {
      const int n = nu.integer_value();
      rep.lhs = std::abs(coeffs.regular[ki]);
      const double sq = std::sqrt(x * y);
      const double t1 = kPi / 2 * sq * std::abs(1.0 + (2.0 * kI / kPi) * std::log(y / 2)) * std::pow(x * y, n) *
                        std::pow(R / 2, 2 * n) * growth / std::pow(factorial(n), 2);
      double psum = 0;
      for (int j = 0; j < n; ++j) psum += factorial(n - j - 1) / factorial(j) * std::pow(R * y / 2, 2 * j);
      const double t2 = 0.5 * sq * std::pow(x / y, n) * std::exp(R * x) / factorial(n) * psum;
      double ssum = 0;
      for (int m = 0; m < 400; ++m) {
        const double term = std::abs(digamma(m + 1) + digamma(n + m + 1)) *
                            std::exp(2 * m * std::log(R * y / 2) - std::lgamma(m + 1.0) - std::lgamma(n + m + 1.0));
        ssum += term;
        if (m > R * y && term < 1e-18 * ssum) break;
      }
      const double t3 = 0.5 * sq * std::pow(x * y / 4, n) * std::pow(R, 2 * n) * std::exp(R * x) / factorial(n) * ssum;
      rep.rhs = Rk * (t1 + t2 + t3);
      break;
    }
  }
  rep.pass = rep.lhs <= rep.rhs;
  return rep;
}

// ---- spectra and families ----

namespace {

Integer binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  Integer r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

std::vector<SphereMode> sphere_spectrum(int n, int k_max) {
  if (n < 1 || k_max < 0) throw HahnError(ErrorKind::InvalidArgument, "sphere spectrum needs n >= 1, k_max >= 0");
  std::vector<SphereMode> out;
  for (int k = 0; k <= k_max; ++k) {
    const Integer m = binomial(n + k, n) - binomial(n + k - 2, n);
    if (m > std::numeric_limits<std::int64_t>::max())
      throw HahnError(ErrorKind::InvalidArgument, "multiplicity overflows 64 bits");
    out.push_back({k, Rational(n - 1, 2) + k, m.convert_to<std::int64_t>()});
  }
  return out;
}

std::vector<FamilyMember> OrderFamily::materialize(int digits) const {
  std::vector<FamilyMember> out;
  if (const auto* list = std::get_if<ExplicitList>(&generator)) {
    for (const auto& m : list->members)
      if (m.multiplicity < 1) throw HahnError(ErrorKind::InvalidArgument, "multiplicities must be >= 1");
    return list->members;
  }
  if (const auto* sphere = std::get_if<SphereSpectrum>(&generator)) {
    for (const auto& mode : sphere_spectrum(sphere->n, sphere->k_max))
      out.push_back({Order::rational(mode.nu), mode.multiplicity});
    return out;
  }
  const auto& sq = std::get<SqrtIntegers>(generator);
  for (std::int64_t q = 0; q <= sq.q_max; ++q)
    out.push_back({Order::enclosure(GeneratorEnclosure::sqrt_of(static_cast<std::uint64_t>(q), digits)), 1});
  return out;
}

namespace {

void record_witness(std::vector<SuitabilityWitness>& top, SuitabilityWitness w) {
  auto better = [](const SuitabilityWitness& a, const SuitabilityWitness& b) {
    return a.value != b.value ? a.value > b.value : a.nu < b.nu;
  };
  if (top.size() == 5 && !better(w, top.back())) return;
  top.insert(std::upper_bound(top.begin(), top.end(), w, better), std::move(w));
  if (top.size() > 5) top.pop_back();
}

double suitability_value(double nu, double abs_sin, double kappa) {
  return std::exp(-(nu * std::log(2 * kappa) + std::log(abs_sin) + std::lgamma(nu + 1)));
}

}  // namespace

SuitabilityReport kappa_suitable(const OrderFamily& family, double kappa, double bound) {
  if (!(kappa > 0)) throw HahnError(ErrorKind::InvalidArgument, "kappa must be positive");
  SuitabilityReport rep;
  if (const auto* sq = std::get_if<SqrtIntegers>(&family.generator)) {
    for (std::int64_t q = 1; q <= sq->q_max; ++q) {
      auto n = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q)));
      while (n * n > q) --n;
      while ((n + 1) * (n + 1) <= q) ++n;
      if (n * n == q) continue;
      ++rep.non_integer_count;
      const long double root = std::sqrt(static_cast<long double>(q));
      const long double below = static_cast<long double>(q - n * n) / (root + n);
      const long double above = static_cast<long double>((n + 1) * (n + 1) - q) / (n + 1 + root);
      const double d = static_cast<double>(std::min(below, above));
      const double s = std::sin(kPi * d);
      const double nu = static_cast<double>(root);
      // min(sqrt q - n, n + 1 - sqrt q) > 1/(2(n+1)) in exact integer form
      const __int128 np1 = n + 1;
      const __int128 lhs = 4 * np1 * np1 * q;
      const __int128 lo = 2 * static_cast<__int128>(n) * np1 + 1;
      const __int128 hi = 2 * np1 * np1 - 1;
      ++rep.gap_checked;
      if (!(lhs > lo * lo && lhs < hi * hi)) ++rep.gap_violations;
      if (!(1.0 / ((nu + 1) * s) < 1.0)) ++rep.bound_one_violations;
      if (!(1.0 / (nu * s) < 1.5)) ++rep.bound_three_halves_violations;
      const double val = suitability_value(nu, s, kappa);
      rep.sup_observed = std::max(rep.sup_observed, val);
      record_witness(rep.witnesses, {"sqrt(" + std::to_string(q) + ")", nu, val});
    }
  } else {
    for (const FamilyMember& m : family.materialize()) {
      if (m.nu.is_integer()) continue;
      ++rep.non_integer_count;
      const double val = suitability_value(m.nu.value(), std::abs(m.nu.sin_pi()), kappa);
      rep.sup_observed = std::max(rep.sup_observed, val);
      record_witness(rep.witnesses, {m.nu.to_string(), m.nu.value(), val});
    }
  }
  rep.pass = rep.sup_observed <= bound && rep.gap_violations == 0 && rep.bound_one_violations == 0 &&
             rep.bound_three_halves_violations == 0;
  return rep;
}

// ---- cone kernel ----

ConeKernel cone_kernel_modes(const OrderFamily& family, double x, double y, int K) {
  ConeKernel out;
  std::set<std::string> negatives;
  bool all_rational = true;
  for (const FamilyMember& m : family.materialize()) {
    KernelExpansion e = resolvent_kernel_series(m.nu, x, y, K);
    const Exponent zero = Exponent::zero(e.series.group());
    for (const auto& [exp, c] : e.series.terms())
      if (exp < zero) negatives.insert(exp.to_string());
    out.report.total_terms += e.series.size();
    if (m.nu.rational_value() && *m.nu.rational_value() == 0) out.report.contains_nu_zero = true;
    if (!m.nu.rational_value()) all_rational = false;
    out.modes.push_back({m.nu, m.multiplicity, std::move(e)});
  }
  out.report.negative_exponents.assign(negatives.begin(), negatives.end());
  out.report.holomorphic = negatives.empty();
  out.report.structure_ok = out.report.contains_nu_zero
                                ? out.report.negative_exponents == std::vector<std::string>{"(0,-1)"}
                                : negatives.empty();

  if (all_rational && !out.modes.empty()) {
    const GroupPtr group = ExponentGroup::lex_pair(ExponentGroup::rational_line());
    const Validity validity = Validity::below(Exponent::lex(group, 2 * K, -1));
    Series<Complex> acc(group, validity);
    for (const ConeMode& mode : out.modes) {
      std::vector<Series<Complex>::Term> mapped;
      const auto weight = static_cast<double>(mode.multiplicity);
      for (const auto& [exp, c] : mode.expansion.series.terms())
        mapped.emplace_back(Exponent::lex(group, exp.a(), exp.beta()), weight * c);
      acc = add(acc, Series<Complex>::from_terms(group, std::move(mapped), validity));
    }
    out.combined = std::move(acc);
  }
  return out;
}

Complex s1_assemble(const ConeKernel& kernel, const LogPoint& lambda, double theta_p, double theta_q) {
  Complex sum = 0.0;
  for (const ConeMode& mode : kernel.modes) {
    if (!mode.nu.is_integer()) throw HahnError(ErrorKind::InvalidArgument, "S^1 modes have integer orders");
    const int k = mode.nu.integer_value();
    if (mode.multiplicity != (k == 0 ? 1 : 2))
      throw HahnError(ErrorKind::InvalidArgument, "S^1 modes have multiplicity 1 (k = 0) or 2");
    const double angular = k == 0 ? 1.0 : 2.0 * std::cos(k * (theta_p - theta_q));
    sum += series_eval(mode.expansion.series, lambda).value * angular / (2 * kPi);
  }
  return sum;
}

// ---- weighted Hilbert-Schmidt bounds ----

namespace {

struct Separable {
  double K;
  double p;  // power of min(x, y)
  double q;  // power of max(x, y)
  std::string label;
};

std::vector<Separable> majorant_terms(const Order& nu, int part, double R, double c) {
  const double v = nu.value();
  std::vector<Separable> terms;
  if (!nu.is_integer()) {
    const double s = std::abs(nu.sin_pi());
    if (part == 1) {
      terms.push_back({1 / (std::pow(4.0, v) * s * std::pow(std::tgamma(v + 1), 2)), v + 0.5, v + 0.5, "a1"});
    } else {
      const double tau = kPi / 2 * std::abs(v * v - 0.25) / (R * c);
      const double K = std::pow(R, v - 0.5) * std::pow(2.0, -v) * std::sqrt(2 / kPi) * (1 + tau * std::exp(tau)) /
                       (s * std::tgamma(v + 1));
      terms.push_back({K, v + 0.5, 0.0, "a2"});
    }
    return terms;
  }
  const int n = nu.integer_value();
  const double k1 = std::pow(R / 2, 2 * n) / std::pow(factorial(n), 2);
  if (part == 1) {
    terms.push_back({k1, n + 0.5, n + 0.5, "b1"});
    return terms;
  }
  const double ell = std::max(0.0, std::log(2 / c));
  terms.push_back({kPi / 2 * k1 * (1 + 2 * ell / kPi), n + 0.5, n + 0.5, "b2:log-const"});
  terms.push_back({k1 / 2, n + 0.5, n + 1.5, "b2:log-linear"});
  if (n >= 1) terms.push_back({1.0 / (2 * n), 0.5, 0.5, "b2:finite-sum"});
  // s_n = sup_m |psi(m+1) + psi(n+m+1)| m! / (n+m)!
  double s_n = 0;
  for (int m = 0; m < 2000; ++m)
    s_n = std::max(s_n, std::abs(digamma(m + 1) + digamma(n + m + 1)) *
                            std::exp(std::lgamma(m + 1.0) - std::lgamma(n + m + 1.0)));
  terms.push_back({0.5 * std::pow(R * R / 4, n) * s_n / factorial(n), n + 0.5, n + 0.5, "b2:digamma"});
  return terms;
}

/// int_lower^inf t^p w_R(t) dt, majorized in closed form.
double moment(double p, double lower, const HsParams& params) {
  if (params.weight == HsWeight::Exponential) {
    const double beta = params.kappa - 2 * params.R;
    return boost::math::tgamma(p + 1, beta * lower) / std::pow(beta, p + 1);
  }
  const double half = params.kappa / 2;
  return boost::math::tgamma((p + 1) / 2, half * lower * lower) / (2 * std::pow(half, (p + 1) / 2));
}

double weight(double t, const HsParams& params) {
  return params.weight == HsWeight::Exponential ? std::exp(-params.kappa * t) : std::exp(-params.kappa * t * t);
}

}  // namespace

HsReport hs_bound_check(const Order& nu, const HsParams& params) {
  if (!(nu.value() > 0)) throw HahnError(ErrorKind::InvalidArgument, "the weighted bounds need nu > 0");
  if (params.part != 1 && params.part != 2) throw HahnError(ErrorKind::InvalidArgument, "part must be 1 or 2");
  if (!(params.c > 0) || !(params.kappa > 0) || !(params.R > 0) || params.k < 0 || !(params.cutoff > params.c))
    throw HahnError(ErrorKind::InvalidArgument, "need c, kappa, R > 0, k >= 0 and cutoff > c");
  if (params.weight == HsWeight::Exponential && !(2 * params.R < params.kappa))
    throw HahnError(ErrorKind::InvalidArgument, "exponential weight needs 2R < kappa");
  if (params.weight == HsWeight::Gaussian && !(params.R <= params.c * params.kappa / 4))
    throw HahnError(ErrorKind::InvalidArgument, "gaussian weight needs R <= c kappa / 4");

  const CoefficientEngine engine(nu, params.k + 1);
  const std::size_t k = static_cast<std::size_t>(params.k);
  const bool integer = nu.is_integer();
  auto coefficient = [&](double x, double y) {
    const KernelCoefficients cf = engine.at(x, y);
    if (integer) return std::abs(params.part == 1 ? cf.logarithmic[k] : cf.regular[k]);
    return std::abs(params.part == 1 ? cf.shifted[k] : cf.regular[k]) * 2 / kPi;
  };

  using Gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& abscissa = Gauss::abscissa();
  const auto& weights = Gauss::weights();
  // symmetric 10-point rule stored as the non-negative half
  std::vector<std::pair<double, double>> rule;
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    rule.emplace_back(abscissa[i], weights[i]);
    if (abscissa[i] != 0) rule.emplace_back(-abscissa[i], weights[i]);
  }
  const double c = params.c;
  const double L = params.cutoff;
  auto triangle = [&](int panels) {
    // c <= x <= y <= L, with x = c + (y - c) t
    double total = 0;
    const double hy = (L - c) / panels;
    const double ht = 1.0 / panels;
    for (int py = 0; py < panels; ++py)
      for (const auto& [ay, wy] : rule) {
        const double y = c + hy * (py + 0.5 * (ay + 1));
        double inner = 0;
        for (int pt = 0; pt < panels; ++pt)
          for (const auto& [at, wt] : rule) {
            const double x = c + (y - c) * ht * (pt + 0.5 * (at + 1));
            const double a = coefficient(x, y);
            inner += wt * a * a * weight(x, params);
          }
        total += wy * inner * 0.5 * ht * (y - c) * weight(y, params);
      }
    return total * 0.5 * hy;
  };

  HsReport rep;
  const std::int64_t per_axis = static_cast<std::int64_t>(rule.size());
  double previous = -1;
  for (int panels = 4;; panels *= 2) {
    const std::int64_t nodes = (per_axis * panels) * (per_axis * panels);
    if (rep.nodes + nodes > params.node_budget)
      throw HahnError(ErrorKind::QuadratureBudgetExceeded,
                      "quadrature did not settle within " + std::to_string(params.node_budget) + " nodes");
    rep.nodes += nodes;
    const double current = 2 * triangle(panels);
    if (previous >= 0 && std::abs(current - previous) <= params.rel_tol * std::abs(current)) {
      rep.quadrature = current;
      break;
    }
    previous = current;
  }

  const std::vector<Separable> terms = majorant_terms(nu, params.part, params.R, c);
  const double Rk = std::pow(params.R, -2.0 * params.k);
  double full = 0, tail = 0;
  std::ostringstream assembly;
  assembly << std::setprecision(6) << "C = sqrt(2) * sum_i K_i sqrt(m(2p_i) m(2q_i)), m(s) = int_c^inf t^s "
           << (params.weight == HsWeight::Exponential ? "e^{(2R-kappa)t}" : "e^{-kappa t^2/2}") << " dt;";
  for (const Separable& t : terms) {
    full += t.K * std::sqrt(moment(2 * t.p, c, params) * moment(2 * t.q, c, params));
    tail += t.K * std::sqrt(moment(2 * t.p, c, params) * moment(2 * t.q, L, params));
    assembly << ' ' << t.label << "(K=" << t.K << ",p=" << t.p << ",q=" << t.q << ");";
  }
  rep.constant = std::sqrt(2.0) * full;
  rep.tail = 2 * std::pow(Rk * tail, 2);
  rep.lhs = rep.quadrature + rep.tail;
  rep.rhs = std::pow(Rk * rep.constant, 2);
  rep.pass = rep.lhs <= rep.rhs;
  assembly << " tail beyond L=" << L << " bounded by the same majorants with m taken over [L, inf).";
  rep.assembly = assembly.str();
  return rep;
}

MomentCheck gaussian_moment_check(double nu, double kappa, double c, double R) {
  if (!(nu >= 0) || !(kappa > 0) || !(c > 0) || !(R > 0) || !(R <= c * kappa / 4))
    throw HahnError(ErrorKind::InvalidArgument, "moment check needs nu >= 0, kappa, c > 0, 0 < R <= c kappa / 4");
  const double L = c + std::sqrt(2 * (80 + 4 * (nu + 1)) / kappa);
  auto f = [&](double x) { return std::pow(x, 2 * nu + 1) * std::exp(2 * R * x - kappa * x * x); };
  double integral = 0;
  const int panels = 256;
  const double h = (L - c) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = c + h * p;
    integral += boost::math::quadrature::gauss<double, 15>::integrate(f, a, a + h);
  }
  const double half = kappa / 2;
  const double tail = boost::math::tgamma(nu + 1, half * L * L) / (2 * std::pow(half, nu + 1));
  MomentCheck out;
  out.quadrature = integral + tail;
  out.bound = std::tgamma(nu + 1) / (2 * std::pow(half, nu + 1));
  out.pass = out.quadrature <= out.bound;
  return out;
}

}  // namespace hahn
