#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hahn/bessel_cone.hpp"

using namespace hahn;
using std::numbers::pi;

namespace {

/// 1 / |(2 kappa)^nu sin(nu pi) Gamma(nu + 1)| for nu = n + frac, with
/// |sin(nu pi)| = |sin(frac pi)| so tiny fractional parts keep full precision.
double suitability_value(int n, double frac, double kappa) {
  const double nu = n + frac;
  return 1.0 / std::abs(std::pow(2 * kappa, nu) * std::sin(frac * pi) * std::tgamma(nu + 1));
}

}  // namespace

TEST_CASE("sphere spectrum") {
  const auto s2 = sphere_spectrum(2, 4);
  REQUIRE(s2.size() == 5);
  for (const auto& m : s2) {
    CHECK(m.nu == Rational(1, 2) + m.k);
    CHECK(m.multiplicity == 2 * m.k + 1);
  }
  for (const auto& m : sphere_spectrum(3, 5)) {
    CHECK(m.nu == 1 + m.k);
    CHECK(m.multiplicity == (m.k + 1) * (m.k + 1));
  }
  const auto s1 = sphere_spectrum(1, 3);
  CHECK(s1.front().nu == 0);
  CHECK(s1.front().multiplicity == 1);
  CHECK(s1.back().multiplicity == 2);
}

TEST_CASE("kappa suitability") {
  SUBCASE("integer families are vacuous") {
    const auto r = kappa_suitable(OrderFamily{SphereSpectrum{3, 10}}, 1.0);
    CHECK(r.pass);
    CHECK(r.sup_observed == 0.0);
    CHECK(r.non_integer_count == 0);
  }
  SUBCASE("explicit list against direct evaluation") {
    ExplicitList list;
    double oracle = 0;
    for (int k = 1; k <= 12; ++k) {
      const Rational nu = k + Rational(1, static_cast<long>(std::pow(10, k)));
      list.members.push_back({Order::rational(nu), 1});
      oracle = std::max(oracle, suitability_value(k, std::pow(10.0, -k), 0.25));
    }
    const auto r = kappa_suitable(OrderFamily{list}, 0.25);
    CHECK(r.sup_observed == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(r.pass == (r.sup_observed <= 1.0));
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().value == r.sup_observed);
  }
  SUBCASE("square roots of integers") {
    const auto r = kappa_suitable(OrderFamily{SqrtIntegers{2000}}, 1.0);
    CHECK(r.pass);
    CHECK(r.gap_checked == r.non_integer_count);
    CHECK(r.gap_violations == 0);
    CHECK(r.bound_one_violations == 0);
    CHECK(r.bound_three_halves_violations == 0);
    double oracle = 0;
    for (int q = 2; q <= 2000; ++q) {
      const int s = static_cast<int>(std::lround(std::sqrt(q)));
      if (s * s == q) continue;
      const double root = std::sqrt(static_cast<double>(q));
      const int n = static_cast<int>(std::floor(root));
      oracle = std::max(oracle, suitability_value(n, root - n, 1.0));
    }
    CHECK(r.sup_observed == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("cone kernel support") {
  SUBCASE("no nu = 0 means holomorphic") {
    const auto k = cone_kernel_modes(OrderFamily{SphereSpectrum{2, 5}}, 1, 2, 8);
    CHECK(k.report.holomorphic);
    CHECK(k.report.negative_exponents.empty());
    CHECK_FALSE(k.report.contains_nu_zero);
    CHECK(k.report.structure_ok);
    REQUIRE(k.combined.has_value());
    CHECK(has_holomorphic_support(*k.combined));
  }
  SUBCASE("circle spectrum has exactly the (0,-1) pole") {
    const auto k = cone_kernel_modes(OrderFamily{SphereSpectrum{1, 8}}, 1, 2, 8);
    CHECK(k.report.contains_nu_zero);
    CHECK_FALSE(k.report.holomorphic);
    REQUIRE(k.report.negative_exponents.size() == 1);
    CHECK(k.report.structure_ok);
    const GroupPtr g = k.combined->group();
    int negatives = 0;
    for (const auto& [e, c] : k.combined->terms())
      if (!is_positive(e) && !e.is_zero()) {
        ++negatives;
        CHECK(e == Exponent::lex(g, 0, -1));
      }
    CHECK(negatives == 1);
  }
  SUBCASE("a single mode reproduces its expansion") {
    ExplicitList one;
    one.members.push_back({Order::rational(Rational(1, 2)), 1});
    const auto k = cone_kernel_modes(OrderFamily{one}, 1, 2, 10);
    const auto e = resolvent_kernel_series(Order::rational(Rational(1, 2)), 1, 2, 10);
    for (const LogPoint& l : {LogPoint{0.05, 0.0}, LogPoint{0.1, 1.0}})
      CHECK(std::abs(series_eval(*k.combined, l).value - series_eval(e.series, l).value) <= 1e-14);
  }
}

TEST_CASE("circle cone kernel against the direct mode sum") {
  const auto k = cone_kernel_modes(OrderFamily{SphereSpectrum{1, 8}}, 1, 2, 25);
  const LogPoint l{0.05, 0.2};
  const double tp = 0.3, tq = 1.1;
  Complex oracle = 0;
  for (int m = -8; m <= 8; ++m)
    oracle += resolvent_kernel_direct(Order::rational(std::abs(m)), l, 1, 2) *
              std::exp(Complex(0, m * (tp - tq))) / (2 * pi);
  const Complex got = s1_assemble(k, l, tp, tq);
  CHECK(std::abs(got - oracle) <= 1e-8 * std::abs(oracle));
}

TEST_CASE("weighted Hilbert-Schmidt bounds") {
  HsParams p;
  p.kappa = 3;
  p.c = 1;
  p.k = 0;
  p.R = 1;
  const HsReport r = hs_bound_check(Order::rational(Rational(1, 2)), p);
  CHECK(r.pass);
  CHECK(r.lhs <= r.rhs);
  CHECK(r.tail >= 0);
  CHECK(r.lhs == doctest::Approx(r.quadrature + r.tail));

  for (double nu : {0.5, 2.0}) {
    const MomentCheck m = gaussian_moment_check(nu, 3.0, 1.0, 3.0 / 8);
    CHECK(m.pass);
    CHECK(m.quadrature <= m.bound);
    CHECK(m.bound == doctest::Approx(std::tgamma(nu + 1) / (2 * std::pow(1.5, nu + 1))));
  }

  // Coefficient kernels of higher index are bounded by R^{-4k} times the k = 0 constant.
  for (int k : {5, 10}) {
    HsParams pk = p;
    pk.k = k;
    pk.R = 0.5;
    const HsReport rk = hs_bound_check(Order::rational(Rational(1, 2)), pk);
    CHECK(rk.pass);
    CHECK(rk.rhs == doctest::Approx(std::pow(0.5, -4 * k) * rk.constant * rk.constant));
  }

  HsParams bad = p;
  bad.R = 2;  // 2R >= kappa
  CHECK_THROWS_AS(hs_bound_check(Order::rational(Rational(1, 2)), bad), HahnError);
}
