#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "generators.hpp"
#include "hahn/log_cover.hpp"

using namespace hahn;
using std::numbers::pi;

namespace {

const GroupPtr Q = ExponentGroup::rational_line();
const GroupPtr LEX = ExponentGroup::lex_pair(ExponentGroup::rational_line());
const GroupPtr PI = ExponentGroup::with_generator(GeneratorEnclosure::pi(30));

using CS = Series<Complex>;

CS build(const GroupPtr& g, std::vector<std::pair<Exponent, Complex>> terms, Validity v) {
  return CS::from_terms(g, std::move(terms), std::move(v));
}

/// z^pi sum_{k<K} z^{2k}/(2k)!
CS zpi_cosh(int K) {
  std::vector<std::pair<Exponent, Complex>> t;
  double fact = 1;
  for (int k = 0; k < K; ++k) {
    if (k > 0) fact *= (2 * k - 1) * (2 * k);
    t.emplace_back(Exponent::real(PI, 2 * k, 1), 1.0 / fact);
  }
  return build(PI, t, Validity::below(Exponent::real(PI, 2 * K, 1)));
}

CS one_two_three() {
  return build(PI,
               {{Exponent::zero(PI), 1.0}, {Exponent::real(PI, Rational(1, 2)), 2.0}, {Exponent::real(PI, 0, 1), 3.0}},
               Validity::exact());
}

CoverFunction as_function(const CS& f) {
  return [f](const LogPoint& p) { return series_eval(f, p).value; };
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const HahnError& e) {
    return e.kind();
  }
  FAIL("expected HahnError");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("basis evaluation") {
  CHECK(basis_eval(Exponent::zero(LEX), {0.3, 17.0}) == Complex(1.0, 0.0));
  const Complex v = basis_eval(Exponent::lex(LEX, 1, -1), {std::exp(-1.0), 0.0});
  CHECK(v.real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(std::abs(v.imag()) < 1e-16);

  // Oracle: exp((1/2)(log 4 + 2 pi i)) by hand.
  const Complex oracle = std::exp(0.5 * Complex(std::log(4.0), 2 * pi));
  const Complex w = basis_eval(Exponent::real(Q, Rational(1, 2)), {4.0, 2 * pi});
  CHECK(std::abs(w - oracle) < 1e-14);
  CHECK(std::abs(w - Complex(-2.0, 0.0)) < 1e-14);

  CHECK(kind_of([] { (void)basis_eval(Exponent::lex(LEX, 1, -1), {1.5, 0.0}); }) == ErrorKind::BranchCutHit);
  CHECK(kind_of([] { (void)LogPoint(-1.0, 0.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("series evaluation") {
  const CS f = build(Q, {{Exponent::zero(Q), 1.0}, {Exponent::real(Q, 1), 1.0}}, Validity::exact());
  const EvalResult r = series_eval(f, {0.5, 0.0});
  CHECK(r.value == Complex(1.5, 0.0));
  CHECK(r.residual_bound == 0.0);
  CHECK_FALSE(r.truncation_only);
}

TEST_CASE("truncated inverse of 1 + z log z evaluated on the principal sheet") {
  std::vector<std::pair<Exponent, Complex>> t;
  for (int n = 0; n <= 20; ++n) t.emplace_back(Exponent::lex(LEX, n, -n), 1.0);
  const CS f = build(LEX, t, Validity::below(Exponent::lex(LEX, 21, -21)));
  const LogPoint p{0.1, 0.0};
  const double zlogz = 0.1 * std::log(0.1);
  const EvalResult truncated = series_eval(f, p);
  CHECK(truncated.truncation_only);
  const EvalResult r = series_eval(f, p, TailModel{1.0, std::abs(zlogz)});
  const double exact = 1.0 / (1.0 + zlogz);
  CHECK(std::abs(r.value - exact) <= 1e-10 * exact + r.residual_bound);
  CHECK(r.residual_bound < 1e-12);
}

TEST_CASE("z^pi cosh series") {
  const EvalResult r = series_eval(zpi_cosh(12), {0.3, 0.0});
  const double oracle = std::pow(0.3, pi) * std::cosh(0.3);
  CHECK(std::abs(r.value - oracle) <= 1e-12 * oracle);
}

TEST_CASE("majorant") {
  const CS f = build(Q, {{Exponent::real(Q, 1), 1.0}, {Exponent::real(Q, 2), 1.0}}, Validity::exact());
  CHECK(majorant(f, {0.5, std::nullopt}, 64) == 0.75);
  CHECK(majorant(CS(Q, Validity::exact()), {0.5, std::nullopt}, 64) == 0.0);
  CHECK(std::isinf(majorant(build(Q, {{Exponent::real(Q, -1), 1.0}}, Validity::exact()), {0.5, {}}, 64)));

  const CS logs = build(LEX, {{Exponent::lex(LEX, 1, -1), 1.0}}, Validity::exact());
  const double coarse = majorant(logs, {0.25, 0.5}, 16);
  const double fine = majorant(logs, {0.25, 0.5}, 256);
  CHECK(fine >= coarse);
  // |z||log z| on |z| = 1/4, |arg| <= 1/2 peaks at the sector edge.
  CHECK(fine == doctest::Approx(0.25 * std::abs(Complex(std::log(0.25), 0.5))).epsilon(1e-3));
}

TEST_CASE("spiral average of constants and pure powers") {
  const CoverFunction c = [](const LogPoint&) { return Complex(2.5, -1.0); };
  for (int L : {1, 7, 64}) CHECK(std::abs(spiral_average(c, 0.5, L) - Complex(2.5, -1.0)) < 1e-14);

  const Exponent half = Exponent::real(Q, Rational(1, 2));
  const CoverFunction e = [&](const LogPoint& p) { return basis_eval(half, p); };
  double previous = std::abs(spiral_average(e, 0.5, 5));
  CHECK(previous > 0);
  for (int L : {9, 17, 33, 65}) {
    const double err = std::abs(spiral_average(e, 0.5, L));
    // |Lambda e_a| = R^a |sin(a pi L)| / (a pi L), bounded by C/L with C = R^a/(a pi).
    CHECK(err <= std::sqrt(0.5) / (0.5 * pi * L) * (1 + 1e-9));
    CHECK(err <= 0.75 * previous);
    previous = err;
  }
}

TEST_CASE("spiral averaging recovers coefficients") {
  const CS f = one_two_three();
  const auto F = as_function(f);
  const double err0 = std::abs(spiral_average(F, 0.5, 256) - 1.0);
  CHECK(err0 < 5e-3);
  const CoverFunction shifted = [&](const LogPoint& p) {
    return basis_eval(Exponent::real(PI, Rational(-1, 2)), p) * F(p);
  };
  CHECK(std::abs(spiral_average(shifted, 0.5, 256) - 2.0) < 5e-3);

  const CS g = build(Q, {{Exponent::zero(Q), 1.0}, {Exponent::real(Q, 1), 1.0}}, Validity::exact());
  for (int L : {4, 16}) CHECK(std::abs(extract_coefficient(as_function(g), Exponent::real(Q, 1), 0.5, L) - 1.0) <= 2.0 / L);

  const CS cosh_series = zpi_cosh(12);
  const Complex a = extract_coefficient(as_function(cosh_series), Exponent::real(PI, 0, 1), 0.5, 128);
  CHECK(std::abs(a - 1.0) < 0.05);
}

TEST_CASE("coefficient outside the support decays") {
  const auto F = as_function(one_two_three());
  const Exponent missing = Exponent::real(PI, Rational(1, 3));
  const double e64 = std::abs(extract_coefficient(F, missing, 0.5, 64));
  const double e128 = std::abs(extract_coefficient(F, missing, 0.5, 128));
  const double e256 = std::abs(extract_coefficient(F, missing, 0.5, 256));
  CHECK(e128 < e64);
  CHECK(e256 < e128);
  CHECK(e256 < 0.05);
}

TEST_CASE("extraction rejects lexicographic exponents") {
  const CoverFunction c = [](const LogPoint&) { return Complex(1.0); };
  CHECK(kind_of([&] { (void)extract_coefficient(c, Exponent::lex(LEX, 1, 0), 0.5, 4); }) ==
        ErrorKind::UnsupportedGroup);
}

TEST_CASE("CSV emitter") {
  const CS f = build(Q, {{Exponent::zero(Q), 1.0}, {Exponent::real(Q, 1), 1.0}}, Validity::exact());
  std::ostringstream os;
  write_eval_csv(os, f, {{0.5, 0.0}, {0.25, pi}});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "r,phi,re,im,residual_bound");
  std::getline(is, line);
  CHECK(line.rfind("0.5,0,1.5,0,0", 0) == 0);
}

TEST_CASE("property: basis evaluation is a homomorphism") {
  testgen::Engine rng(testgen::kSeed + 10);
  std::uniform_real_distribution<double> r_dist(0.01, 0.99), phi_dist(-20.0, 20.0);
  for (auto v : {testgen::Variant::Rational, testgen::Variant::Generator, testgen::Variant::Lex}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Exponent a = testgen::positive_exponent(rng, v);
      const Exponent b = testgen::positive_exponent(rng, v);
      const LogPoint p{r_dist(rng), phi_dist(rng)};
      const Complex lhs = basis_eval(a + b, p);
      const Complex rhs = basis_eval(a, p) * basis_eval(b, p);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1e-300));
    }
  }
}

TEST_CASE("property: positive exponents vanish monotonically at the origin") {
  testgen::Engine rng(testgen::kSeed + 11);
  for (auto v : {testgen::Variant::Rational, testgen::Variant::Generator, testgen::Variant::Lex}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Exponent g = testgen::positive_exponent(rng, v);
      // Past the (*) threshold |e_g| is increasing in r; with N the star bound
      // the log factor is dominated once r < e^{-N-1}.
      const int start = static_cast<int>(star_bound(std::span<const Exponent>(&g, 1))) * 2 + 2;
      double previous = std::abs(basis_eval(g, {std::ldexp(1.0, -start), 0.0}));
      for (int k = start + 1; k <= 40; ++k) {
        const double cur = std::abs(basis_eval(g, {std::ldexp(1.0, -k), 0.0}));
        CHECK(cur < previous);
        previous = cur;
      }
      CHECK(previous < 1e-3);
    }
  }
}

TEST_CASE("property: spiral averaging is linear") {
  testgen::Engine rng(testgen::kSeed + 12);
  for (int trial = 0; trial < 20; ++trial) {
    const CS f = testgen::series<Complex>(rng, testgen::Variant::Generator, true);
    const CS g = testgen::series<Complex>(rng, testgen::Variant::Generator, true);
    const Complex a = testgen::small_complex(rng);
    const CoverFunction combo = [&](const LogPoint& p) {
      return a * series_eval(f, p).value + series_eval(g, p).value;
    };
    const Complex lhs = spiral_average(combo, 0.5, 16);
    const Complex rhs = a * spiral_average(as_function(f), 0.5, 16) + spiral_average(as_function(g), 0.5, 16);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs)));
  }
}
