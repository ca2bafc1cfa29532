#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "hahn/meromorphic.hpp"

using namespace hahn;

namespace {

const GroupPtr Q = ExponentGroup::rational_line();
const GroupPtr LEX = ExponentGroup::lex_pair(ExponentGroup::rational_line());

Exponent q(Rational a) { return Exponent::real(Q, std::move(a)); }
Validity below(Rational a) { return Validity::below(q(std::move(a))); }

using RS = Series<Rational>;

RS poly(std::vector<std::pair<Rational, Rational>> terms, Validity v) {
  std::vector<RS::Term> t;
  for (auto& [e, c] : terms) t.emplace_back(q(e), c);
  return RS::from_terms(Q, std::move(t), std::move(v));
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

TEST_CASE("addition") {
  const RS a = poly({{0, 1}, {1, 1}}, below(5));
  const RS b = poly({{0, -1}, {1, 1}}, below(5));
  CHECK(add(a, b) == poly({{1, 2}}, below(5)));
  CHECK(add(a, RS(Q, below(5))) == a);

  const RS s = poly({{Rational(1, 2), 1}}, below(3));
  const RS t = poly({{2, 1}}, below(2));
  const RS sum = add(s, t);
  CHECK(sum == poly({{Rational(1, 2), 1}}, below(2)));
  CHECK(sum.validity() == below(2));
}

TEST_CASE("multiplication") {
  const RS a = poly({{0, 1}, {Rational(1, 2), -1}}, Validity::exact());
  const RS b = poly({{0, 1}, {Rational(1, 2), 1}, {1, 1}, {Rational(3, 2), 1}}, below(2));
  const RS p = mul(a, b);
  CHECK(p == poly({{0, 1}}, below(2)));

  const RS exact = poly({{0, 1}, {Rational(1, 2), -1}}, Validity::exact());
  CHECK(mul(exact, RS::one(Q, Validity::exact())) == exact);
  CHECK(mul(a, poly({{0, 1}, {Rational(1, 2), 1}, {1, 1}, {Rational(3, 2), 1}}, Validity::exact())) ==
        poly({{0, 1}, {2, -1}}, Validity::exact()));

  const auto g = ExponentGroup::with_generator(GeneratorEnclosure::pi(30));
  const auto zpi = Series<Rational>::monomial(Exponent::real(g, 0, 1), 1, Validity::exact());
  const auto z2 = Series<Rational>::monomial(Exponent::real(g, 2), 1, Validity::exact());
  const auto prod = mul(zpi, z2);
  REQUIRE(prod.size() == 1);
  CHECK(prod.terms()[0].first == Exponent::real(g, 2, 1));
}

TEST_CASE("valuation") {
  CHECK(*poly({{Rational(1, 2), 1}, {1, 1}}, below(3)).valuation() == q(Rational(1, 2)));
  CHECK(poly({{0, 5}}, below(3)).valuation()->is_zero());
  CHECK_FALSE(RS(Q, below(3)).valuation().has_value());
}

TEST_CASE("shift") {
  const RS f = poly({{Rational(1, 2), 1}, {1, 1}}, below(3));
  CHECK(shift(f, q(Rational(1, 2))) == poly({{0, 1}, {Rational(1, 2), 1}}, below(Rational(5, 2))));
  CHECK(shift(f, q(0)) == f);
  CHECK(shift(shift(f, q(Rational(7, 3))), q(Rational(-7, 3))) == f);
}

TEST_CASE("geometric inverse") {
  const RS f = poly({{0, 1}, {Rational(1, 2), -1}}, Validity::exact());
  const RS inv = neumann_invert(f, q(3));
  std::vector<std::pair<Rational, Rational>> expect;
  for (int k = 0; k < 6; ++k) expect.push_back({Rational(k, 2), 1});
  CHECK(inv == poly(expect, below(3)));
  CHECK(kind_of([&] { (void)neumann_invert(f); }) == ErrorKind::IterationCapExceeded);
  CHECK(kind_of([&] { (void)neumann_invert(poly({{Rational(1, 2), 1}}, below(2))); }) ==
        ErrorKind::NotInvertibleConstant);
}

TEST_CASE("inverse of 1 + z log z has unit diagonal coefficients") {
  // z log z = -e_(1,-1)
  std::vector<Series<Rational>::Term> t;
  t.emplace_back(Exponent::zero(LEX), 1);
  t.emplace_back(Exponent::lex(LEX, 1, -1), -1);
  const auto f = Series<Rational>::from_terms(LEX, std::move(t), Validity::exact());
  const auto inv = neumann_invert(f, Exponent::lex(LEX, 21, -21));
  REQUIRE(inv.size() == 21);
  for (int n = 0; n <= 20; ++n) CHECK(inv.coefficient(Exponent::lex(LEX, n, -n)) == 1);
}

TEST_CASE("inverse of 1 - (z^1/2 + z) matches brute-force convolution") {
  // Oracle: expand sum_k (z^1/2 + z)^k for k <= 6 on half-integer keys.
  std::map<int, Rational> oracle;
  std::map<int, Rational> power{{0, 1}};
  for (int k = 0; k <= 6; ++k) {
    for (auto& [e, c] : power)
      if (e <= 6) oracle[e] += c;
    std::map<int, Rational> next;
    for (auto& [e, c] : power) {
      next[e + 1] += c;
      next[e + 2] += c;
    }
    power = std::move(next);
  }
  const RS f = poly({{0, 1}, {Rational(1, 2), -1}, {1, -1}}, Validity::exact());
  const RS inv = neumann_invert(f, q(Rational(7, 2)));
  for (int e = 0; e <= 6; ++e) CHECK(inv.coefficient(q(Rational(e, 2))) == oracle[e]);
}

TEST_CASE("division") {
  // f = sum_{n<=8} n^-2 z^{1-1/n}
  std::vector<std::pair<Rational, Rational>> terms;
  for (int n = 1; n <= 8; ++n) terms.push_back({1 - Rational(1, n), Rational(1, n * n)});
  const RS f = poly(terms, below(Rational(8, 9)));
  const RS z2 = poly({{2, 1}}, Validity::exact());

  const auto h = divide_scalar(f, z2);
  CHECK(h.pivot == q(-2));
  CHECK(equal_modulo(mul(z2, shift(h.unit, negate(h.pivot))), f));
  for (int n = 1; n <= 8; ++n) CHECK(h.unit.coefficient(q(1 - Rational(1, n))) == Rational(1, n * n));

  const auto r = divide_scalar(z2, f);
  CHECK(r.pivot == q(2));
  CHECK(equal_modulo(mul(f, shift(r.unit, negate(r.pivot))), z2));

  const auto self = divide_scalar(f, f);
  CHECK(self.pivot.is_zero());
  CHECK(self.unit == RS::one(Q, below(Rational(8, 9))));

  CHECK(kind_of([&] { (void)divide_scalar(f, RS(Q, below(1))); }) == ErrorKind::DivisionByZeroSeries);
}

TEST_CASE("log z as a quotient") {
  const auto zlogz = Series<Rational>::monomial(Exponent::lex(LEX, 1, -1), -1, Validity::exact());
  const auto z = Series<Rational>::monomial(Exponent::lex(LEX, 1, 0), 1, Validity::exact());
  const auto m = divide_scalar(zlogz, z);
  // log z = -(-log z) = -e_(0,-1): the pivot carries the log factor, the unit is -1.
  CHECK(m.pivot == Exponent::lex(LEX, 0, -1));
  REQUIRE(m.unit.size() == 1);
  CHECK(m.unit.terms()[0].first.is_zero());
  CHECK(m.unit.terms()[0].second == -1);
}

TEST_CASE("composition") {
  const RS s = poly({{Rational(1, 2), 1}}, Validity::exact());
  std::vector<Rational> exp_coeffs;
  Rational fact = 1;
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) fact /= k;
    exp_coeffs.push_back(fact);
  }
  const RS e = compose_entire(exp_coeffs, s);
  std::vector<std::pair<Rational, Rational>> expect;
  Rational f = 1;
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) f /= k;
    expect.push_back({Rational(k, 2), f});
  }
  CHECK(e == poly(expect, below(3)));

  const RS zero(Q, below(4));
  CHECK(compose_entire(std::vector<Rational>{7, 1, 1}, zero) == poly({{0, 7}}, below(4)));

  const RS h = poly({{Rational(1, 3), 2}, {1, -1}}, below(4));
  const RS geometric = compose_entire(std::vector<Rational>(40, Rational(1)), h);
  CHECK(geometric == neumann_invert(sub(RS::one(Q, Validity::exact()), h)));
}

TEST_CASE("polynomial composition re-centres a nonzero constant") {
  const RS f = poly({{0, 2}, {Rational(1, 2), 1}}, below(3));
  // (2 + s)^2 = 4 + 4s + s^2
  const RS p = compose_entire(std::vector<Rational>{0, 0, 1}, f, ComposeOptions{4096, true});
  CHECK(p == poly({{0, 4}, {Rational(1, 2), 4}, {1, 1}}, below(3)));
  CHECK(kind_of([&] { (void)compose_entire(std::vector<Rational>{0, 0, 1}, f); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("holomorphic support flag") {
  auto s = Series<Rational>::monomial(Exponent::lex(LEX, 0, -1), 1, Validity::exact());
  CHECK_FALSE(has_holomorphic_support(s));
  CHECK(has_holomorphic_support(Series<Rational>::monomial(Exponent::lex(LEX, 1, -3), 1, Validity::exact())));
}

TEST_CASE("matrix coefficients do not commute but associate") {
  using M = SquareMatrix<Rational>;
  M a(2), b(2), c(2);
  a(0, 1) = 1;
  b(1, 0) = 1;
  c(0, 0) = 2;
  c(1, 1) = 3;
  auto series = [&](const M& m0, const M& m1) {
    std::vector<Series<M>::Term> t;
    t.emplace_back(q(0), m0);
    t.emplace_back(q(Rational(1, 2)), m1);
    return Series<M>::from_terms(Q, std::move(t), below(3), M(2));
  };
  const auto f = series(a, b), g = series(b, c), h = series(c, a);
  CHECK_FALSE(mul(f, g) == mul(g, f));
  CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
  CHECK(mul(f, g).validity() == below(3));
}
