#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "hahn/error.hpp"
#include "hahn/exponent.hpp"

using namespace hahn;

namespace {

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

TEST_CASE("lexicographic compare puts the log component second") {
  const GroupPtr g = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  CHECK(compare(Exponent::lex(g, 1, -1), Exponent::lex(g, 1, 0)) == Ordering::Less);
  CHECK(compare(Exponent::lex(g, 0, 5), Exponent::lex(g, Rational(1, 100), -7)) == Ordering::Less);
}

TEST_CASE("generator comparisons use the enclosure") {
  const auto g = ExponentGroup::with_generator(
      GeneratorEnclosure::interval(Rational(314159, 100000) + Rational(1, 200000), Rational(1, 200000)));
  CHECK(compare(Exponent::real(g, 0, 2), Exponent::real(g, 2)) == Ordering::Greater);

  const auto fuzzy = ExponentGroup::with_generator(GeneratorEnclosure::interval(1, Rational(1, 10000000)));
  CHECK(kind_of([&] { (void)compare(Exponent::real(fuzzy, 0, 2), Exponent::real(fuzzy, 2)); }) ==
        ErrorKind::UndecidableComparison);
}

TEST_CASE("declared rational generators fold into the rational coordinate") {
  const auto g = ExponentGroup::with_generator(GeneratorEnclosure::exact(Rational(3, 2)));
  const Exponent e = Exponent::real(g, 1, 2);
  CHECK(e.a() == 4);
  CHECK(e.b() == 0);
  CHECK(compare(e, Exponent::real(g, 4)) == Ordering::Equal);
}

TEST_CASE("group arithmetic") {
  const GroupPtr lex = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  CHECK(add(Exponent::lex(lex, 1, -1), Exponent::lex(lex, 2, 3)) == Exponent::lex(lex, 3, 2));
  CHECK(int_scale(3, Exponent::lex(lex, 0, -1)) == Exponent::lex(lex, 0, -3));
  const auto g = ExponentGroup::with_generator(GeneratorEnclosure::pi(30));
  const Exponent n = negate(Exponent::real(g, Rational(1, 2), 2));
  CHECK(n.a() == Rational(-1, 2));
  CHECK(n.b() == -2);
}

TEST_CASE("mixing groups is rejected") {
  const GroupPtr lex = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  CHECK(kind_of([&] { (void)add(Exponent::real(ExponentGroup::rational_line(), 1), Exponent::lex(lex, 1, 0)); }) ==
        ErrorKind::GroupMismatch);
}

TEST_CASE("star_bound") {
  const GroupPtr lex = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  std::vector<Exponent> diag;
  for (int n = 1; n <= 5; ++n) diag.push_back(Exponent::lex(lex, n, -n));
  CHECK(star_bound(diag) == 1);

  // -beta <= N alpha: (2,0) needs N >= 0, (4,-1) needs 4N >= 1.
  const std::vector<Exponent> mixed{Exponent::lex(lex, 2, 0), Exponent::lex(lex, 4, -1)};
  std::int64_t brute = 0;
  while (!(0 <= brute * 2 && 1 <= brute * 4)) ++brute;
  CHECK(star_bound(mixed) == brute);

  CHECK(star_bound(std::vector<Exponent>{Exponent::lex(lex, 1, 3), Exponent::lex(lex, 2, 5)}) == 0);
  CHECK(star_bound(std::vector<Exponent>{Exponent::lex(lex, Rational(1, 3), -2)}) == 6);
  CHECK(kind_of([&] { (void)star_bound(std::vector<Exponent>{Exponent::lex(lex, 0, -1)}); }) ==
        ErrorKind::NotAdmissible);
}

TEST_CASE("scaled log components share a denominator") {
  const GroupPtr g = ExponentGroup::lex_pair(ExponentGroup::rational_line(), 6);
  const Exponent a = Exponent::lex(g, 1, -3);  // (1, -1/2)
  const Exponent b = Exponent::lex(g, 1, -2);  // (1, -1/3)
  CHECK(a < b);
  CHECK(a.beta_value() == doctest::Approx(-0.5));
  CHECK(star_bound(std::vector<Exponent>{Exponent::lex(g, Rational(1, 4), -3)}) == 2);
}

TEST_CASE("property: strict total order on decidable exponents") {
  testgen::Engine rng(testgen::kSeed);
  for (auto v : {testgen::Variant::Rational, testgen::Variant::Generator, testgen::Variant::Lex}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Exponent a = testgen::positive_exponent(rng, v);
      const Exponent b = testgen::positive_exponent(rng, v);
      const Exponent c = testgen::positive_exponent(rng, v);
      const Ordering ab = compare(a, b);
      const Ordering ba = compare(b, a);
      CHECK((ab == Ordering::Equal) == (ba == Ordering::Equal));
      if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
      if (a < b && b < c) CHECK(a < c);
      CHECK((compare(a, a) == Ordering::Equal));
    }
  }
}

TEST_CASE("property: group laws") {
  testgen::Engine rng(testgen::kSeed + 1);
  for (auto v : {testgen::Variant::Rational, testgen::Variant::Generator, testgen::Variant::Lex}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Exponent a = testgen::positive_exponent(rng, v);
      const Exponent b = testgen::positive_exponent(rng, v);
      const Exponent c = testgen::positive_exponent(rng, v);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a + negate(a)).is_zero());
      CHECK(int_scale(3, a) == a + a + a);
    }
  }
}

TEST_CASE("property: lexicographic positivity") {
  const GroupPtr lex = ExponentGroup::lex_pair(ExponentGroup::rational_line());
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Exponent e = Exponent::lex(lex, Rational(a, 2), b);
      CHECK(is_positive(e) == (a > 0 || (a == 0 && b > 0)));
      CHECK(is_positive(e) == (compare(e, Exponent::zero(lex)) == Ordering::Greater));
    }
}

TEST_CASE("property: star_bound is monotone under enlarging the support") {
  testgen::Engine rng(testgen::kSeed + 2);
  const GroupPtr lex = testgen::group_for(testgen::Variant::Lex);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Exponent> support;
    std::int64_t previous = 0;
    for (int i = 0; i < 6; ++i) {
      support.push_back(Exponent::lex(lex, Rational(testgen::uniform(rng, 1, 8), testgen::uniform(rng, 1, 3)),
                                      testgen::uniform(rng, -6, 3)));
      const std::int64_t n = star_bound(support);
      CHECK(n >= previous);
      previous = n;
    }
  }
}
