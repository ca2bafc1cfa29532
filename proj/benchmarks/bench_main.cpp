#include <benchmark/benchmark.h>

#include "hahn/bessel_cone.hpp"
#include "hahn/fredholm.hpp"
#include "hahn/log_cover.hpp"

using namespace hahn;

namespace {

const GroupPtr Q = ExponentGroup::rational_line();
const GroupPtr LEX = ExponentGroup::lex_pair(ExponentGroup::rational_line());

Series<Rational> dense_half_integer(int n, const Validity& v) {
  std::vector<Series<Rational>::Term> t;
  for (int k = 0; k < n; ++k) t.emplace_back(Exponent::real(Q, Rational(k, 2)), Rational(k + 1, k + 2));
  return Series<Rational>::from_terms(Q, std::move(t), v);
}

void BM_MulRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Validity v = Validity::below(Exponent::real(Q, n / 2));
  const auto f = dense_half_integer(n, v);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MulRational)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_InvertLog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Series<Rational>::Term> t;
  t.emplace_back(Exponent::zero(LEX), 1);
  t.emplace_back(Exponent::lex(LEX, 1, -1), -1);
  const auto f = Series<Rational>::from_terms(LEX, std::move(t), Validity::exact());
  for (auto _ : state) benchmark::DoNotOptimize(neumann_invert(f, Exponent::lex(LEX, n, -n)));
}
BENCHMARK(BM_InvertLog)->Arg(10)->Arg(20)->Arg(40);

void BM_SpiralAverage(benchmark::State& state) {
  const GroupPtr G = ExponentGroup::with_generator(GeneratorEnclosure::pi(30));
  const auto f = Series<Complex>::from_terms(
      G, {{Exponent::zero(G), 1.0}, {Exponent::real(G, Rational(1, 2)), 2.0}, {Exponent::real(G, 0, 1), 3.0}},
      Validity::exact());
  const CoverFunction F = [&](const LogPoint& p) { return series_eval(f, p).value; };
  for (auto _ : state) benchmark::DoNotOptimize(extract_coefficient(F, Exponent::zero(G), 0.5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SpiralAverage)->Arg(64)->Arg(256);

void BM_KernelSeries(benchmark::State& state) {
  const Order nu = state.range(0) == 0 ? Order::parse("pi") : Order::rational(1);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_kernel_series(nu, 1, 2, 25));
}
BENCHMARK(BM_KernelSeries)->Arg(0)->Arg(1);

void BM_FredholmResolve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Validity v = Validity::below(Exponent::real(Q, 6));
  std::vector<Series<Rational>> entries;
  for (std::size_t k = 0; k < n * n; ++k) entries.push_back(dense_half_integer(6, v));
  const MatrixSeries<Rational> F(n, std::move(entries));
  for (auto _ : state) benchmark::DoNotOptimize(resolve_identity_minus(F));
}
BENCHMARK(BM_FredholmResolve)->DenseRange(2, 4);

void BM_SqrtSuitability(benchmark::State& state) {
  const OrderFamily family{SqrtIntegers{state.range(0)}};
  for (auto _ : state) benchmark::DoNotOptimize(kappa_suitable(family, 1.0));
}
BENCHMARK(BM_SqrtSuitability)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_HsBound(benchmark::State& state) {
  HsParams p;
  p.k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hs_bound_check(Order::rational(Rational(1, 2)), p));
}
BENCHMARK(BM_HsBound)->Arg(0)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
