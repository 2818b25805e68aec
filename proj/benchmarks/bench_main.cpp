#include <benchmark/benchmark.h>

#include "weylgb/ahyp/ahyp.hpp"
#include "weylgb/lauricella/identities.hpp"
#include "weylgb/lauricella/operators.hpp"
#include "weylgb/lauricella/singular_locus.hpp"
#include "weylgb/weyl/weyl_groebner.hpp"

using namespace weylgb;

static void BM_WeylProduct(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const ParamSet P = ParamSet::symbolic(m);
  const WeylElement p = ell(1, P), q = ell(m, P);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_WeylProduct)->DenseRange(2, 4);

static void BM_SpairSuite(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_spair_suite(m));
}
BENCHMARK(BM_SpairSuite)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BuchbergerTorus(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const ParamSet P = ParamSet::symbolic(m);
  std::vector<WeylElement> G;
  for (std::size_t i = 1; i <= m; ++i) G.push_back(ell_prime(i, P));
  const auto w = weyl_order_w(m);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_buchberger(G, w));
}
BENCHMARK(BM_BuchbergerTorus)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ToricIdeal(benchmark::State& state) {
  const IntMatrix A = build_A(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(A));
}
BENCHMARK(BM_ToricIdeal)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_SingularLocus(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singular_locus_poly(m));
}
BENCHMARK(BM_SingularLocus)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
