#include <benchmark/benchmark.h>

#include "grassline/adhm.hpp"
#include "grassline/snf.hpp"
#include "grassline/transitions.hpp"
#include "grassline/tools/generators.hpp"

using namespace grassline;

static void BM_Factorize(benchmark::State& state) {
  tools::Generator gen(5);
  const LoopElement g = gen.loop_element(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(g));
}
BENCHMARK(BM_Factorize)->DenseRange(2, 5);

static void BM_QuadRoundTrip(benchmark::State& state) {
  tools::Generator gen(6);
  const LoopElement g = gen.loop_element(static_cast<std::size_t>(state.range(0)), 2);
  const TransitionQuad q = build_quad(factorize(g));
  for (auto _ : state) benchmark::DoNotOptimize(extract_quad(q));
}
BENCHMARK(BM_QuadRoundTrip)->DenseRange(2, 4);

static void BM_SampleTypeA(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Coweight l({m, 0, -m});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_datum(l, seed++));
}
BENCHMARK(BM_SampleTypeA)->DenseRange(1, 3);

static void BM_ThetaA(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const AdhmDatumA d = sample_datum(Coweight({m, 0, -m}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(theta_psi_A(d));
}
BENCHMARK(BM_ThetaA)->DenseRange(1, 3);

static void BM_ThetaD(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const AdhmDatumD d = sample_datum(xi_enumerate(Coweight({m, -m})).front(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(theta_psi_D(d));
}
BENCHMARK(BM_ThetaD)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
