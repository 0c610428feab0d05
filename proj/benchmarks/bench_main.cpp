#include <benchmark/benchmark.h>

#include "irsnoma/analytic.hpp"
#include "irsnoma/channel.hpp"
#include "irsnoma/mc.hpp"
#include "irsnoma/sinr.hpp"
#include "irsnoma/specialfns.hpp"

using namespace irsnoma;

static void BM_RegLowerGamma(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reg_lower_gamma(4.0, x));
    x = x < 40.0 ? x * 1.07 : 0.01;
  }
}
BENCHMARK(BM_RegLowerGamma);

static void BM_StdNormalCdf(benchmark::State& state) {
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(std_normal_cdf(x));
    x = x < 8.0 ? x + 0.13 : -8.0;
  }
}
BENCHMARK(BM_StdNormalCdf);

static void BM_SampleAssumption(benchmark::State& state) {
  const SystemParams p = table1_defaults();
  Xoshiro256pp gen(derive_stream(1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_assumption(p, gen));
}
BENCHMARK(BM_SampleAssumption);

static void BM_SamplePhysical(benchmark::State& state) {
  const SystemParams p = table1_defaults();
  Xoshiro256pp gen(derive_stream(1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_physical(p, gen));
}
BENCHMARK(BM_SamplePhysical);

static void BM_ComputeSinrs(benchmark::State& state) {
  const SystemParams p = table1_defaults();
  Xoshiro256pp gen(derive_stream(2, 0));
  const ChannelRealization ch = sample_assumption(p, gen);
  for (auto _ : state) benchmark::DoNotOptimize(compute_sinrs(p, ch));
}
BENCHMARK(BM_ComputeSinrs);

static void BM_OpD1(benchmark::State& state) {
  SystemParams p = table1_defaults();
  p.p_s = 100.0;
  const Thresholds th = resolve_thresholds(p);
  for (auto _ : state) benchmark::DoNotOptimize(op_d1(p, th));
}
BENCHMARK(BM_OpD1);

static void BM_McPoint(benchmark::State& state) {
  const SystemParams p = table1_defaults();
  const Thresholds th = resolve_thresholds(p);
  McConfig mc;
  mc.trials = static_cast<std::uint64_t>(state.range(0));
  mc.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trials(p, th, mc, derive_stream(mc.seed, 0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McPoint)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
