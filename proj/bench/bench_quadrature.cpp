// Serial vs OpenMP evaluation of Bessel samples at DE nodes, the data-parallel kernel of the
// moment quadrature. Results are bitwise identical between the two; only the timing differs.

#include <benchmark/benchmark.h>

#include "bmlab/mpnum/moments.hpp"
#include "bmlab/mpnum/quadrature.hpp"

using namespace bmlab::mpnum;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(1) == 0 ? ExecPolicy::Serial : ExecPolicy::Parallel;
}

void BM_BesselSamples(benchmark::State& state) {
  const Precision p(state.range(0));
  const ExecPolicy policy = policy_of(state);
  long nodes = 0;
  for (auto _ : state) {
    BesselTable table(DERule::half_line(BigFloat(1L, p), 4.0, p));
    for (int level = 0; level <= 6; ++level) nodes += static_cast<long>(table.level_samples(level, policy).size());
    benchmark::DoNotOptimize(nodes);
  }
  state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}

void BM_MomentColdCache(benchmark::State& state) {
  const Precision p(state.range(0));
  QuadOptions opt;
  opt.policy = policy_of(state);
  for (auto _ : state) {
    BesselTable::clear_cache();
    benchmark::DoNotOptimize(ikm_estimate(2, 3, 1, p, opt).value);
  }
}

}  // namespace

BENCHMARK(BM_BesselSamples)->ArgsProduct({{256, 512}, {0, 1}})->ArgNames({"bits", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentColdCache)->ArgsProduct({{256, 512}, {0, 1}})->ArgNames({"bits", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
