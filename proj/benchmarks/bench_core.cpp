#include <benchmark/benchmark.h>

#include "collatz/core_maps.hpp"
#include "collatz/forests.hpp"
#include "collatz/step_cache.hpp"
#include "collatz/tree_builder.hpp"
#include "collatz/verifier.hpp"

namespace {

using collatz::Value;

void BM_Trajectory(benchmark::State& state) {
  const Value n = static_cast<Value>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collatz::trajectory(n).steps);
}
BENCHMARK(BM_Trajectory)->Arg(27)->Arg(837799);

void BM_TrajectoryBig(benchmark::State& state) {
  const collatz::BigValue n = collatz::BigValue(1) << 200;
  for (auto _ : state) benchmark::DoNotOptimize(collatz::big::trajectory(n + 27).steps);
}
BENCHMARK(BM_TrajectoryBig);

void BM_MemoizedSweep(benchmark::State& state) {
  const Value n = static_cast<Value>(state.range(0));
  for (auto _ : state) {
    collatz::StepCache cache(n + 1);
    std::uint64_t sum = 0;
    for (Value v = 1; v <= n; ++v) sum += collatz::total_steps(v, cache);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MemoizedSweep)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ConvergenceCheck(benchmark::State& state) {
  const auto shards = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collatz::check_convergence(1'000'000, 10'000, shards));
}
BENCHMARK(BM_ConvergenceCheck)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BuildLevels(benchmark::State& state) {
  const auto h = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collatz::build_levels(h).vertex_count());
}
BENCHMARK(BM_BuildLevels)->Arg(20)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_UnionGraph(benchmark::State& state) {
  const Value n = static_cast<Value>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collatz::union_graph(n).edges.size());
}
BENCHMARK(BM_UnionGraph)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
