// Serial vs OpenMP timings for the two enumeration kernels.

#include <benchmark/benchmark.h>

#include "kfl/equivalence.hpp"

namespace {

void BM_Falsify(benchmark::State& state) {
  kfl::FalsifyOptions o;
  o.entry_bound = static_cast<int>(state.range(1));
  const auto exec = state.range(0) ? kfl::Execution::Parallel : kfl::Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(kfl::falsify_bounded(o, exec).solutions);
}
BENCHMARK(BM_Falsify)->ArgsProduct({{0, 1}, {1, 2}})->ArgNames({"parallel", "bound"})->Unit(benchmark::kMillisecond);

void BM_WordSearch(benchmark::State& state) {
  // C(3,2) vs C(3,3) has no witness, so the search runs to its depth bound.
  const auto m = kfl::canonical_form(3, 2), n = kfl::canonical_form(3, 3);
  kfl::SearchOptions o;
  o.depth = static_cast<int>(state.range(1));
  const auto exec = state.range(0) ? kfl::Execution::Parallel : kfl::Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(kfl::search_witness(m, n, o, exec).stats.states_visited);
}
BENCHMARK(BM_WordSearch)->ArgsProduct({{0, 1}, {3, 4}})->ArgNames({"parallel", "depth"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
