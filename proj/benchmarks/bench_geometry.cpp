#include <benchmark/benchmark.h>

#include "rigsep/generators.hpp"
#include "rigsep/polyline.hpp"

using namespace rigsep;

// Exact arrangement of n random segments; m grows roughly like n^2.
static void BM_StringGraphFromSegments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto arr = random_segments(n, 1);
  std::size_t m = 0;
  for (auto _ : state) {
    const auto sg = string_graph_from_polylines(arr);
    m = sg.rig.m();
    benchmark::DoNotOptimize(m);
  }
  state.counters["m"] = static_cast<double>(m);
}
BENCHMARK(BM_StringGraphFromSegments)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

static void BM_BuildRig(benchmark::State& state) {
  const auto assign = random_rig(grid_graph(static_cast<int>(state.range(0))), 200, 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_rig(assign));
}
BENCHMARK(BM_BuildRig)->Arg(20)->Arg(40);
