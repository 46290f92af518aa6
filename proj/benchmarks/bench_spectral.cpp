#include <benchmark/benchmark.h>

#include "rigsep/generators.hpp"
#include "rigsep/spectral.hpp"

using namespace rigsep;

// Dense path up to kDenseSpectrumLimit, Lanczos above it.
static void BM_FiedlerVector(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fiedler_vector(g));
  state.counters["n"] = g.n();
}
BENCHMARK(BM_FiedlerVector)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_SpectralBisection(benchmark::State& state) {
  const Graph g = planar_triangulation(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_bisection(g));
}
BENCHMARK(BM_SpectralBisection)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
