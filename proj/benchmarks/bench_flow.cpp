#include <benchmark/benchmark.h>

#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/generators.hpp"

using namespace rigsep;

static void BM_CspreadL1(benchmark::State& state) {
  const Graph g = connected_gnp(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cspread_lp(g, 1));
}
BENCHMARK(BM_CspreadL1)->Arg(8)->Arg(12)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_CspreadL2(benchmark::State& state) {
  const Graph g = connected_gnp(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cspread_lp(g, 2));
}
BENCHMARK(BM_CspreadL2)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_VcongInf(benchmark::State& state) {
  const Graph g = connected_gnp(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(vcong_lp(g, kInfNorm));
}
BENCHMARK(BM_VcongInf)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
