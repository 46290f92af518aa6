#include <benchmark/benchmark.h>

#include "rigsep/generators.hpp"
#include "rigsep/partition/balanced.hpp"
#include "rigsep/partition/random_separator.hpp"

using namespace rigsep;

static void BM_RandomSeparatorSample(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)));
  const auto w = ConformalWeight::constant(g.n());
  const RandomSeparatorSampler sampler(g, w, 2.0, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(seed++));
}
BENCHMARK(BM_RandomSeparatorSample)->Arg(10)->Arg(20)->Arg(30);

static void BM_BalancedSeparator(benchmark::State& state) {
  const auto strategy = static_cast<SeparatorStrategy>(state.range(1));
  const Graph g = generate("random-segments", static_cast<int>(state.range(0)), 5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(balanced_separator(g, strategy));
  state.SetLabel(to_string(strategy));
}
BENCHMARK(BM_BalancedSeparator)
    ->Args({80, static_cast<int>(SeparatorStrategy::Spectral)})
    ->Args({80, static_cast<int>(SeparatorStrategy::RandomChopping)})
    ->Args({20, static_cast<int>(SeparatorStrategy::LpRounding)})
    ->Unit(benchmark::kMillisecond);
