#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/graph.hpp"
#include "rigsep/partition/rounding.hpp"

namespace rigsep {

enum class SeparatorStrategy { LpRounding, Spectral, RandomChopping };

std::string to_string(SeparatorStrategy s);
// Accepts "lp+rounding", "lp-round", "spectral", "random-chopping", "chop".
SeparatorStrategy parse_strategy(const std::string& name);

struct BalancedOptions {
  std::uint64_t seed = 0;
  int h = 5;                // random-separator parameter for coloring maps
  int ball_centers = 32;    // ball and distance maps per cut
  int partitions = 4;       // random partitions per scale
  int colorings = 2;        // coloring draws per partition
  SpreadLPOptions lp{24, true, 150, 1e-7, 3000};
};

struct BalancedSeparatorResult {
  VertexSet S;
  std::vector<VertexSet> components;  // of G[V minus S]
  double largest = 0.0;               // measure of the largest component
  double total = 0.0;                 // measure of V
  int cuts = 0;                       // recursion steps
};

// True if every component of G[V minus S] has measure at most fraction * mu(V).
bool is_balanced(const Graph& g, const VertexSet& s, const Measure& mu = {}, double fraction = 2.0 / 3.0);

// Repeatedly cuts the heaviest component while it exceeds 2/3 of the total
// measure, adding the boundary of a low-expansion set found by the strategy.
BalancedSeparatorResult balanced_separator(const Graph& g, SeparatorStrategy strategy, const Measure& mu = {},
                                           const BalancedOptions& opt = {});

// One low-expansion set of a connected graph found by the strategy.
SweepResult low_expansion_cut(const Graph& g, SeparatorStrategy strategy, const Measure& mu,
                              const BalancedOptions& opt, std::uint64_t seed);

}  // namespace rigsep
