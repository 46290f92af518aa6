#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/graph.hpp"
#include "rigsep/partition/random_separator.hpp"

namespace rigsep {

// f(x) = dist_w(x, B) for the closed ball B = {x : dist_w(x0, x) <= radius}.
std::vector<double> rounding_map_ball(const Graph& g, const ConformalWeight& w, Vertex x0, double radius);

// F(x) = dist_w(x, union of blocks colored 1).  Colors are fair coins per
// block, redrawn while every block is colored 0.
std::vector<double> rounding_map_coloring(const Graph& g, const ConformalWeight& w,
                                          const PaddedPartitionSample& partition, std::uint64_t seed);
// Same map for explicit colors (one per block, not all zero).
std::vector<double> rounding_map_coloring(const Graph& g, const ConformalWeight& w,
                                          const PaddedPartitionSample& partition, const std::vector<int>& colors);

// Optional vertex measure; empty means counting measure.
using Measure = std::vector<double>;

struct SweepLevel {
  double theta;
  int a_size;
  int b_size;
  int s_size;
};

struct SweepResult {
  VertexSet U;
  VertexSet boundary;
  double ratio = kInfinity;  // |boundary| / |U| (measure-weighted if a measure is given)
  double theta = 0.0;
  bool from_sweep = true;  // false when the singleton fallback was used
  std::vector<SweepLevel> levels;
};

// Threshold sweep of a 1-Lipschitz map.  For every examined theta the sets
// A = {f <= theta}, B = {f > theta}, S = {|f - theta| <= w/2} satisfy
// E(A\S, B\S) = empty (asserted).  Candidates A u S and B u S are ranked by
// |dU|/|U| subject to |interior(U)| <= |V|/2; ties go to the smaller
// boundary and then the lexicographically smaller set.
SweepResult sweep_cut(const Graph& g, const ConformalWeight& w, const std::vector<double>& f,
                      const Measure& mu = {});

// Exact ranking helper shared with the brute-force oracle: true if U1 beats U2.
bool better_candidate(std::size_t b1, std::size_t u1, const VertexSet& s1, std::size_t b2, std::size_t u2,
                      const VertexSet& s2);

struct ExpansionWitnesses {
  ConformalWeight omega;  // indicator of the boundary
  VertexSet boundary;
  VertexSet s1, s2;  // split of the boundary, |s1| = ceil(s/2)
  std::vector<double> f1, f2;
  double sobs1 = 0.0;  // observed spreads under omega
  double sobs2 = 0.0;
  // Observed spreads rescaled to a unit L1 weight: multiplied by n/|dU|.
  double normalized1 = 0.0;
  double normalized2 = 0.0;
  double best_normalized() const { return normalized1 > normalized2 ? normalized1 : normalized2; }
};

// The two step maps attached to a set U with nonempty boundary.
ExpansionWitnesses vertex_expansion_witnesses(const Graph& g, const VertexSet& u);

}  // namespace rigsep
