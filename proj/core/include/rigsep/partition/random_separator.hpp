#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/graph.hpp"

namespace rigsep {

struct RandomSeparatorSample {
  VertexSet S;
  std::vector<VertexSet> components;  // components of G[V minus S]
  double delta = 0.0;
  int h = 1;
  std::uint64_t seed = 0;

  VertexSet Q;   // vertices with weight above delta
  VertexSet S1;  // vertices outside every depth-(h-1) node
  VertexSet S2;  // shards of the depth-(h-1) nodes

  // Some depth-(h-1) node was 21*h*delta-spaced.  Without such a node every
  // component is certified to have diameter at most diameter_bound.
  bool spaced_node = false;
  double diameter_bound = 0.0;  // (42h+2) delta
  // Upper bound on the largest component diameter, measured in G[V minus Q].
  double diameter_certificate = 0.0;
  bool within_bound = true;

  // Pr[skinny ball B(v,R) misses S] >= 1 - avoidance_coefficient * R / delta.
  double avoidance_coefficient = 0.0;  // 4h, doubled when Q is nonempty
  // Normalized to the diameter scale: alpha_raw = avoidance_coefficient * (42h+2).
  double alpha_raw = 0.0;
};

// Reusable sampler for fixed (G, w, delta, h).  Ambient distances are cached
// across samples; sample() may be called concurrently.
class RandomSeparatorSampler {
 public:
  RandomSeparatorSampler(const Graph& g, const ConformalWeight& w, double delta, int h);

  RandomSeparatorSample sample(std::uint64_t seed) const;

  const AmbientMetric& ambient() const { return *ambient_; }
  const VertexSet& q() const { return q_; }
  double delta() const { return delta_; }
  int h() const { return h_; }

 private:
  const Graph* g_;
  const ConformalWeight* w_;
  double delta_;
  int h_;
  VertexSet q_;
  std::vector<VertexSet> roots_;
  std::unique_ptr<AmbientMetric> ambient_;
};

RandomSeparatorSample random_separator(const Graph& g, const ConformalWeight& w, double delta, int h,
                                       std::uint64_t seed);

// Runs the construction at delta = target / (42h+2) so that components have
// diameter at most target.
RandomSeparatorSample random_separator_for_diameter(const Graph& g, const ConformalWeight& w, double target,
                                                    int h, std::uint64_t seed);

struct PaddedPartitionSample {
  std::vector<VertexSet> blocks;  // components, then singletons of S
  double alpha = 0.0;             // 8 * alpha_raw
  double delta = 0.0;             // diameter bound of the blocks
};

PaddedPartitionSample padded_partition(const Graph& g, const RandomSeparatorSample& sample);

}  // namespace rigsep
