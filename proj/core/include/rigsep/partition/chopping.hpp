#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/graph.hpp"

namespace rigsep {

// Union of fat spheres around c at radii tau, tau+delta, tau+2*delta, ...
// measured in G[h].  Requires delta > 0 and 0 <= tau <= delta.
VertexSet cut_delta(const Graph& g, const ConformalWeight& w, const VertexSet& h, Vertex c, double tau,
                    double delta);
// Same cut given precomputed distances from c inside G[h].
VertexSet cut_from_distances(const VertexSet& h, const ConformalWeight& w, const std::vector<double>& dist,
                             double tau, double delta);

// Components of G[h minus cut_delta], ordered by smallest id.
std::vector<VertexSet> chop_delta(const Graph& g, const ConformalWeight& w, const VertexSet& h, Vertex c,
                                  double tau, double delta);

struct ChoppingNode {
  VertexSet vertices;
  Vertex center = -1;
  int depth = 0;
  int parent = -1;
  std::vector<int> children;
  // Centers on the path to the root excluding this node, nearest first.
  std::vector<Vertex> ancestor_centers;
  // Ambient distance from center to ancestor_centers (kInfinity at the root).
  double spacing = kInfinity;
  // Offset used to chop this node; NaN if the node was not chopped.
  double tau;
  // Child indices from the root; identifies the node's random substream.
  std::vector<int> path;
};

struct ChoppingTree {
  std::vector<ChoppingNode> nodes;  // nodes[0] is the root; parents precede children
  double delta = 0.0;
  int max_depth = 0;

  std::vector<int> level(int depth) const;
  bool is_spaced(int node, double beta) const { return nodes[node].spacing >= beta; }
};

// Offset source sigma: node -> [0, delta].
using OffsetFunction = std::function<double(const ChoppingNode&)>;

OffsetFunction constant_offsets(double tau);
// Uniform draw on [0, delta] from the substream keyed by (seed, node path).
OffsetFunction uniform_offsets(std::uint64_t seed, double delta);

// Builds the tree rooted at (root, smallest id of root, 0) down to
// max_depth.  Child centers maximize the distance to the ancestor centers in
// `ambient` (ties to the smallest id).  root must be connected in G.
ChoppingTree build_chopping_tree(const AmbientMetric& ambient, const VertexSet& root, double delta,
                                 const OffsetFunction& sigma, int max_depth);
// Whole-graph convenience; G must be connected.
ChoppingTree build_chopping_tree(const Graph& g, const ConformalWeight& w, double delta, const OffsetFunction& sigma,
                                 int max_depth);

struct ShatterResult {
  VertexSet shards;
  std::vector<VertexSet> components;
  // True when every vertex of h is within delta of some center, so each
  // component has ambient diameter at most 2(delta + max tau).
  bool diameter_precondition = false;
};

// shards = h intersected with the ambient fat spheres S(c_i, delta + tau_i).
ShatterResult shatter(const AmbientMetric& ambient, const VertexSet& h, const std::vector<Vertex>& centers,
                      const std::vector<double>& taus, double delta);

}  // namespace rigsep
