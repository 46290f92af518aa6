#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigsep/graph.hpp"
#include "rigsep/polyline.hpp"
#include "rigsep/rig.hpp"

namespace rigsep {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // hub 0
// Grid with side L (so (L+1)^d vertices), vertex id = sum_i x_i (L+1)^i.
Graph grid_graph(int side, int dim = 2);
Graph gnp(int n, double p, std::uint64_t seed);
// G(n,p) made connected by joining consecutive components with one edge.
Graph connected_gnp(int n, double p, std::uint64_t seed);
// Stacked triangulation: start from a triangle, repeatedly insert a vertex
// into a uniformly chosen face.  Planar, 3n - 6 edges for n >= 3.
Graph planar_triangulation(int n, std::uint64_t seed);

// count segments with endpoints uniform on the 10^-6 grid of the unit square.
PolylineArrangement random_segments(int count, std::uint64_t seed);
// n segments through a common point: the string graph is K_n.
PolylineArrangement clique_segments(int n);

// count regions grown from random seeds by random breadth-first expansion
// (sizes 1..max_size), each connected in base.
RegionAssignment random_rig(const Graph& base, int count, int max_size, std::uint64_t seed);

struct Instance {
  std::string kind;
  int size = 0;
  std::uint64_t seed = 0;
  Graph graph;
  std::optional<PolylineArrangement> polylines;
  std::optional<RegionAssignment> assign;
};

// kind in {random-segments, grid, planar-triangulation, clique-rig, gnp}.
// gnp uses edge probability edge_prob.
Instance generate(const std::string& kind, int size, std::uint64_t seed, double edge_prob = 0.3);

}  // namespace rigsep
