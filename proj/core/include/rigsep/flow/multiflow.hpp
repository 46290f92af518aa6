#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rigsep/graph.hpp"
#include "rigsep/rig.hpp"

namespace rigsep {

using Path = std::vector<Vertex>;

struct WeightedPath {
  Path path;
  double value = 0.0;
};

// Sparse map from walks to nonnegative flow values.
class MultiFlow {
 public:
  void add(const Path& path, double value);
  const std::map<Path, double>& paths() const { return flow_; }
  bool empty() const { return flow_.empty(); }
  // Total flow on paths with endpoints {u, v} (either orientation).
  double pair_total(Vertex u, Vertex v) const;

 private:
  std::map<Path, double> flow_;
};

// How a path loads its vertices.  VertexVisit counts every vertex of the path
// once (a single-vertex path loads its vertex by 1).  EdgeIncidence counts the
// number of path edges at the vertex (interior 2, endpoint 1).
enum class Congestion { VertexVisit, EdgeIncidence };

// Throws InputError unless path is a nonempty walk in g.
void check_walk(const Graph& g, const Path& path);

std::vector<double> congestion_map(const Graph& g, const MultiFlow& flow,
                                   Congestion convention = Congestion::VertexVisit);

// Demand graph H with host map f: V_H -> V_G and, for each edge of
// demand.edges() (same order), a distribution of f(x)-f(y) walks whose values
// sum to the edge's demand weight.
struct HFlow {
  Graph demand;
  std::vector<Vertex> host;
  std::vector<std::vector<WeightedPath>> routes;
  std::vector<double> weights;  // empty means unit demand per edge

  double weight(std::size_t edge) const { return weights.empty() ? 1.0 : weights[edge]; }
  bool proper() const;
  MultiFlow aggregate() const;
  bool integral(double tol = 1e-12) const;
};

void validate_hflow(const Graph& g, const HFlow& hf, double tol = 1e-9);

struct CrossingReport {
  double cross = 0.0;
  double sum_congestion_squared = 0.0;  // sum_v c(v)^2 with the visit convention
  bool l2_bound_holds = true;
};

// Sum over pairs of H-edges with four distinct endpoints of the flow products
// of intersecting routes.
CrossingReport crossing_congestion(const Graph& g, const HFlow& hf);

// Each H-edge independently keeps one route chosen with probability
// proportional to its value, carrying the edge's full demand.
HFlow integral_rounding(const HFlow& hf, std::uint64_t seed);

struct TransferReport {
  double cross = 0.0;
  double charge_bound = 0.0;  // sum_u c(u)^2 + sum_{uv} (c(u)+c(v))^2
  double sup_bound = 0.0;     // (4m + n) max_u c(u)^2
};

// Maps an H-flow in the rig to an H-flow in the base graph through the
// regions: region x is represented by its smallest base vertex, and each rig
// path becomes a concatenation of shortest paths inside consecutive regions.
HFlow rig_flow_transfer(const Graph& rig, const RegionAssignment& assign, const HFlow& hf,
                        TransferReport* report = nullptr);

}  // namespace rigsep
