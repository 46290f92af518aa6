#pragma once

#include <vector>

#include "rigsep/graph.hpp"

namespace rigsep {

// Region of rig vertex i is regions[i], a connected vertex set of base.
struct RegionAssignment {
  Graph base;
  std::vector<VertexSet> regions;
};

// Throws InputError naming the first empty, out-of-range or disconnected region.
void validate_regions(const RegionAssignment& assign);

// Vertices = regions; {i,j} is an edge iff the regions share a base vertex.
Graph build_rig(const RegionAssignment& assign);

// G as a rig over its subdivision: region of v is v plus the midpoints of
// the edges at v.
RegionAssignment rig_over_subdivision(const Graph& g);

}  // namespace rigsep
