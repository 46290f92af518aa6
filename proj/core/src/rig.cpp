#include "rigsep/rig.hpp"

#include <string>

#include "rigsep/errors.hpp"

namespace rigsep {

void validate_regions(const RegionAssignment& assign) {
  for (std::size_t i = 0; i < assign.regions.size(); ++i) {
    const auto& r = assign.regions[i];
    const std::string name = "region " + std::to_string(i);
    if (r.empty()) throw InputError(name + " is empty");
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!assign.base.contains(r[k])) throw InputError(name + " contains unknown base vertex " + std::to_string(r[k]));
      if (k > 0 && r[k] <= r[k - 1]) throw InputError(name + " is not a sorted set");
    }
    if (!is_connected_set(assign.base, r)) throw InputError(name + " is not connected in the base graph");
  }
}

Graph build_rig(const RegionAssignment& assign) {
  validate_regions(assign);
  std::vector<std::vector<Vertex>> owners(static_cast<std::size_t>(assign.base.n()));
  for (std::size_t i = 0; i < assign.regions.size(); ++i)
    for (Vertex b : assign.regions[i]) owners[b].push_back(static_cast<Vertex>(i));
  std::vector<Edge> edges;
  for (const auto& list : owners)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
  return Graph::from_edges(static_cast<int>(assign.regions.size()), edges);
}

RegionAssignment rig_over_subdivision(const Graph& g) {
  RegionAssignment out{subdivision(g), {}};
  out.regions.resize(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) out.regions[v].push_back(v);
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Vertex mid = static_cast<Vertex>(g.n() + static_cast<int>(i));
    out.regions[es[i].first].push_back(mid);
    out.regions[es[i].second].push_back(mid);
  }
  for (auto& r : out.regions) r = make_set(std::move(r));
  return out;
}

}  // namespace rigsep
