#include "rigsep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <array>

#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 0, "path_graph: n must be nonnegative");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: n must be at least 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  require(n >= 0, "complete_graph: n must be nonnegative");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star_graph: leaves must be nonnegative");
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph grid_graph(int side, int dim) {
  require(side >= 0 && dim >= 1, "grid_graph: need side >= 0 and dim >= 1");
  const int w = side + 1;
  long total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= w;
    require(total <= 10'000'000, "grid_graph: too many vertices");
  }
  std::vector<Edge> es;
  for (long v = 0; v < total; ++v) {
    long stride = 1;
    for (int i = 0; i < dim; ++i, stride *= w)
      if ((v / stride) % w + 1 < w) es.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + stride));
  }
  return Graph::from_edges(static_cast<int>(total), es);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0.0 && p <= 1.0, "gnp: need n >= 0 and p in [0,1]");
  Rng rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph connected_gnp(int n, double p, std::uint64_t seed) {
  const Graph g = gnp(n, p, seed);
  auto es = g.edges();
  const auto comps = connected_components(g);
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) es.emplace_back(comps[i].back(), comps[i + 1].front());
  return Graph::from_edges(n, es);
}

Graph planar_triangulation(int n, std::uint64_t seed) {
  require(n >= 0, "planar_triangulation: n must be nonnegative");
  if (n < 3) return complete_graph(n);
  Rng rng(seed);
  std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};  // both sides of the triangle
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t f = rng.below(faces.size());
    const auto [a, b, c] = faces[f];
    es.emplace_back(a, v);
    es.emplace_back(b, v);
    es.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return Graph::from_edges(n, es);
}

PolylineArrangement random_segments(int count, std::uint64_t seed) {
  require(count >= 0, "random_segments: count must be nonnegative");
  constexpr long kScale = 1'000'000;
  Rng rng(seed);
  PolylineArrangement arr;
  auto coord = [&] { return static_cast<long>(rng.below(kScale + 1)); };
  for (int i = 0; i < count; ++i) {
    const long x1 = coord(), y1 = coord();
    long x2 = coord(), y2 = coord();
    if (x1 == x2 && y1 == y2) x2 = (x2 + 1) % (kScale + 1);
    arr.strings.push_back({make_point(x1, kScale, y1, kScale), make_point(x2, kScale, y2, kScale)});
  }
  return arr;
}

PolylineArrangement clique_segments(int n) {
  require(n >= 0, "clique_segments: n must be nonnegative");
  PolylineArrangement arr;
  // Segment i joins (-x_i, -y_i) to (x_i, y_i) through the origin with
  // pairwise distinct directions.
  for (int i = 0; i < n; ++i) {
    const long x = n, y = 2L * i - n;
    arr.strings.push_back({make_point(-x, 1, -y, 1), make_point(x, 1, y, 1)});
  }
  return arr;
}

RegionAssignment random_rig(const Graph& base, int count, int max_size, std::uint64_t seed) {
  require(base.n() > 0 && count >= 0 && max_size >= 1, "random_rig: need a nonempty base, count >= 0, max_size >= 1");
  Rng rng(seed);
  RegionAssignment a;
  a.base = base;
  for (int r = 0; r < count; ++r) {
    const Vertex start = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(base.n())));
    const std::size_t target = 1 + rng.below(static_cast<std::uint64_t>(max_size));
    std::vector<Vertex> region{start};
    std::vector<Vertex> frontier;
    for (Vertex u : base.neighbors(start)) frontier.push_back(u);
    while (region.size() < target && !frontier.empty()) {
      const std::size_t k = rng.below(frontier.size());
      const Vertex v = frontier[k];
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(k));
      if (std::find(region.begin(), region.end(), v) != region.end()) continue;
      region.push_back(v);
      for (Vertex u : base.neighbors(v))
        if (std::find(region.begin(), region.end(), u) == region.end()) frontier.push_back(u);
    }
    a.regions.push_back(make_set(std::move(region)));
  }
  return a;
}

Instance generate(const std::string& kind, int size, std::uint64_t seed, double edge_prob) {
  Instance inst;
  inst.kind = kind;
  inst.size = size;
  inst.seed = seed;
  if (kind == "random-segments") {
    require(size >= 0 && size <= 5000, "random-segments: size must lie in [0, 5000]");
    inst.polylines = random_segments(size, seed);
  } else if (kind == "clique-rig") {
    require(size >= 0 && size <= 2000, "clique-rig: size must lie in [0, 2000]");
    inst.polylines = clique_segments(size);
  } else if (kind == "grid") {
    require(size >= 0 && size <= 2000, "grid: side must lie in [0, 2000]");
    inst.graph = grid_graph(size, 2);
    return inst;
  } else if (kind == "planar-triangulation") {
    require(size >= 0 && size <= 1'000'000, "planar-triangulation: size must lie in [0, 10^6]");
    inst.graph = planar_triangulation(size, seed);
    return inst;
  } else if (kind == "gnp") {
    require(size >= 0 && size <= 20000, "gnp: size must lie in [0, 20000]");
    inst.graph = gnp(size, edge_prob, seed);
    return inst;
  } else {
    throw InputError("unknown generator kind '" + kind + "'");
  }
  auto sg = string_graph_from_polylines(*inst.polylines);
  inst.graph = std::move(sg.rig);
  inst.assign = std::move(sg.assign);
  return inst;
}

}  // namespace rigsep
