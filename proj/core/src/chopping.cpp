#include "rigsep/partition/chopping.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"
#include "scratch.hpp"

namespace rigsep {

namespace {

void check_delta(double tau, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InputError("cut_delta: delta must be positive");
  if (!(tau >= 0.0) || tau > delta) throw InputError("cut_delta: tau must lie in [0, delta]");
}

// True if some radius tau + k*delta, k >= 0, puts v in the fat sphere.
bool on_some_sphere(double d, double wv, double tau, double delta) {
  if (d == kInfinity) return false;
  const double lo = (d - 0.5 * wv - tau) / delta;
  long k = std::max(0L, static_cast<long>(std::floor(lo)) - 1);
  for (;; ++k) {
    const double radius = tau + static_cast<double>(k) * delta;
    if (in_skinny_ball(d, radius, wv)) return false;
    if (in_fat_ball(d, radius, wv)) return true;
  }
}

}  // namespace

VertexSet cut_from_distances(const VertexSet& h, const ConformalWeight& w, const std::vector<double>& dist,
                             double tau, double delta) {
  check_delta(tau, delta);
  VertexSet out;
  for (Vertex v : h)
    if (on_some_sphere(dist[v], w[v], tau, delta)) out.push_back(v);
  return out;
}

VertexSet cut_delta(const Graph& g, const ConformalWeight& w, const VertexSet& h, Vertex c, double tau,
                    double delta) {
  check_delta(tau, delta);
  g.check_set(h);
  if (!set_contains(h, c)) throw InputError("cut_delta: center outside the subgraph");
  const auto alive = membership_mask(g.n(), h);
  return cut_from_distances(h, w, distances_from(g, w, c, &alive), tau, delta);
}

std::vector<VertexSet> chop_delta(const Graph& g, const ConformalWeight& w, const VertexSet& h, Vertex c,
                                  double tau, double delta) {
  const VertexSet cut = cut_delta(g, w, h, c, tau, delta);
  return connected_components(g, set_difference(h, cut));
}

std::vector<int> ChoppingTree::level(int depth) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].depth == depth) out.push_back(static_cast<int>(i));
  return out;
}

OffsetFunction constant_offsets(double tau) {
  return [tau](const ChoppingNode&) { return tau; };
}

OffsetFunction uniform_offsets(std::uint64_t seed, double delta) {
  return [seed, delta](const ChoppingNode& node) {
    std::uint64_t s = mix_seed(seed, 0x63686f70ULL);
    for (int idx : node.path) s = mix_seed(s, static_cast<std::uint64_t>(idx));
    Rng rng(s);
    return rng.uniform(0.0, delta);
  };
}

ChoppingTree build_chopping_tree(const AmbientMetric& ambient, const VertexSet& root, double delta,
                                 const OffsetFunction& sigma, int max_depth) {
  if (max_depth < 0) throw InputError("build_chopping_tree: depth must be nonnegative");
  if (!(delta > 0.0)) throw InputError("build_chopping_tree: delta must be positive");
  if (root.empty()) throw InputError("build_chopping_tree: empty root");
  const Graph& g = ambient.graph();
  const ConformalWeight& w = ambient.weight();
  g.check_set(root);

  ChoppingTree tree;
  tree.delta = delta;
  tree.max_depth = max_depth;
  ChoppingNode r;
  r.vertices = root;
  r.center = root.front();
  r.tau = std::numeric_limits<double>::quiet_NaN();
  tree.nodes.push_back(std::move(r));

  detail::Scratch scratch(g.n());
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    if (tree.nodes[idx].depth >= max_depth) continue;
    const double tau = sigma(tree.nodes[idx]);
    if (!(tau >= 0.0) || tau > delta) throw InputError("build_chopping_tree: offset outside [0, delta]");
    tree.nodes[idx].tau = tau;
    const ChoppingNode& node = tree.nodes[idx];
    const auto& dist = scratch.distances(g, w, node.vertices, node.center);
    const VertexSet cut = cut_from_distances(node.vertices, w, dist, tau, delta);
    auto comps = scratch.components(g, node.vertices, cut);

    std::vector<Vertex> anc;
    anc.reserve(node.ancestor_centers.size() + 1);
    anc.push_back(node.center);
    anc.insert(anc.end(), node.ancestor_centers.begin(), node.ancestor_centers.end());
    const int depth = node.depth;
    const std::vector<int> path = node.path;

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      ChoppingNode child;
      double best = -1.0;
      for (Vertex x : comps[ci]) {
        const double d = ambient.to_set(x, anc);
        if (d > best) {
          best = d;
          child.center = x;
        }
      }
      child.vertices = std::move(comps[ci]);
      child.depth = depth + 1;
      child.parent = static_cast<int>(idx);
      child.ancestor_centers = anc;
      child.spacing = best;
      child.tau = std::numeric_limits<double>::quiet_NaN();
      child.path = path;
      child.path.push_back(static_cast<int>(ci));
      tree.nodes[idx].children.push_back(static_cast<int>(tree.nodes.size()));
      tree.nodes.push_back(std::move(child));
    }
  }
  return tree;
}

ChoppingTree build_chopping_tree(const Graph& g, const ConformalWeight& w, double delta, const OffsetFunction& sigma,
                                 int max_depth) {
  if (!is_connected(g)) throw InputError("build_chopping_tree: graph must be connected");
  AmbientMetric ambient(g, w);
  return build_chopping_tree(ambient, all_vertices(g.n()), delta, sigma, max_depth);
}

ShatterResult shatter(const AmbientMetric& ambient, const VertexSet& h, const std::vector<Vertex>& centers,
                      const std::vector<double>& taus, double delta) {
  if (centers.size() != taus.size()) throw InputError("shatter: centers and offsets differ in length");
  if (!(delta > 0.0)) throw InputError("shatter: delta must be positive");
  const Graph& g = ambient.graph();
  const ConformalWeight& w = ambient.weight();
  g.check_set(h);
  for (Vertex c : centers) g.check_vertex(c);

  ShatterResult out;
  out.diameter_precondition = !centers.empty();
  for (Vertex v : h) {
    bool hit = false;
    double nearest = kInfinity;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      const double d = ambient(centers[i], v);
      nearest = std::min(nearest, d);
      if (!hit && in_fat_sphere(d, delta + taus[i], w[v])) hit = true;
    }
    if (hit) out.shards.push_back(v);
    if (nearest > delta) out.diameter_precondition = false;
  }
  detail::Scratch scratch(g.n());
  out.components = scratch.components(g, h, out.shards);

  if (out.diameter_precondition) {
    const double tau_max = *std::max_element(taus.begin(), taus.end());
    const double bound = 2.0 * (delta + tau_max);
    for (const auto& comp : out.components) {
      // A component avoiding every sphere sits inside one skinny ball.
      bool ok = false;
      for (Vertex c : centers) {
        const auto& row = ambient.row(c);
        double reach = 0.0;
        for (Vertex v : comp) reach = std::max(reach, row[v]);
        if (2.0 * reach <= bound) {
          ok = true;
          break;
        }
      }
      if (!ok && diameter_of(ambient, comp) > bound * (1.0 + 1e-12))
        throw InvariantViolation("shatter: component diameter exceeds 2(delta + max tau)");
    }
  }
  return out;
}

}  // namespace rigsep
