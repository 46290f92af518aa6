#include "rigsep/partition/random_separator.hpp"

#include <algorithm>
#include <cmath>

#include "rigsep/errors.hpp"
#include "rigsep/partition/chopping.hpp"
#include "rigsep/random.hpp"
#include "scratch.hpp"

namespace rigsep {

RandomSeparatorSampler::RandomSeparatorSampler(const Graph& g, const ConformalWeight& w, double delta, int h)
    : g_(&g), w_(&w), delta_(delta), h_(h) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InputError("random_separator: delta must be positive");
  if (h < 1) throw InputError("random_separator: h must be at least 1");
  w.check_matches(g);
  VertexSet rest;
  for (Vertex v = 0; v < g.n(); ++v) (w[v] > delta ? q_ : rest).push_back(v);
  roots_ = connected_components(g, rest);
  ambient_ = std::make_unique<AmbientMetric>(g, w, &rest);
}

RandomSeparatorSample RandomSeparatorSampler::sample(std::uint64_t seed) const {
  const Graph& g = *g_;
  const ConformalWeight& w = *w_;
  const double spacing = 21.0 * h_ * delta_;

  RandomSeparatorSample out;
  out.delta = delta_;
  out.h = h_;
  out.seed = seed;
  out.Q = q_;
  out.diameter_bound = (42.0 * h_ + 2.0) * delta_;
  out.avoidance_coefficient = 4.0 * h_ * (q_.empty() ? 1.0 : 2.0);
  out.alpha_raw = out.avoidance_coefficient * (42.0 * h_ + 2.0);

  detail::Scratch scratch(g.n());
  std::vector<Vertex> s1, s2;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    const VertexSet& root = roots_[r];
    const std::uint64_t comp_seed = mix_seed(seed, static_cast<std::uint64_t>(root.front()));
    const ChoppingTree tree =
        build_chopping_tree(*ambient_, root, delta_, uniform_offsets(comp_seed, delta_), h_ - 1);

    Rng tau_rng(mix_seed(comp_seed, 0x7461757673ULL));
    std::vector<double> taus(static_cast<std::size_t>(h_));
    for (double& t : taus) t = tau_rng.uniform(0.0, delta_);

    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (int idx : tree.level(h_ - 1)) {
      const ChoppingNode& node = tree.nodes[idx];
      for (Vertex v : node.vertices) covered[v] = 1;
      const bool spaced = node.spacing >= spacing;
      if (spaced) out.spaced_node = true;

      const std::vector<Vertex>& centers = node.ancestor_centers;
      std::vector<double> node_taus(taus.begin(), taus.begin() + static_cast<long>(centers.size()));
      VertexSet shards;
      for (Vertex v : node.vertices) {
        for (std::size_t i = 0; i < centers.size(); ++i) {
          if (in_fat_sphere((*ambient_)(centers[i], v), spacing + node_taus[i], w[v])) {
            shards.push_back(v);
            break;
          }
        }
      }
      s2.insert(s2.end(), shards.begin(), shards.end());
      auto comps = scratch.components(g, node.vertices, shards);

      for (auto& comp : comps) {
        // Every component of a non-spaced node lies in a skinny ball of radius
        // spacing + tau_i around one of the ancestor centers.
        double cert = kInfinity;
        for (std::size_t i = 0; i < centers.size(); ++i) {
          const auto& row = ambient_->row(centers[i]);
          double reach = 0.0;
          for (Vertex v : comp) reach = std::max(reach, row[v]);
          cert = std::min(cert, 2.0 * reach);
        }
        if (cert > out.diameter_bound) cert = std::min(cert, diameter_of(*ambient_, comp));
        if (cert > out.diameter_bound * (1.0 + 1e-12)) {
          if (!spaced)
            throw InvariantViolation("random_separator: component of a non-spaced node exceeds (42h+2) delta");
          out.within_bound = false;
        }
        out.diameter_certificate = std::max(out.diameter_certificate, cert);
        out.components.push_back(std::move(comp));
      }
    }
    for (Vertex v : root)
      if (!covered[v]) s1.push_back(v);
  }
  out.S1 = make_set(std::move(s1));
  out.S2 = make_set(std::move(s2));
  out.S = set_union(set_union(out.Q, out.S1), out.S2);
  std::sort(out.components.begin(), out.components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

RandomSeparatorSample random_separator(const Graph& g, const ConformalWeight& w, double delta, int h,
                                       std::uint64_t seed) {
  return RandomSeparatorSampler(g, w, delta, h).sample(seed);
}

RandomSeparatorSample random_separator_for_diameter(const Graph& g, const ConformalWeight& w, double target,
                                                    int h, std::uint64_t seed) {
  if (h < 1) throw InputError("random_separator: h must be at least 1");
  return random_separator(g, w, target / (42.0 * h + 2.0), h, seed);
}

PaddedPartitionSample padded_partition(const Graph& g, const RandomSeparatorSample& sample) {
  g.check_set(sample.S);
  PaddedPartitionSample out;
  out.blocks = sample.components;
  for (Vertex x : sample.S) out.blocks.push_back({x});
  out.alpha = 8.0 * sample.alpha_raw;
  out.delta = sample.diameter_bound;
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  for (const auto& b : out.blocks)
    for (Vertex v : b) count[v]++;
  for (int c : count)
    if (c != 1) throw InvariantViolation("padded_partition: blocks do not partition the vertex set");
  return out;
}

}  // namespace rigsep
