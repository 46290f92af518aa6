#include "rigsep/partition/balanced.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rigsep/errors.hpp"
#include "rigsep/partition/random_separator.hpp"
#include "rigsep/random.hpp"
#include "rigsep/spectral.hpp"

namespace rigsep {

std::string to_string(SeparatorStrategy s) {
  switch (s) {
    case SeparatorStrategy::LpRounding:
      return "lp+rounding";
    case SeparatorStrategy::Spectral:
      return "spectral";
    case SeparatorStrategy::RandomChopping:
      return "random-chopping";
  }
  return "?";
}

SeparatorStrategy parse_strategy(const std::string& name) {
  if (name == "lp+rounding" || name == "lp-round" || name == "lp") return SeparatorStrategy::LpRounding;
  if (name == "spectral") return SeparatorStrategy::Spectral;
  if (name == "random-chopping" || name == "chop") return SeparatorStrategy::RandomChopping;
  throw InputError("unknown separator strategy '" + name + "'");
}

namespace {

double measure(const VertexSet& s, const Measure& mu) {
  if (mu.empty()) return static_cast<double>(s.size());
  double t = 0.0;
  for (Vertex v : s) t += mu[v];
  return t;
}

void check_measure(const Graph& g, const Measure& mu) {
  if (mu.empty()) return;
  if (static_cast<int>(mu.size()) != g.n()) throw InputError("measure has wrong length");
  for (double x : mu)
    if (!(x >= 0.0) || !std::isfinite(x)) throw InputError("measure must be finite and nonnegative");
}

bool better(const SweepResult& a, const SweepResult& b, const Measure& mu) {
  if (b.U.empty()) return true;
  const double ra = a.ratio, rb = b.ratio;
  if (mu.empty()) {
    // Exact comparison of |dA|/|A| against |dB|/|B|.
    return better_candidate(a.boundary.size(), a.U.size(), a.U, b.boundary.size(), b.U.size(), b.U);
  }
  if (ra != rb) return ra < rb;
  if (a.boundary.size() != b.boundary.size()) return a.boundary.size() < b.boundary.size();
  return a.U < b.U;
}

VertexSet pick_centers(int n, int count, std::uint64_t seed) {
  if (n <= count) return all_vertices(n);
  Rng rng(mix_seed(seed, 0xc3));
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < count; ++i) std::swap(perm[i], perm[i + rng.below(static_cast<std::uint64_t>(n - i))]);
  return make_set({perm.begin(), perm.begin() + count});
}

double eccentricity_bound(const Graph& g, const ConformalWeight& w) {
  const auto d = distances_from(g, w, 0);
  return 2.0 * *std::max_element(d.begin(), d.end());
}

struct Search {
  const Graph& g;
  const ConformalWeight& w;
  const Measure& mu;
  SweepResult best;

  void offer(const std::vector<double>& f) {
    SweepResult r = sweep_cut(g, w, f, mu);
    if (r.boundary.empty()) return;
    r.levels.clear();
    if (better(r, best, mu)) best = std::move(r);
  }

  void distance_maps(const VertexSet& centers, double radius) {
    for (Vertex c : centers) {
      offer(rounding_map_ball(g, w, c, 0.0));
      if (radius > 0.0) offer(rounding_map_ball(g, w, c, radius));
    }
  }

  void coloring_maps(const RandomSeparatorSample& sample, int draws, std::uint64_t seed) {
    const auto part = padded_partition(g, sample);
    if (part.blocks.size() < 2) return;
    for (int i = 0; i < draws; ++i) offer(rounding_map_coloring(g, w, part, mix_seed(seed, static_cast<std::uint64_t>(i))));
  }
};

}  // namespace

bool is_balanced(const Graph& g, const VertexSet& s, const Measure& mu, double fraction) {
  g.check_set(s);
  check_measure(g, mu);
  const double total = measure(all_vertices(g.n()), mu);
  const auto keep = set_difference(all_vertices(g.n()), s);
  for (const auto& c : connected_components(g, keep))
    if (measure(c, mu) > fraction * total * (1.0 + 1e-12) + 1e-12) return false;
  return true;
}

SweepResult low_expansion_cut(const Graph& g, SeparatorStrategy strategy, const Measure& mu,
                              const BalancedOptions& opt, std::uint64_t seed) {
  if (g.n() < 2 || !is_connected(g)) throw InputError("low_expansion_cut: need a connected graph with two vertices");
  if (strategy == SeparatorStrategy::Spectral) {
    const auto b = spectral_bisection(g);
    SweepResult r;
    const bool prefix_smaller = 2 * b.side.size() <= static_cast<std::size_t>(g.n());
    r.U = prefix_smaller ? b.side : set_difference(all_vertices(g.n()), b.side);
    r.boundary = b.separator;
    r.ratio = measure(r.boundary, mu) / std::max(measure(r.U, mu), 1e-300);
    return r;
  }

  ConformalWeight w;
  if (strategy == SeparatorStrategy::LpRounding) {
    w = cspread_lp(g, 1, opt.lp).omega;
  } else {
    w = ConformalWeight::constant(g.n(), 1.0);
  }
  Search search{g, w, mu, {}};
  const double diam = eccentricity_bound(g, w);

  if (strategy == SeparatorStrategy::LpRounding) {
    const double sp = spread(all_pairs_metric(g, w));
    search.distance_maps(pick_centers(g.n(), opt.ball_centers, seed), sp / 4.0);
    for (int scale = 0; scale < 5 && diam > 0.0; ++scale) {
      const double target = diam / std::ldexp(1.0, scale);
      for (int t = 0; t < opt.partitions; ++t) {
        const auto s = mix_seed(seed, {0x1b, static_cast<std::uint64_t>(scale), static_cast<std::uint64_t>(t)});
        search.coloring_maps(random_separator_for_diameter(g, w, target, opt.h, s), opt.colorings, s);
      }
    }
  } else {
    search.distance_maps(pick_centers(g.n(), std::min(opt.ball_centers, 8), seed), 0.0);
    for (int scale = 0; diam / std::ldexp(1.0, scale) >= 0.5; ++scale) {
      const double delta = diam / std::ldexp(1.0, scale);
      RandomSeparatorSampler sampler(g, w, delta, opt.h);
      for (int t = 0; t < opt.partitions; ++t) {
        const auto s = mix_seed(seed, {0xc0, static_cast<std::uint64_t>(scale), static_cast<std::uint64_t>(t)});
        search.coloring_maps(sampler.sample(s), opt.colorings, s);
      }
    }
  }
  if (search.best.U.empty()) {
    // Every map was constant; fall back to the best singleton.
    search.offer(std::vector<double>(static_cast<std::size_t>(g.n()), 0.0));
  }
  return search.best;
}

BalancedSeparatorResult balanced_separator(const Graph& g, SeparatorStrategy strategy, const Measure& mu,
                                           const BalancedOptions& opt) {
  check_measure(g, mu);
  BalancedSeparatorResult res;
  const int n = g.n();
  res.total = measure(all_vertices(n), mu);
  const double limit = 2.0 / 3.0 * res.total;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<char> alive(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) alive[v] = !removed[v];
    res.components = connected_components_masked(g, alive);
    const VertexSet* heavy = nullptr;
    double heaviest = -1.0;
    for (const auto& c : res.components) {
      const double m = measure(c, mu);
      if (m > heaviest) {
        heaviest = m;
        heavy = &c;
      }
    }
    res.largest = std::max(0.0, heaviest);
    if (heavy == nullptr || heaviest <= limit * (1.0 + 1e-12) + 1e-12) break;
    ++res.cuts;
    if (heavy->size() == 1) {
      removed[heavy->front()] = 1;
      continue;
    }
    const auto sub = induced_subgraph(g, *heavy);
    Measure sub_mu;
    if (!mu.empty())
      for (Vertex v : sub.to_parent) sub_mu.push_back(mu[v]);
    SweepResult cut;
    try {
      cut = low_expansion_cut(sub.graph, strategy, sub_mu, opt, mix_seed(opt.seed, static_cast<std::uint64_t>(res.cuts)));
    } catch (const std::exception& e) {
      throw SolverError("balanced_separator: " + to_string(strategy) + " failed on a component of " +
                        std::to_string(heavy->size()) + " vertices (smallest id " + std::to_string(heavy->front()) +
                        "): " + e.what());
    }
    if (cut.boundary.empty()) throw InvariantViolation("balanced_separator: strategy returned an empty boundary");
    for (Vertex v : cut.boundary) removed[sub.to_parent[v]] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (removed[v]) res.S.push_back(v);
  if (!is_balanced(g, res.S, mu)) throw InvariantViolation("balanced_separator: result is not balanced");
  return res;
}

}  // namespace rigsep
