#include "rigsep/partition/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

std::vector<double> rounding_map_ball(const Graph& g, const ConformalWeight& w, Vertex x0, double radius) {
  w.check_matches(g);
  g.check_vertex(x0);
  const auto d0 = distances_from(g, w, x0);
  VertexSet ball;
  for (Vertex v = 0; v < g.n(); ++v)
    if (d0[v] <= radius) ball.push_back(v);
  if (ball.empty()) throw InputError("rounding_map_ball: empty ball");
  auto f = distances_to_set(g, w, ball);
  if (!is_one_lipschitz(g, w, f)) throw InvariantViolation("rounding_map_ball: distance map is not 1-Lipschitz");
  return f;
}

std::vector<double> rounding_map_coloring(const Graph& g, const ConformalWeight& w,
                                          const PaddedPartitionSample& partition, const std::vector<int>& colors) {
  w.check_matches(g);
  if (colors.size() != partition.blocks.size()) throw InputError("rounding_map_coloring: one color per block");
  VertexSet target;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == 1) target.insert(target.end(), partition.blocks[i].begin(), partition.blocks[i].end());
  if (target.empty()) throw InputError("rounding_map_coloring: no block colored 1");
  auto f = distances_to_set(g, w, make_set(std::move(target)));
  if (!is_one_lipschitz(g, w, f)) throw InvariantViolation("rounding_map_coloring: map is not 1-Lipschitz");
  return f;
}

std::vector<double> rounding_map_coloring(const Graph& g, const ConformalWeight& w,
                                          const PaddedPartitionSample& partition, std::uint64_t seed) {
  if (partition.blocks.empty()) throw InputError("rounding_map_coloring: empty partition");
  Rng rng(mix_seed(seed, 0x636f6c6f72ULL));
  std::vector<int> colors(partition.blocks.size());
  for (;;) {
    bool any = false;
    for (int& c : colors) {
      c = rng.coin() ? 1 : 0;
      any = any || c == 1;
    }
    if (any) break;
  }
  return rounding_map_coloring(g, w, partition, colors);
}

bool better_candidate(std::size_t b1, std::size_t u1, const VertexSet& s1, std::size_t b2, std::size_t u2,
                      const VertexSet& s2) {
  const auto lhs = static_cast<unsigned long long>(b1) * u2;
  const auto rhs = static_cast<unsigned long long>(b2) * u1;
  if (lhs != rhs) return lhs < rhs;
  if (b1 != b2) return b1 < b2;
  return s1 < s2;
}

namespace {

constexpr double kSweepSlack = 1e-12;

struct Candidate {
  VertexSet U;
  VertexSet boundary;
  double mu_boundary = 0.0;
  double mu_u = 0.0;
  double theta = 0.0;
  bool valid = false;
};

bool better(const Candidate& a, const Candidate& b, bool weighted) {
  if (!b.valid) return true;
  if (!weighted) return better_candidate(a.boundary.size(), a.U.size(), a.U, b.boundary.size(), b.U.size(), b.U);
  const double lhs = a.mu_boundary * b.mu_u;
  const double rhs = b.mu_boundary * a.mu_u;
  if (lhs != rhs) return lhs < rhs;
  if (a.boundary.size() != b.boundary.size()) return a.boundary.size() < b.boundary.size();
  return a.U < b.U;
}

double measure_of(const VertexSet& s, const Measure& mu) {
  if (mu.empty()) return static_cast<double>(s.size());
  double t = 0.0;
  for (Vertex v : s) t += mu[v];
  return t;
}

}  // namespace

SweepResult sweep_cut(const Graph& g, const ConformalWeight& w, const std::vector<double>& f, const Measure& mu) {
  w.check_matches(g);
  const int n = g.n();
  if (static_cast<int>(f.size()) != n) throw InputError("sweep_cut: map has wrong length");
  if (!mu.empty() && static_cast<int>(mu.size()) != n) throw InputError("sweep_cut: measure has wrong length");
  for (double x : f)
    if (!std::isfinite(x)) throw InputError("sweep_cut: map must be finite");
  if (!is_one_lipschitz(g, w, f)) throw InputError("sweep_cut: map is not 1-Lipschitz");
  const bool weighted = !mu.empty();
  const double total = measure_of(all_vertices(n), mu);

  std::vector<double> crit;
  crit.reserve(static_cast<std::size_t>(3 * n));
  for (Vertex v = 0; v < n; ++v) {
    crit.push_back(f[v]);
    crit.push_back(f[v] - 0.5 * w[v]);
    crit.push_back(f[v] + 0.5 * w[v]);
  }
  // Values closer than the rounding slack are one critical value; otherwise
  // a midpoint could fall into a gap that exists only in floating point.
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end(),
                         [](double a, double b) { return b - a <= kSweepSlack * std::max(1.0, std::abs(a)); }),
             crit.end());
  std::vector<double> thetas;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    thetas.push_back(crit[i]);
    if (i + 1 < crit.size()) thetas.push_back(0.5 * (crit[i] + crit[i + 1]));
  }

  const auto edges = g.edges();
  SweepResult out;
  Candidate best;
  std::vector<char> in_a(static_cast<std::size_t>(n)), in_s(static_cast<std::size_t>(n));
  for (double theta : thetas) {
    int na = 0, ns = 0;
    for (Vertex v = 0; v < n; ++v) {
      in_a[v] = f[v] <= theta;
      in_s[v] = std::abs(f[v] - theta) <= 0.5 * w[v] + kSweepSlack * std::max(1.0, std::abs(theta));
      na += in_a[v];
      ns += in_s[v];
    }
    out.levels.push_back({theta, na, n - na, ns});
    for (auto [u, v] : edges) {
      const bool au = in_a[u] && !in_s[u], bu = !in_a[u] && !in_s[u];
      const bool av = in_a[v] && !in_s[v], bv = !in_a[v] && !in_s[v];
      if ((au && bv) || (bu && av)) {
        const double len = edge_length(w, u, v);
        if (std::abs(f[u] - f[v]) > len + 1e-9 * std::max(1.0, len))
          throw InvariantViolation("sweep_cut: edge between A\\S and B\\S at theta " + std::to_string(theta));
      }
    }
    for (int side = 0; side < 2; ++side) {
      Candidate c;
      for (Vertex v = 0; v < n; ++v)
        if (in_s[v] || (side == 0 ? in_a[v] : !in_a[v])) c.U.push_back(v);
      if (c.U.empty() || static_cast<int>(c.U.size()) == n) continue;
      c.boundary = boundary(g, c.U);
      const double mu_interior = measure_of(set_difference(c.U, c.boundary), mu);
      if (mu_interior > total / 2.0) continue;
      c.mu_boundary = measure_of(c.boundary, mu);
      c.mu_u = measure_of(c.U, mu);
      if (c.mu_u <= 0.0) continue;
      c.theta = theta;
      c.valid = true;
      if (better(c, best, weighted)) best = std::move(c);
    }
  }

  if (!best.valid) {
    out.from_sweep = false;
    for (Vertex v = 0; v < n; ++v) {
      Candidate c;
      c.U = {v};
      c.boundary = g.degree(v) > 0 ? VertexSet{v} : VertexSet{};
      const double mu_interior = c.boundary.empty() ? measure_of(c.U, mu) : 0.0;
      if (mu_interior > total / 2.0) continue;
      c.mu_boundary = measure_of(c.boundary, mu);
      c.mu_u = measure_of(c.U, mu);
      if (c.mu_u <= 0.0) continue;
      c.valid = true;
      if (better(c, best, weighted)) best = std::move(c);
    }
    if (!best.valid) throw InputError("sweep_cut: no feasible candidate set");
  }
  out.U = std::move(best.U);
  out.boundary = std::move(best.boundary);
  out.ratio = best.mu_boundary / best.mu_u;
  out.theta = best.theta;
  return out;
}

ExpansionWitnesses vertex_expansion_witnesses(const Graph& g, const VertexSet& u_in) {
  const VertexSet u = make_set(u_in);
  if (u.empty()) throw InputError("vertex_expansion_witnesses: U must be nonempty");
  g.check_set(u);
  ExpansionWitnesses out;
  out.boundary = boundary(g, u);
  if (out.boundary.empty()) throw InputError("vertex_expansion_witnesses: U has no boundary");
  const int n = g.n();
  const std::size_t s = out.boundary.size();
  const std::size_t half = (s + 1) / 2;
  out.s1.assign(out.boundary.begin(), out.boundary.begin() + static_cast<long>(half));
  out.s2.assign(out.boundary.begin() + static_cast<long>(half), out.boundary.end());
  out.omega = ConformalWeight::indicator(n, out.boundary);

  const auto in_u = membership_mask(n, u);
  const auto in_b = membership_mask(n, out.boundary);
  const auto in_s1 = membership_mask(n, out.s1);
  out.f1.assign(static_cast<std::size_t>(n), 0.0);
  out.f2.assign(static_cast<std::size_t>(n), 0.0);
  for (Vertex v = 0; v < n; ++v) {
    if (in_b[v]) {
      out.f2[v] = in_s1[v] ? -0.5 : 0.5;
    } else {
      out.f1[v] = in_u[v] ? -0.5 : 0.5;
    }
  }
  if (!is_one_lipschitz(g, out.omega, out.f1) || !is_one_lipschitz(g, out.omega, out.f2))
    throw InvariantViolation("vertex_expansion_witnesses: step map is not 1-Lipschitz");
  const VertexSet all = all_vertices(n);
  out.sobs1 = average_abs_difference(all, out.f1);
  out.sobs2 = average_abs_difference(all, out.f2);
  const double scale = static_cast<double>(n) / static_cast<double>(s);
  out.normalized1 = out.sobs1 * scale;
  out.normalized2 = out.sobs2 * scale;
  return out;
}

}  // namespace rigsep
