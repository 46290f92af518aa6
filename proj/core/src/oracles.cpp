#include "rigsep/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

bool mask_connected(Mask part, const std::vector<Mask>& adj) {
  if (part == 0) return false;
  Mask seen = part & (~part + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= part & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == part;
}

// Union of neighborhoods through split lookup tables.
class NeighborhoodTable {
 public:
  NeighborhoodTable(const std::vector<Mask>& adj, const std::vector<double>* weight) {
    const int n = static_cast<int>(adj.size());
    low_bits_ = n / 2;
    const int high_bits = n - low_bits_;
    build(adj, weight, 0, low_bits_, low_, low_w_);
    build(adj, weight, low_bits_, high_bits, high_, high_w_);
  }
  Mask neighbors(Mask x) const { return low_[x & low_mask()] | high_[x >> low_bits_]; }
  double weight(Mask x) const { return low_w_[x & low_mask()] + high_w_[x >> low_bits_]; }

 private:
  Mask low_mask() const { return (Mask{1} << low_bits_) - 1; }
  static void build(const std::vector<Mask>& adj, const std::vector<double>* weight, int offset, int bits,
                    std::vector<Mask>& nb, std::vector<double>& w) {
    nb.assign(std::size_t{1} << bits, 0);
    w.assign(std::size_t{1} << bits, 0.0);
    for (Mask x = 1; x < (Mask{1} << bits); ++x) {
      const int b = std::countr_zero(x);
      const Mask rest = x & (x - 1);
      nb[x] = nb[rest] | adj[offset + b];
      w[x] = w[rest] + (weight ? (*weight)[offset + b] : 1.0);
    }
  }
  int low_bits_;
  std::vector<Mask> low_, high_;
  std::vector<double> low_w_, high_w_;
};

}  // namespace

ExpansionResult vertex_expansion_exact(const Graph& g, const Measure& mu) {
  const int n = g.n();
  if (n < 1 || n > 25) throw InputError("vertex_expansion_exact: requires 1 <= n <= 25");
  if (!mu.empty() && static_cast<int>(mu.size()) != n) throw InputError("vertex_expansion_exact: measure length");
  const auto adj = adjacency_masks(g);
  const NeighborhoodTable table(adj, mu.empty() ? nullptr : &mu);
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const double total = table.weight(full);

  bool have = false;
  Mask best = 0;
  double best_b = 0.0, best_u = 1.0;
  for (Mask u = 1; u <= full && u != 0; ++u) {
    const Mask bnd = u & table.neighbors(full & ~u);
    const double mu_b = table.weight(bnd), mu_u = table.weight(u);
    if (table.weight(u & ~bnd) > total / 2.0) continue;
    if (mu_u <= 0.0) continue;
    bool take = !have;
    if (have) {
      // Cross-multiplied ratios are exact for counting measures.
      const double lhs = mu_b * best_u, rhs = best_b * mu_u;
      if (lhs != rhs) {
        take = lhs < rhs;
      } else {
        const int pb = std::popcount(bnd), qb = std::popcount(best & table.neighbors(full & ~best));
        take = pb != qb ? pb < qb : mask_to_set(u) < mask_to_set(best);
      }
    }
    if (take) {
      have = true;
      best = u;
      best_b = mu_b;
      best_u = mu_u;
    }
    if (u == full) break;
  }
  if (!have) throw InputError("vertex_expansion_exact: no feasible set");
  ExpansionResult r;
  r.U = mask_to_set(best);
  r.boundary = mask_to_set(best & table.neighbors(full & ~best));
  r.phi = best_b / best_u;
  return r;
}

SeparatorOracleResult min_balanced_separator_exact(const Graph& g, const Measure& mu) {
  const int n = g.n();
  if (n > 18) throw InputError("min_balanced_separator_exact: requires n <= 18");
  if (!mu.empty() && static_cast<int>(mu.size()) != n) throw InputError("min_balanced_separator_exact: measure length");
  const auto adj = adjacency_masks(g);
  const NeighborhoodTable table(adj, mu.empty() ? nullptr : &mu);
  const Mask full = (Mask{1} << n) - 1;
  const double total = table.weight(full);
  const double limit = 2.0 / 3.0 * total * (1.0 + 1e-12) + 1e-12;

  SeparatorOracleResult best;
  bool have = false;
  Mask best_mask = 0;
  for (Mask s = 0; s <= full; ++s) {
    const double size = table.weight(s);
    if (have) {
      if (size > best.size) continue;
      if (size == best.size && std::popcount(s) > std::popcount(best_mask)) continue;
    }
    Mask alive = full & ~s;
    bool ok = true;
    while (alive && ok) {
      Mask comp = alive & (~alive + 1), frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      if (table.weight(comp) > limit) ok = false;
      alive &= ~comp;
    }
    if (ok) {
      const bool take = !have || size < best.size || std::popcount(s) < std::popcount(best_mask) ||
                        mask_to_set(s) < mask_to_set(best_mask);
      if (take) {
        have = true;
        best.size = size;
        best_mask = s;
      }
    }
    if (s == full) break;
  }
  best.S = mask_to_set(best_mask);
  return best;
}

namespace {

// Enumerates assignments of G's vertices to k labelled-by-first-use parts or
// to "deleted", and tests whether the quotient contains H.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, bool strict)
      : n_(g.n()), k_(h.n()), strict_(strict), adj_(adjacency_masks(g)), hadj_(adjacency_masks(h)),
        hedges_(static_cast<int>(h.m())), label_(static_cast<std::size_t>(n_), -1), parts_(static_cast<std::size_t>(k_), 0) {
    order_.resize(static_cast<std::size_t>(k_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return std::popcount(hadj_[a]) > std::popcount(hadj_[b]); });
  }

  std::optional<MinorWitness> run() {
    if (k_ == 0) return MinorWitness{};
    if (k_ > n_) return std::nullopt;
    if (recurse(0, 0)) return witness_;
    return std::nullopt;
  }

 private:
  bool recurse(int v, int used) {
    if (k_ - used > n_ - v) return false;
    if (v == n_) return used == k_ && evaluate();
    label_[v] = -1;
    if (recurse(v + 1, used)) return true;
    for (int j = 0; j < used; ++j) {
      parts_[j] |= Mask{1} << v;
      label_[v] = j;
      const bool found = recurse(v + 1, used);
      parts_[j] &= ~(Mask{1} << v);
      if (found) return true;
    }
    if (used < k_) {
      parts_[used] |= Mask{1} << v;
      label_[v] = used;
      const bool found = recurse(v + 1, used + 1);
      parts_[used] &= ~(Mask{1} << v);
      if (found) return true;
    }
    label_[v] = -1;
    return false;
  }

  bool evaluate() {
    for (int j = 0; j < k_; ++j)
      if (!mask_connected(parts_[j], adj_)) return false;
    quotient_.assign(static_cast<std::size_t>(k_), 0);
    int qedges = 0;
    for (int a = 0; a < k_; ++a) {
      Mask nb = 0;
      for (Mask f = parts_[a]; f; f &= f - 1) nb |= adj_[std::countr_zero(f)];
      for (int b = 0; b < k_; ++b)
        if (b != a && (nb & parts_[b])) quotient_[a] |= Mask{1} << b;
      qedges += std::popcount(quotient_[a]);
    }
    qedges /= 2;
    if (strict_ ? qedges != hedges_ : qedges < hedges_) return false;
    map_.assign(static_cast<std::size_t>(k_), -1);
    if (!embed(0, 0)) return false;
    witness_.supernodes.assign(static_cast<std::size_t>(k_), {});
    for (int x = 0; x < k_; ++x) witness_.supernodes[x] = mask_to_set(parts_[map_[x]]);
    return true;
  }

  bool embed(int i, Mask taken) {
    if (i == k_) return true;
    const int x = order_[i];
    for (int p = 0; p < k_; ++p) {
      if (taken & (Mask{1} << p)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int y = order_[j];
        const bool hedge = hadj_[x] & (Mask{1} << y);
        const bool qedge = quotient_[p] & (Mask{1} << map_[y]);
        if (hedge && !qedge) ok = false;
        if (strict_ && !hedge && qedge) ok = false;
      }
      if (!ok) continue;
      map_[x] = p;
      if (embed(i + 1, taken | (Mask{1} << p))) return true;
      map_[x] = -1;
    }
    return false;
  }

  int n_, k_;
  bool strict_;
  std::vector<Mask> adj_, hadj_;
  int hedges_;
  std::vector<int> label_;
  std::vector<Mask> parts_;
  std::vector<Mask> quotient_;
  std::vector<int> order_, map_;
  MinorWitness witness_;
};

void check_minor_sizes(const Graph& g, const Graph& h, const char* what) {
  if (g.n() > 10) throw InputError(std::string(what) + ": host graph limited to 10 vertices");
  if (h.n() > 10) throw InputError(std::string(what) + ": pattern graph limited to 10 vertices");
}

}  // namespace

std::optional<MinorWitness> has_minor_exact(const Graph& g, const Graph& h) {
  check_minor_sizes(g, h, "has_minor_exact");
  return MinorSearch(g, h, false).run();
}

std::optional<MinorWitness> has_strict_minor_exact(const Graph& g, const Graph& h) {
  check_minor_sizes(g, h, "has_strict_minor_exact");
  return MinorSearch(g, h, true).run();
}

std::optional<MinorWitness> has_careful_minor_exact(const Graph& g, const Graph& h) {
  return has_strict_minor_exact(g, subdivision(h));
}

std::vector<std::string> validate_minor_witness(const Graph& g, const Graph& h, const MinorWitness& w, bool strict) {
  std::vector<std::string> bad;
  if (static_cast<int>(w.supernodes.size()) != h.n()) {
    bad.push_back("expected one supernode per H vertex");
    return bad;
  }
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (int x = 0; x < h.n(); ++x) {
    const auto& a = w.supernodes[x];
    if (a.empty()) bad.push_back("supernode " + std::to_string(x) + " is empty");
    for (Vertex v : a) {
      if (!g.contains(v)) {
        bad.push_back("supernode " + std::to_string(x) + " has unknown vertex " + std::to_string(v));
        continue;
      }
      if (owner[v] >= 0) bad.push_back("vertex " + std::to_string(v) + " lies in two supernodes");
      owner[v] = x;
    }
    if (!a.empty() && std::all_of(a.begin(), a.end(), [&](Vertex v) { return g.contains(v); }) &&
        !is_connected_set(g, make_set(a)))
      bad.push_back("supernode " + std::to_string(x) + " is not connected");
  }
  if (!bad.empty()) return bad;
  for (int x = 0; x < h.n(); ++x) {
    for (int y = x + 1; y < h.n(); ++y) {
      const bool touch = has_edge_between(g, w.supernodes[x], w.supernodes[y]);
      if (h.has_edge(x, y) && !touch)
        bad.push_back("no edge between supernodes " + std::to_string(x) + " and " + std::to_string(y));
      if (strict && !h.has_edge(x, y) && touch)
        bad.push_back("supernodes " + std::to_string(x) + " and " + std::to_string(y) + " touch without an H edge");
    }
  }
  return bad;
}

std::vector<std::string> validate_careful_witness(const Graph& g, const Graph& h, const CarefulWitness& w) {
  std::vector<std::string> bad;
  const auto es = h.edges();
  if (static_cast<int>(w.branch.size()) != h.n()) bad.push_back("expected one branch set per H vertex");
  if (w.subdivider.size() != es.size()) bad.push_back("expected one subdivision vertex per H edge");
  if (!bad.empty()) return bad;
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (int x = 0; x < h.n(); ++x) {
    const auto& b = w.branch[x];
    if (b.empty()) bad.push_back("B_" + std::to_string(x) + " is empty");
    bool known = true;
    for (Vertex v : b) {
      if (!g.contains(v)) {
        bad.push_back("B_" + std::to_string(x) + " has unknown vertex " + std::to_string(v));
        known = false;
        continue;
      }
      if (owner[v] >= 0) bad.push_back("vertex " + std::to_string(v) + " lies in two branch sets");
      owner[v] = x;
    }
    if (known && !b.empty() && !is_connected_set(g, make_set(b)))
      bad.push_back("B_" + std::to_string(x) + " is not connected");
  }
  if (!bad.empty()) return bad;
  for (int x = 0; x < h.n(); ++x)
    for (int y = x + 1; y < h.n(); ++y)
      if (has_edge_between(g, w.branch[x], w.branch[y]))
        bad.push_back("condition 1: B_" + std::to_string(x) + " and B_" + std::to_string(y) + " are adjacent");
  std::set<Vertex> seen;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const Vertex s = w.subdivider[e];
    if (!g.contains(s)) {
      bad.push_back("w for edge " + std::to_string(e) + " is not a vertex");
      return bad;
    }
    if (!seen.insert(s).second) bad.push_back("vertex " + std::to_string(s) + " subdivides two edges");
    if (owner[s] >= 0) bad.push_back("w for edge " + std::to_string(e) + " lies in a branch set");
  }
  for (std::size_t e = 0; e < es.size(); ++e)
    for (std::size_t f = e + 1; f < es.size(); ++f)
      if (g.has_edge(w.subdivider[e], w.subdivider[f]))
        bad.push_back("condition 2: w vertices of edges " + std::to_string(e) + " and " + std::to_string(f) +
                      " are adjacent");
  for (std::size_t e = 0; e < es.size(); ++e) {
    const VertexSet ws{w.subdivider[e]};
    for (int u = 0; u < h.n(); ++u) {
      const bool touches = has_edge_between(g, ws, w.branch[u]);
      const bool endpoint = u == es[e].first || u == es[e].second;
      if (touches != endpoint)
        bad.push_back("condition 3: w for edge " + std::to_string(e) + (endpoint ? " misses" : " touches") +
                      " B_" + std::to_string(u));
    }
  }
  return bad;
}

namespace {

double spread_floyd(const Graph& g, const std::vector<double>& omega) {
  const int n = g.n();
  std::vector<double> d(static_cast<std::size_t>(n) * n, kInfinity);
  for (int v = 0; v < n; ++v) d[v * n + v] = 0.0;
  for (auto [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 0.5 * (omega[u] + omega[v]);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  double s = 0.0;
  for (double x : d) s += x;
  return s / (static_cast<double>(n) * n);
}

}  // namespace

double cspread_exact_small(const Graph& g) {
  const int n = g.n();
  if (n < 1 || n > 6) throw InputError("cspread_exact_small: requires 1 <= n <= 6");
  if (!is_connected(g)) throw InputError("cspread_exact_small: graph is not connected");
  if (n == 1) return 0.0;
  // Lattice points of {w >= 0, sum w = n} with step n/N.
  const int grid = 24;
  std::vector<std::pair<double, std::vector<double>>> top;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int i, int left) {
    if (i == n - 1) {
      k[i] = left;
      std::vector<double> w(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) w[j] = static_cast<double>(n) * k[j] / grid;
      const double val = spread_floyd(g, w);
      top.emplace_back(val, std::move(w));
      if (top.size() > 64) {
        std::nth_element(top.begin(), top.begin() + 8, top.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        top.resize(8);
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      k[i] = c;
      walk(i + 1, left - c);
    }
  };
  walk(0, grid);
  std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  top.resize(std::min<std::size_t>(top.size(), 8));

  // Zero-sum move directions: e_i - e_j, e_i + e_j - e_k - e_l, and random ones.
  std::vector<std::vector<double>> dirs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<double> d(static_cast<std::size_t>(n), 0.0);
      d[i] = 1.0;
      d[j] = -1.0;
      dirs.push_back(d);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (a == i || a == j || b == i || b == j) continue;
          std::vector<double> d(static_cast<std::size_t>(n), 0.0);
          d[i] = d[j] = 0.5;
          d[a] = d[b] = -0.5;
          dirs.push_back(d);
        }
  Rng rng(0xc5);
  for (int r = 0; r < 40; ++r) {
    std::vector<double> d(static_cast<std::size_t>(n));
    double mean = 0.0;
    for (double& x : d) {
      x = rng.uniform(-1.0, 1.0);
      mean += x / n;
    }
    double nrm = 0.0;
    for (double& x : d) {
      x -= mean;
      nrm = std::max(nrm, std::abs(x));
    }
    for (double& x : d) x /= nrm;
    dirs.push_back(d);
  }

  double best = top.front().first;
  for (auto& [val, w] : top) {
    double cur = val;
    for (double step = static_cast<double>(n) / grid; step > 1e-11; step *= 0.5) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (const auto& d : dirs) {
          std::vector<double> cand = w;
          bool feasible = true;
          for (int j = 0; j < n; ++j) {
            cand[j] += step * d[j];
            if (cand[j] < -1e-15) feasible = false;
            cand[j] = std::max(0.0, cand[j]);
          }
          if (!feasible) continue;
          const double v = spread_floyd(g, cand);
          if (v > cur + 1e-15) {
            cur = v;
            w = std::move(cand);
            improved = true;
          }
        }
      }
    }
    best = std::max(best, cur);
  }
  return best;
}

std::vector<Graph> connected_graph_catalog(int n) {
  if (n < 1 || n > 6) throw InputError("connected_graph_catalog: requires 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int np = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> pair_id(static_cast<std::size_t>(n * n), -1);
  for (int i = 0; i < np; ++i) pair_id[pairs[i].first * n + pairs[i].second] = pair_id[pairs[i].second * n + pairs[i].first] = i;

  auto relabel = [&](std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1U) out |= 1U << pair_id[perm[pairs[i].first] * n + perm[pairs[i].second]];
    return out;
  };
  // Canonical form: the largest relabelled mask, so that low pair indices
  // (edges among small ids) are present.
  std::set<std::pair<int, std::uint32_t>> seen;
  std::vector<Graph> out;
  std::vector<std::pair<std::pair<int, std::uint32_t>, Graph>> found;
  for (std::uint32_t mask = 0; mask < (1U << np); ++mask) {
    std::vector<Edge> es;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1U) es.push_back(pairs[i]);
    const Graph g = Graph::from_edges(n, es);
    if (!is_connected(g)) continue;
    std::uint32_t canon = 0;
    for (const auto& perm : perms) canon = std::max(canon, relabel(mask, perm));
    const auto key = std::make_pair(std::popcount(mask), ~canon);
    if (!seen.insert(key).second) continue;
    std::vector<Edge> ce;
    for (int i = 0; i < np; ++i)
      if (canon >> i & 1U) ce.push_back(pairs[i]);
    found.emplace_back(key, Graph::from_edges(n, ce));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace rigsep
