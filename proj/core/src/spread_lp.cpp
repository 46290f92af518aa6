#include "rigsep/flow/spread_lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rigsep/errors.hpp"
#include "rigsep/lp/simplex.hpp"

namespace rigsep {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.n() == 0) throw InputError(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw InputError(std::string(what) + ": graph is not connected");
}

// Index of the unordered pair {u,v}, u != v, among the n(n-1)/2 pairs.
struct PairIndex {
  int n;
  int operator()(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  }
  int count() const { return n * (n - 1) / 2; }
};

// (omega, d) relaxation rows shared by p = 1 and p = 2.
lp::Problem spread_problem(const Graph& g) {
  const int n = g.n();
  const PairIndex idx{n};
  lp::Problem prob;
  prob.num_vars = n + idx.count();
  prob.objective.assign(static_cast<std::size_t>(prob.num_vars), 0.0);
  const double c = 2.0 / (static_cast<double>(n) * n);
  for (int k = 0; k < idx.count(); ++k) prob.objective[n + k] = c;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      for (Vertex w : g.neighbors(v)) {
        std::vector<std::pair<int, double>> row{{n + idx(u, v), 1.0}};
        if (w != u) row.emplace_back(n + idx(u, w), -1.0);
        row.emplace_back(w, -0.5);
        row.emplace_back(v, -0.5);
        prob.add_row(std::move(row), lp::Sense::LessEqual, 0.0);
      }
    }
  }
  return prob;
}

lp::Solution run(const lp::Problem& prob, bool via_dual) {
  const auto sol = via_dual ? lp::solve_via_dual(prob) : lp::solve(prob);
  if (sol.status != lp::Status::Optimal) throw SolverError("cspread_lp: LP not solved to optimality");
  return sol;
}

std::vector<double> omega_part(const lp::Solution& sol, int n) {
  return {sol.x.begin(), sol.x.begin() + n};
}

double spread_of(const Graph& g, const std::vector<double>& omega) {
  return spread(all_pairs_metric(g, ConformalWeight(omega)));
}

// Edge-incidence loads of routing every unordered pair half along each
// orientation of shortest-path trees; returns the sum over ordered pairs
// of dist_w as well.
double tree_loads(const Graph& g, const ConformalWeight& w, std::vector<double>& load) {
  const int n = g.n();
  load.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::vector<double> size(static_cast<std::size_t>(n));
  double total = 0.0;
  for (Vertex s = 0; s < n; ++s) {
    const auto t = shortest_path_tree(g, w, s);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return t.dist[a] > t.dist[b]; });
    std::fill(size.begin(), size.end(), 1.0);
    for (Vertex v : order) {
      total += t.dist[v];
      const Vertex p = t.pred[v];
      if (p < 0) continue;
      size[p] += size[v];
      load[v] += 0.5 * size[v];
      load[p] += 0.5 * size[v];
    }
  }
  return total;
}

SpreadLPResult ascent(const Graph& g, const SpreadLPOptions& opt) {
  const int n = g.n();
  std::vector<double> omega(static_cast<std::size_t>(n), 1.0), load, avg(static_cast<std::size_t>(n), 0.0);
  SpreadLPResult best;
  best.exact = false;
  best.value = -1.0;
  const double n2 = static_cast<double>(n) * n;
  for (int it = 0; it < opt.ascent_iterations; ++it) {
    const ConformalWeight w(omega);
    const double value = tree_loads(g, w, load) / n2;
    if (value > best.value) {
      best.value = value;
      best.omega = w;
    }
    for (int v = 0; v < n; ++v) avg[v] += (load[v] - avg[v]) / (it + 1);
    const double gmax = *std::max_element(load.begin(), load.end());
    const double eta = 1.0 / std::sqrt(it + 1.0);
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
      omega[v] *= std::exp(eta * (load[v] / gmax - 1.0));
      sum += omega[v];
    }
    for (double& x : omega) x *= n / sum;
    best.iterations = it + 1;
  }
  best.lp_value = best.value;
  // Weak duality: cspread_1 <= vcong_inf / n <= max load of the averaged flow / n.
  best.upper_bound = *std::max_element(avg.begin(), avg.end()) / n;
  best.norm = best.omega.l1_norm();
  return best;
}

SpreadLPResult cspread1(const Graph& g, const SpreadLPOptions& opt) {
  const int n = g.n();
  if (n > opt.exact_limit) return ascent(g, opt);
  lp::Problem prob = spread_problem(g);
  std::vector<std::pair<int, double>> norm;
  for (int v = 0; v < n; ++v) norm.emplace_back(v, 1.0);
  prob.add_row(std::move(norm), lp::Sense::LessEqual, static_cast<double>(n));
  const auto sol = run(prob, opt.via_dual);
  SpreadLPResult res;
  res.omega = ConformalWeight(omega_part(sol, n));
  res.lp_value = sol.objective;
  res.value = spread(all_pairs_metric(g, res.omega));
  res.upper_bound = std::max(res.value, res.lp_value);
  res.iterations = sol.iterations;
  res.norm = res.omega.l1_norm();
  if (res.norm > 1.0 + 1e-8) throw SolverError("cspread_lp: optimizer returned an infeasible weight");
  if (std::abs(res.value - res.lp_value) > 1e-6 * std::max(1.0, res.value))
    throw SolverError("cspread_lp: LP value disagrees with the recomputed spread");
  return res;
}

SpreadLPResult cspread2(const Graph& g, const SpreadLPOptions& opt) {
  const int n = g.n();
  if (n > opt.exact_limit) throw InputError("cspread_lp: p = 2 supported up to n = " + std::to_string(opt.exact_limit));
  const double rn = std::sqrt(static_cast<double>(n));
  lp::Problem prob = spread_problem(g);
  std::vector<std::pair<int, double>> sum;
  for (int v = 0; v < n; ++v) {
    prob.add_row({{v, 1.0}}, lp::Sense::LessEqual, rn);
    sum.emplace_back(v, 1.0);
  }
  prob.add_row(std::move(sum), lp::Sense::LessEqual, static_cast<double>(n));

  SpreadLPResult best;
  best.value = -1.0;
  double upper = kInfinity;
  for (int round = 1; round <= opt.max_rounds; ++round) {
    const auto sol = run(prob, opt.via_dual);
    best.iterations += sol.iterations;
    auto omega = omega_part(sol, n);
    double nrm = 0.0;
    for (double x : omega) nrm += x * x;
    nrm = std::sqrt(nrm);
    upper = std::min(upper, sol.objective);
    const double factor = nrm > rn ? rn / nrm : 1.0;
    for (double& x : omega) x *= factor;
    const double value = spread_of(g, omega);
    if (value > best.value) {
      best.value = value;
      best.lp_value = sol.objective * factor;
      best.omega = ConformalWeight(omega);
    }
    if (upper - best.value <= opt.relative_gap * std::max(best.value, 1e-12)) break;
    std::vector<std::pair<int, double>> cut;
    for (int v = 0; v < n; ++v)
      if (omega[v] > 0.0) cut.emplace_back(v, omega[v] / (nrm * factor));
    prob.add_row(std::move(cut), lp::Sense::LessEqual, rn);
  }
  best.upper_bound = upper;
  best.exact = upper - best.value <= opt.relative_gap * std::max(best.value, 1e-12);
  best.norm = best.omega.lp_norm(2.0);
  return best;
}

}  // namespace

SpreadLPResult cspread_lp(const Graph& g, int p, const SpreadLPOptions& opt) {
  if (p != 1 && p != 2) throw InputError("cspread_lp: p must be 1 or 2");
  require_connected(g, "cspread_lp");
  if (g.n() == 1) {
    SpreadLPResult r;
    r.omega = ConformalWeight::constant(1, 1.0);
    r.norm = 1.0;
    return r;
  }
  return p == 1 ? cspread1(g, opt) : cspread2(g, opt);
}

namespace {

struct Column {
  int pair;
  Path path;
  std::vector<std::pair<Vertex, double>> coef;
};

std::vector<std::pair<Vertex, double>> coefficients(const Path& path, Congestion convention) {
  std::map<Vertex, double> acc;
  if (convention == Congestion::EdgeIncidence) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      acc[path[i]] += 1.0;
      acc[path[i + 1]] += 1.0;
    }
  } else {
    for (Vertex v : path) acc[v] = 1.0;
  }
  return {acc.begin(), acc.end()};
}

// Cost of the cheapest u-w path under vertex prices, given a shortest-path
// tree for the conformal weight equal to the prices.
double path_cost(const ShortestPathTree& t, const std::vector<double>& price, Vertex w, Congestion convention) {
  if (convention == Congestion::EdgeIncidence) return 2.0 * t.dist[w];
  return t.dist[w] + 0.5 * (price[t.source] + price[w]);
}

std::vector<std::pair<Vertex, Vertex>> all_pairs_list(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
  return pairs;
}

VcongResult finish(const Graph& g, VcongResult res, int p, Congestion convention) {
  res.congestion = congestion_map(g, res.flow, convention);
  if (p == kInfNorm) {
    res.value = res.congestion.empty() ? 0.0 : *std::max_element(res.congestion.begin(), res.congestion.end());
  } else if (p == 1) {
    res.value = std::accumulate(res.congestion.begin(), res.congestion.end(), 0.0);
  } else {
    double s = 0.0;
    for (double x : res.congestion) s += x * x;
    res.value = std::sqrt(s);
  }
  return res;
}

VcongResult vcong_one(const Graph& g, Congestion convention) {
  VcongResult res;
  const auto unit = ConformalWeight::constant(g.n(), 1.0);
  for (Vertex u = 0; u < g.n(); ++u) {
    const auto t = shortest_path_tree(g, unit, u);
    for (Vertex w = u + 1; w < g.n(); ++w) res.flow.add(tree_path(t, w), 1.0);
  }
  res = finish(g, std::move(res), 1, convention);
  res.lower_bound = res.value;
  return res;
}

VcongResult vcong_inf(const Graph& g, Congestion convention, const VcongOptions& opt) {
  const int n = g.n();
  const auto pairs = all_pairs_list(n);
  const int np = static_cast<int>(pairs.size());
  std::vector<Column> cols;
  std::set<Path> pool;
  const auto unit = ConformalWeight::constant(n, 1.0);
  for (Vertex u = 0; u < n; ++u) {
    const auto t = shortest_path_tree(g, unit, u);
    for (Vertex w = u + 1; w < n; ++w) {
      Path path = tree_path(t, w);
      pool.insert(path);
      cols.push_back({PairIndex{n}(u, w), path, coefficients(path, convention)});
    }
  }

  VcongResult res;
  lp::Solution sol;
  for (int round = 0;; ++round) {
    if (round >= opt.max_rounds) throw SolverError("vcong_lp: column generation did not converge");
    lp::Problem master;
    master.maximize = false;
    master.num_vars = 1 + static_cast<int>(cols.size());
    master.objective.assign(static_cast<std::size_t>(master.num_vars), 0.0);
    master.objective[0] = 1.0;
    std::vector<std::vector<std::pair<int, double>>> pair_rows(static_cast<std::size_t>(np));
    std::vector<std::vector<std::pair<int, double>>> vertex_rows(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      pair_rows[cols[j].pair].emplace_back(static_cast<int>(j) + 1, 1.0);
      for (auto [v, a] : cols[j].coef) vertex_rows[v].emplace_back(static_cast<int>(j) + 1, a);
    }
    for (auto& r : pair_rows) master.add_row(std::move(r), lp::Sense::Equal, 1.0);
    for (auto& r : vertex_rows) {
      r.emplace_back(0, -1.0);
      master.add_row(std::move(r), lp::Sense::LessEqual, 0.0);
    }
    sol = lp::solve(master);
    if (sol.status != lp::Status::Optimal) throw SolverError("vcong_lp: master LP not optimal");
    res.iterations += sol.iterations;

    std::vector<double> price(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) price[v] = std::max(0.0, -sol.duals[np + v]);
    const ConformalWeight pw(price);
    int added = 0;
    double bound = 0.0;
    for (Vertex u = 0; u < n; ++u) {
      const auto t = shortest_path_tree(g, pw, u);
      for (Vertex w = u + 1; w < n; ++w) {
        const int k = PairIndex{n}(u, w);
        const double cost = path_cost(t, price, w, convention);
        bound += cost;
        const double y = sol.duals[k];
        if (cost < y - 1e-9 * std::max(1.0, std::abs(y))) {
          Path path = tree_path(t, w);
          if (pool.insert(path).second) {
            cols.push_back({k, path, coefficients(path, convention)});
            ++added;
          }
        }
      }
    }
    const double psum = std::accumulate(price.begin(), price.end(), 0.0);
    res.lower_bound = psum > 0.0 ? bound / std::max(1.0, psum) : 0.0;
    res.prices = price;
    if (added == 0) break;
  }
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (sol.x[j + 1] > 1e-12) res.flow.add(cols[j].path, sol.x[j + 1]);
  return finish(g, std::move(res), kInfNorm, convention);
}

struct Active {
  Path path;
  std::vector<std::pair<Vertex, double>> coef;
  double x;
};

double dot(const std::vector<std::pair<Vertex, double>>& coef, const std::vector<double>& c) {
  double s = 0.0;
  for (auto [v, a] : coef) s += a * c[v];
  return s;
}

VcongResult vcong_two(const Graph& g, Congestion convention, const VcongOptions& opt) {
  const int n = g.n();
  const auto pairs = all_pairs_list(n);
  std::vector<std::vector<Active>> act(pairs.size());
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  const auto unit = ConformalWeight::constant(n, 1.0);
  for (Vertex u = 0; u < n; ++u) {
    const auto t = shortest_path_tree(g, unit, u);
    for (Vertex w = u + 1; w < n; ++w) {
      Path path = tree_path(t, w);
      auto coef = coefficients(path, convention);
      for (auto [v, a] : coef) c[v] += a;
      act[PairIndex{n}(u, w)].push_back({std::move(path), std::move(coef), 1.0});
    }
  }
  auto objective = [&] {
    double s = 0.0;
    for (double x : c) s += x * x;
    return s;
  };

  VcongResult res;
  double f = objective(), gap = kInfinity;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    // Gradient 2c; linear minimization per pair gives the duality gap.
    std::vector<double> grad(c.size());
    for (int v = 0; v < n; ++v) grad[v] = 2.0 * c[v];
    const ConformalWeight gw(grad);
    gap = 0.0;
    std::vector<ShortestPathTree> trees;
    trees.reserve(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
      trees.push_back(shortest_path_tree(g, gw, u));
      for (Vertex w = u + 1; w < n; ++w) {
        const double best = path_cost(trees.back(), grad, w, convention);
        double cur = 0.0;
        for (const auto& a : act[PairIndex{n}(u, w)]) cur += a.x * dot(a.coef, grad);
        gap += cur - best;
      }
    }
    f = objective();
    res.iterations = sweep;
    if (gap <= opt.relative_gap * f) break;

    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = u + 1; w < n; ++w) {
        auto& list = act[PairIndex{n}(u, w)];
        Path cand = tree_path(trees[u], w);
        auto it = std::find_if(list.begin(), list.end(), [&](const Active& a) { return a.path == cand; });
        if (it == list.end()) {
          list.push_back({cand, coefficients(cand, convention), 0.0});
          it = list.end() - 1;
        }
        const std::size_t bi = static_cast<std::size_t>(it - list.begin());
        std::size_t wi = bi;
        double worst = -kInfinity;
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (list[i].x <= 0.0) continue;
          const double cost = dot(list[i].coef, c);
          if (cost > worst) {
            worst = cost;
            wi = i;
          }
        }
        if (wi == bi) continue;
        std::map<Vertex, double> d;
        for (auto [v, a] : list[bi].coef) d[v] += a;
        for (auto [v, a] : list[wi].coef) d[v] -= a;
        double cd = 0.0, dd = 0.0;
        for (auto [v, a] : d) {
          cd += c[v] * a;
          dd += a * a;
        }
        if (dd <= 0.0 || cd >= 0.0) continue;
        const double step = std::min(list[wi].x, -cd / dd);
        for (auto [v, a] : d) c[v] += step * a;
        list[bi].x += step;
        list[wi].x -= step;
        if (list[wi].x <= 1e-15) {
          list[wi].x = 0.0;
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(wi));
        }
      }
    }
  }
  if (gap > opt.relative_gap * f) throw SolverError("vcong_lp: Frank-Wolfe did not reach the requested gap");
  for (const auto& list : act)
    for (const auto& a : list)
      if (a.x > 0.0) res.flow.add(a.path, a.x);
  res = finish(g, std::move(res), 2, convention);
  res.lower_bound = std::sqrt(std::max(0.0, f - gap));
  return res;
}

}  // namespace

VcongResult vcong_lp(const Graph& g, int p, Congestion convention, const VcongOptions& opt) {
  if (p != kInfNorm && p != 1 && p != 2) throw InputError("vcong_lp: p must be 1, 2 or infinity");
  require_connected(g, "vcong_lp");
  if (g.n() == 1) {
    VcongResult r;
    r.congestion.assign(1, 0.0);
    return r;
  }
  if (p == 1) return vcong_one(g, convention);
  if (p == 2) return vcong_two(g, convention, opt);
  return vcong_inf(g, convention, opt);
}

DualityReport check_duality(const Graph& g, int p, int q, double tol) {
  const bool inf1 = p == kInfNorm && q == 1;
  const bool two = p == 2 && q == 2;
  const bool one_inf = p == 1 && q == kInfNorm;
  if (!inf1 && !two && !one_inf) throw InputError("check_duality: (p,q) must be (inf,1), (2,2) or (1,inf)");
  require_connected(g, "check_duality");
  const double n = g.n();
  DualityReport rep;
  rep.p = p;
  rep.q = q;
  if (one_inf) {
    rep.spread.omega = ConformalWeight::constant(g.n(), 1.0);
    rep.spread.value = spread(all_pairs_metric(g, rep.spread.omega));
    rep.spread.lp_value = rep.spread.upper_bound = rep.spread.value;
    rep.spread.norm = 1.0;
  } else {
    rep.spread = cspread_lp(g, q);
  }
  rep.cspread = rep.spread.value;
  rep.scale = q == kInfNorm ? n * n : std::pow(n, 2.0 - 1.0 / q);
  rep.predicted = rep.scale * rep.cspread;
  rep.flow_incidence = vcong_lp(g, p, Congestion::EdgeIncidence);
  rep.flow_visit = vcong_lp(g, p, Congestion::VertexVisit);
  rep.vcong_incidence = rep.flow_incidence.value;
  rep.vcong_visit = rep.flow_visit.value;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); };
  rep.relative_error = rel(rep.vcong_incidence, rep.predicted);
  rep.holds = rep.relative_error <= tol;
  if (inf1) rep.visit_predicted = 0.5 * (n * rep.cspread + n - 1.0);
  if (one_inf) rep.visit_predicted = 0.5 * (n * n * rep.cspread + n * (n - 1.0));
  if (inf1 || one_inf) {
    rep.visit_relative_error = rel(rep.vcong_visit, rep.visit_predicted);
    rep.holds = rep.holds && rep.visit_relative_error <= tol;
  }
  return rep;
}

}  // namespace rigsep
