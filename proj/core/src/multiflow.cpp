#include "rigsep/flow/multiflow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigsep/conformal.hpp"
#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

void MultiFlow::add(const Path& path, double value) {
  if (path.empty()) throw InputError("multiflow: empty path");
  if (!(value >= 0.0)) throw InputError("multiflow: negative flow value");
  if (value == 0.0) return;
  flow_[path] += value;
}

double MultiFlow::pair_total(Vertex u, Vertex v) const {
  double t = 0.0;
  for (const auto& [p, x] : flow_) {
    const Vertex a = p.front(), b = p.back();
    if ((a == u && b == v) || (a == v && b == u)) t += x;
  }
  return t;
}

void check_walk(const Graph& g, const Path& path) {
  if (path.empty()) throw InputError("walk: empty path");
  for (Vertex v : path) g.check_vertex(v);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1]))
      throw InputError("walk: consecutive vertices " + std::to_string(path[i]) + " and " +
                       std::to_string(path[i + 1]) + " are not adjacent");
}

namespace {

void load(std::vector<double>& c, const Path& p, double x, Congestion convention) {
  if (convention == Congestion::EdgeIncidence) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      c[p[i]] += x;
      c[p[i + 1]] += x;
    }
    return;
  }
  // Each distinct vertex of the walk is counted once.
  Path vs = p;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (Vertex v : vs) c[v] += x;
}

}  // namespace

std::vector<double> congestion_map(const Graph& g, const MultiFlow& flow, Congestion convention) {
  std::vector<double> c(static_cast<std::size_t>(g.n()), 0.0);
  for (const auto& [p, x] : flow.paths()) {
    check_walk(g, p);
    load(c, p, x, convention);
  }
  return c;
}

bool HFlow::proper() const {
  std::vector<Vertex> h = host;
  std::sort(h.begin(), h.end());
  return std::adjacent_find(h.begin(), h.end()) == h.end();
}

MultiFlow HFlow::aggregate() const {
  MultiFlow f;
  for (const auto& list : routes)
    for (const auto& wp : list) f.add(wp.path, wp.value);
  return f;
}

bool HFlow::integral(double tol) const {
  for (const auto& list : routes)
    for (const auto& wp : list)
      if (std::abs(wp.value - std::round(wp.value)) > tol) return false;
  return true;
}

void validate_hflow(const Graph& g, const HFlow& hf, double tol) {
  if (static_cast<int>(hf.host.size()) != hf.demand.n()) throw InputError("hflow: host map has wrong length");
  for (Vertex v : hf.host) g.check_vertex(v);
  const auto es = hf.demand.edges();
  if (hf.routes.size() != es.size()) throw InputError("hflow: one route list per demand edge required");
  if (!hf.weights.empty() && hf.weights.size() != es.size()) throw InputError("hflow: weights have wrong length");
  for (std::size_t e = 0; e < es.size(); ++e) {
    const Vertex a = hf.host[es[e].first], b = hf.host[es[e].second];
    double total = 0.0;
    for (const auto& wp : hf.routes[e]) {
      check_walk(g, wp.path);
      if (!(wp.value >= 0.0)) throw InputError("hflow: negative route value");
      const Vertex s = wp.path.front(), t = wp.path.back();
      if (!((s == a && t == b) || (s == b && t == a)))
        throw InputError("hflow: route of demand edge " + std::to_string(e) + " has wrong endpoints");
      total += wp.value;
    }
    if (std::abs(total - hf.weight(e)) > tol * std::max(1.0, hf.weight(e)))
      throw InputError("hflow: routes of demand edge " + std::to_string(e) + " do not sum to its demand");
  }
}

namespace {

bool sorted_intersect(const Path& a, const Path& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

CrossingReport crossing_congestion(const Graph& g, const HFlow& hf) {
  validate_hflow(g, hf);
  const auto es = hf.demand.edges();
  std::vector<std::vector<Path>> vsets(es.size());
  for (std::size_t e = 0; e < es.size(); ++e) {
    for (const auto& wp : hf.routes[e]) {
      Path s = wp.path;
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      vsets[e].push_back(std::move(s));
    }
  }
  CrossingReport rep;
  for (std::size_t e = 0; e < es.size(); ++e) {
    for (std::size_t f = e + 1; f < es.size(); ++f) {
      const Vertex a = es[e].first, b = es[e].second, c = es[f].first, d = es[f].second;
      if (a == c || a == d || b == c || b == d) continue;
      for (std::size_t i = 0; i < hf.routes[e].size(); ++i)
        for (std::size_t j = 0; j < hf.routes[f].size(); ++j)
          if (sorted_intersect(vsets[e][i], vsets[f][j]))
            rep.cross += hf.routes[e][i].value * hf.routes[f][j].value;
    }
  }
  const auto c = congestion_map(g, hf.aggregate(), Congestion::VertexVisit);
  for (double x : c) rep.sum_congestion_squared += x * x;
  rep.l2_bound_holds = rep.cross <= rep.sum_congestion_squared * (1.0 + 1e-12) + 1e-12;
  return rep;
}

HFlow integral_rounding(const HFlow& hf, std::uint64_t seed) {
  HFlow out = hf;
  for (std::size_t e = 0; e < hf.routes.size(); ++e) {
    double total = 0.0;
    for (const auto& wp : hf.routes[e]) total += wp.value;
    if (!(total > 0.0)) throw InputError("integral_rounding: demand edge " + std::to_string(e) + " carries no flow");
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(e)));
    const double x = rng.uniform01() * total;
    double acc = 0.0;
    std::size_t pick = hf.routes[e].size() - 1;
    for (std::size_t i = 0; i < hf.routes[e].size(); ++i) {
      acc += hf.routes[e][i].value;
      if (x < acc && hf.routes[e][i].value > 0.0) {
        pick = i;
        break;
      }
    }
    while (hf.routes[e][pick].value <= 0.0) --pick;
    out.routes[e] = {WeightedPath{hf.routes[e][pick].path, hf.weight(e)}};
  }
  return out;
}

HFlow rig_flow_transfer(const Graph& rig, const RegionAssignment& assign, const HFlow& hf, TransferReport* report) {
  validate_regions(assign);
  if (static_cast<int>(assign.regions.size()) != rig.n())
    throw InputError("rig_flow_transfer: one region per rig vertex required");
  validate_hflow(rig, hf);
  const Graph& base = assign.base;
  const ConformalWeight unit = ConformalWeight::constant(base.n(), 1.0);

  std::map<std::pair<Vertex, Vertex>, ShortestPathTree> trees;
  auto piece = [&](Vertex region, Vertex from, Vertex to) {
    auto key = std::make_pair(region, from);
    auto it = trees.find(key);
    if (it == trees.end()) {
      const auto alive = membership_mask(base.n(), assign.regions[region]);
      it = trees.emplace(key, shortest_path_tree(base, unit, from, &alive)).first;
    }
    Path p = tree_path(it->second, to);
    if (p.empty()) throw InvariantViolation("rig_flow_transfer: region is not connected");
    return p;
  };
  auto contact = [&](Vertex u, Vertex v) {
    const VertexSet common = set_intersection(assign.regions[u], assign.regions[v]);
    if (common.empty())
      throw InputError("rig_flow_transfer: adjacent rig vertices " + std::to_string(u) + " and " +
                       std::to_string(v) + " have disjoint regions");
    return common.front();
  };
  auto lift = [&](const Path& gamma) {
    Path out;
    Vertex cur = assign.regions[gamma.front()].front();
    out.push_back(cur);
    for (std::size_t i = 0; i <= gamma.size() - 1; ++i) {
      const Vertex target =
          i + 1 < gamma.size() ? contact(gamma[i], gamma[i + 1]) : assign.regions[gamma.back()].front();
      const Path p = piece(gamma[i], cur, target);
      out.insert(out.end(), p.begin() + 1, p.end());
      cur = target;
    }
    return out;
  };

  HFlow out;
  out.demand = hf.demand;
  out.weights = hf.weights;
  out.host.resize(hf.host.size());
  for (std::size_t x = 0; x < hf.host.size(); ++x) out.host[x] = assign.regions[hf.host[x]].front();
  out.routes.resize(hf.routes.size());
  for (std::size_t e = 0; e < hf.routes.size(); ++e)
    for (const auto& wp : hf.routes[e]) out.routes[e].push_back({lift(wp.path), wp.value});

  TransferReport rep;
  rep.cross = crossing_congestion(base, out).cross;
  const auto c = congestion_map(rig, hf.aggregate(), Congestion::VertexVisit);
  double cmax = 0.0;
  for (double x : c) {
    rep.charge_bound += x * x;
    cmax = std::max(cmax, x);
  }
  for (auto [u, v] : rig.edges()) rep.charge_bound += (c[u] + c[v]) * (c[u] + c[v]);
  rep.sup_bound = (4.0 * static_cast<double>(rig.m()) + rig.n()) * cmax * cmax;
  const double tol = 1e-9 * std::max(1.0, rep.sup_bound);
  if (rep.cross > rep.charge_bound + tol || rep.charge_bound > rep.sup_bound + tol)
    throw InvariantViolation("rig_flow_transfer: crossing charge bound violated");
  if (report) *report = rep;
  return out;
}

}  // namespace rigsep
