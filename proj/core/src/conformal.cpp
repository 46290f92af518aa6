#include "rigsep/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "rigsep/errors.hpp"

namespace rigsep {

ConformalWeight::ConformalWeight(std::vector<double> omega) : omega_(std::move(omega)) {
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (!(omega_[i] >= 0.0) || !std::isfinite(omega_[i]))
      throw InputError("conformal weight: entry " + std::to_string(i) + " is negative or not finite");
  }
}

ConformalWeight ConformalWeight::constant(int n, double value) {
  return ConformalWeight(std::vector<double>(static_cast<std::size_t>(n), value));
}

ConformalWeight ConformalWeight::indicator(int n, const VertexSet& s) {
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InputError("conformal weight: indicator vertex out of range");
    w[v] = 1.0;
  }
  return ConformalWeight(std::move(w));
}

bool ConformalWeight::strictly_positive() const {
  return std::all_of(omega_.begin(), omega_.end(), [](double x) { return x > 0.0; });
}

double ConformalWeight::max() const {
  double m = 0.0;
  for (double x : omega_) m = std::max(m, x);
  return m;
}

double ConformalWeight::sum() const {
  double s = 0.0;
  for (double x : omega_) s += x;
  return s;
}

double ConformalWeight::l1_norm() const { return omega_.empty() ? 0.0 : sum() / static_cast<double>(omega_.size()); }

double ConformalWeight::lp_norm(double p) const {
  if (omega_.empty()) return 0.0;
  if (std::isinf(p)) return max();
  double s = 0.0;
  for (double x : omega_) s += std::pow(x, p);
  return std::pow(s / static_cast<double>(omega_.size()), 1.0 / p);
}

double ConformalWeight::l2_counting_norm() const {
  double s = 0.0;
  for (double x : omega_) s += x * x;
  return std::sqrt(s);
}

ConformalWeight ConformalWeight::scaled(double factor) const {
  std::vector<double> w = omega_;
  for (double& x : w) x *= factor;
  return ConformalWeight(std::move(w));
}

void ConformalWeight::check_matches(const Graph& g) const {
  if (size() != g.n())
    throw InputError("conformal weight has " + std::to_string(size()) + " entries but graph has " +
                     std::to_string(g.n()) + " vertices");
}

namespace {

struct HeapItem {
  double d;
  Vertex v;
  bool operator>(const HeapItem& o) const { return d > o.d || (d == o.d && v > o.v); }
};

using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

ShortestPathTree run_dijkstra(const Graph& g, const ConformalWeight& w, const VertexSet& sources,
                              const std::vector<char>* alive) {
  w.check_matches(g);
  const auto n = static_cast<std::size_t>(g.n());
  ShortestPathTree t;
  t.source = sources.size() == 1 ? sources[0] : -1;
  t.dist.assign(n, kInfinity);
  t.pred.assign(n, -1);
  std::vector<char> settled(n, 0);
  MinHeap heap;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (alive && !(*alive)[s]) continue;
    t.dist[s] = 0.0;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d > t.dist[u]) continue;
    settled[u] = 1;
    for (Vertex v : g.neighbors(u)) {
      if (settled[v] || (alive && !(*alive)[v])) continue;
      const double nd = d + edge_length(w, u, v);
      if (nd < t.dist[v]) {
        t.dist[v] = nd;
        t.pred[v] = u;
        heap.push({nd, v});
      } else if (nd == t.dist[v] && u < t.pred[v]) {
        t.pred[v] = u;
      }
    }
  }
  return t;
}

}  // namespace

ShortestPathTree shortest_path_tree(const Graph& g, const ConformalWeight& w, Vertex source,
                                    const std::vector<char>* alive) {
  return run_dijkstra(g, w, VertexSet{source}, alive);
}

std::vector<double> distances_from(const Graph& g, const ConformalWeight& w, Vertex source,
                                   const std::vector<char>* alive) {
  return run_dijkstra(g, w, VertexSet{source}, alive).dist;
}

std::vector<double> distances_to_set(const Graph& g, const ConformalWeight& w, const VertexSet& sources,
                                     const std::vector<char>* alive) {
  return run_dijkstra(g, w, sources, alive).dist;
}

std::vector<Vertex> tree_path(const ShortestPathTree& t, Vertex target) {
  if (t.dist[target] == kInfinity) return {};
  std::vector<Vertex> path;
  for (Vertex v = target; v != -1; v = t.pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

MetricView::MetricView(int graph_size, VertexSet domain, VertexSet sources, std::vector<std::vector<double>> rows)
    : graph_size_(graph_size),
      domain_(std::move(domain)),
      sources_(std::move(sources)),
      source_index_(static_cast<std::size_t>(graph_size), -1),
      rows_(std::move(rows)) {
  for (std::size_t i = 0; i < sources_.size(); ++i) source_index_[sources_[i]] = static_cast<int>(i);
}

std::span<const double> MetricView::row(Vertex source) const {
  if (source < 0 || source >= graph_size_ || source_index_[source] < 0)
    throw InputError("metric view has no row for vertex " + std::to_string(source));
  return rows_[source_index_[source]];
}

MetricView dist_omega_within(const Graph& g, const ConformalWeight& w, const VertexSet& domain,
                             const VertexSet& sources) {
  g.check_set(domain);
  g.check_set(sources);
  VertexSet dom = make_set(domain);
  VertexSet src = make_set(sources);
  for (Vertex s : src)
    if (!set_contains(dom, s)) throw InputError("dist_omega: source outside the domain");
  const auto alive = membership_mask(g.n(), dom);
  std::vector<std::vector<double>> rows;
  rows.reserve(src.size());
  for (Vertex s : src) rows.push_back(distances_from(g, w, s, &alive));
  return MetricView(g.n(), std::move(dom), std::move(src), std::move(rows));
}

MetricView dist_omega(const Graph& g, const ConformalWeight& w, const VertexSet& sources) {
  return dist_omega_within(g, w, all_vertices(g.n()), sources);
}

MetricView all_pairs_metric(const Graph& g, const ConformalWeight& w) {
  return dist_omega(g, w, all_vertices(g.n()));
}

double diameter(const MetricView& d) {
  double best = 0.0;
  for (Vertex s : d.sources()) {
    auto row = d.row(s);
    for (Vertex v : d.domain()) best = std::max(best, row[v]);
  }
  return best;
}

double spread(const MetricView& d) {
  if (!d.all_pairs()) throw InputError("spread: metric view must contain all pairs");
  if (d.domain().empty()) return 0.0;
  double total = 0.0;
  for (Vertex s : d.sources()) {
    auto row = d.row(s);
    for (Vertex v : d.domain()) {
      if (row[v] == kInfinity) throw InputError("spread: disconnected input has infinite spread");
      total += row[v];
    }
  }
  const double k = static_cast<double>(d.domain().size());
  return total / (k * k);
}

double average_abs_difference(const VertexSet& domain, const std::vector<double>& f) {
  if (domain.empty()) return 0.0;
  std::vector<double> vals;
  vals.reserve(domain.size());
  for (Vertex v : domain) vals.push_back(f[v]);
  std::sort(vals.begin(), vals.end());
  const double k = static_cast<double>(vals.size());
  double total = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) total += vals[i] * (2.0 * static_cast<double>(i) - k + 1.0);
  return 2.0 * total / (k * k);
}

double observed_spread(const MetricView& d, const std::vector<double>& f) {
  if (!d.all_pairs()) throw InputError("observed_spread: metric view must contain all pairs");
  if (static_cast<int>(f.size()) != d.graph_size()) throw InputError("observed_spread: map has wrong length");
  for (Vertex x : d.domain()) {
    auto row = d.row(x);
    for (Vertex y : d.domain()) {
      const double gap = std::abs(f[x] - f[y]);
      if (gap > row[y] + 1e-9 * std::max(1.0, row[y]))
        throw InputError("observed_spread: map is not 1-Lipschitz at pair (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
    }
  }
  return average_abs_difference(d.domain(), f);
}

bool is_one_lipschitz(const Graph& g, const ConformalWeight& w, const std::vector<double>& f, double tol) {
  for (auto [u, v] : g.edges()) {
    const double len = edge_length(w, u, v);
    if (std::abs(f[u] - f[v]) > len + tol * std::max(1.0, len)) return false;
  }
  return true;
}

BallsAndSphere balls_and_sphere(const Graph& g, const ConformalWeight& w, Vertex c, double radius,
                                const VertexSet* within) {
  g.check_vertex(c);
  std::vector<char> alive;
  if (within) {
    g.check_set(*within);
    if (!set_contains(*within, c)) throw InputError("balls_and_sphere: center outside the subgraph");
    alive = membership_mask(g.n(), *within);
  }
  const auto dist = distances_from(g, w, c, within ? &alive : nullptr);
  BallsAndSphere out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] == kInfinity) continue;
    const bool skinny = in_skinny_ball(dist[v], radius, w[v]);
    const bool fat = in_fat_ball(dist[v], radius, w[v]);
    if (skinny) out.skinny.push_back(v);
    if (fat) out.fat.push_back(v);
    if (fat && !skinny) out.sphere.push_back(v);
  }
  return out;
}

VertexSet skinny_ball(const Graph& g, const ConformalWeight& w, Vertex c, double radius, const VertexSet* within) {
  return balls_and_sphere(g, w, c, radius, within).skinny;
}

AmbientMetric::AmbientMetric(const Graph& g, const ConformalWeight& w, const VertexSet* within)
    : g_(&g), w_(&w), rows_(static_cast<std::size_t>(g.n())) {
  w.check_matches(g);
  alive_ = within ? membership_mask(g.n(), *within) : std::vector<char>(static_cast<std::size_t>(g.n()), 1);
}

const std::vector<double>& AmbientMetric::row(Vertex source) const {
  g_->check_vertex(source);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = rows_[source];
  if (!slot) slot = std::make_unique<std::vector<double>>(distances_from(*g_, *w_, source, &alive_));
  return *slot;
}

double AmbientMetric::to_set(Vertex v, std::span<const Vertex> centers) const {
  double best = kInfinity;
  for (Vertex c : centers) best = std::min(best, row(c)[v]);
  return best;
}

double diameter_of(const AmbientMetric& metric, const VertexSet& u) {
  double best = 0.0;
  for (Vertex a : u) {
    const auto& r = metric.row(a);
    for (Vertex b : u) best = std::max(best, r[b]);
  }
  return best;
}

}  // namespace rigsep
