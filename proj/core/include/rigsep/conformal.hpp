#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "rigsep/graph.hpp"

namespace rigsep {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Nonnegative vertex weight; edge {u,v} gets length (w(u)+w(v))/2.
class ConformalWeight {
 public:
  ConformalWeight() = default;
  explicit ConformalWeight(std::vector<double> omega);

  static ConformalWeight constant(int n, double value = 1.0);
  static ConformalWeight indicator(int n, const VertexSet& s);

  int size() const { return static_cast<int>(omega_.size()); }
  double operator[](Vertex v) const { return omega_[v]; }
  const std::vector<double>& values() const { return omega_; }

  bool strictly_positive() const;
  double max() const;
  double sum() const;
  // Normalized norms: ((1/n) sum w^p)^(1/p).
  double l1_norm() const;
  double lp_norm(double p) const;
  // Counting norm (sum w^2)^(1/2).
  double l2_counting_norm() const;

  ConformalWeight scaled(double factor) const;

  // Throws InputError unless size() == g.n().
  void check_matches(const Graph& g) const;

 private:
  std::vector<double> omega_;
};

inline double edge_length(const ConformalWeight& w, Vertex u, Vertex v) { return 0.5 * (w[u] + w[v]); }

struct ShortestPathTree {
  Vertex source = -1;
  std::vector<double> dist;  // kInfinity when unreachable
  std::vector<Vertex> pred;  // -1 for the source and unreachable vertices
};

// Dijkstra from source.  Among equal-length predecessors the smallest id
// wins.  alive, when given, restricts the search to G[{v : alive[v]}].
ShortestPathTree shortest_path_tree(const Graph& g, const ConformalWeight& w, Vertex source,
                                    const std::vector<char>* alive = nullptr);
std::vector<double> distances_from(const Graph& g, const ConformalWeight& w, Vertex source,
                                   const std::vector<char>* alive = nullptr);
// Distance to the nearest vertex of sources.
std::vector<double> distances_to_set(const Graph& g, const ConformalWeight& w, const VertexSet& sources,
                                     const std::vector<char>* alive = nullptr);
// Vertex sequence source..target; empty when unreachable.
std::vector<Vertex> tree_path(const ShortestPathTree& t, Vertex target);

// Distances from a list of sources to every vertex of a domain, measured in
// G[domain].  Rows are indexed by original vertex id.
class MetricView {
 public:
  MetricView() = default;
  MetricView(int graph_size, VertexSet domain, VertexSet sources, std::vector<std::vector<double>> rows);

  int graph_size() const { return graph_size_; }
  const VertexSet& domain() const { return domain_; }
  const VertexSet& sources() const { return sources_; }
  bool all_pairs() const { return sources_ == domain_; }

  std::span<const double> row(Vertex source) const;
  double operator()(Vertex source, Vertex v) const { return row(source)[v]; }

 private:
  int graph_size_ = 0;
  VertexSet domain_;
  VertexSet sources_;
  std::vector<int> source_index_;
  std::vector<std::vector<double>> rows_;
};

// dist_w in G (domain = V_G).
MetricView dist_omega(const Graph& g, const ConformalWeight& w, const VertexSet& sources);
// dist_w in the induced subgraph G[domain].
MetricView dist_omega_within(const Graph& g, const ConformalWeight& w, const VertexSet& domain,
                             const VertexSet& sources);
MetricView all_pairs_metric(const Graph& g, const ConformalWeight& w);

// Max distance between sources and domain vertices (kInfinity if any pair is unreachable).
double diameter(const MetricView& d);
// Average over ordered pairs including the diagonal; requires all pairs.
double spread(const MetricView& d);
// (1/|X|^2) sum |f(x)-f(y)| over the domain; f is indexed by original id and
// must be 1-Lipschitz for the view (tolerance 1e-9), else InputError.
double observed_spread(const MetricView& d, const std::vector<double>& f);
// Same sum without any Lipschitz check, O(|X| log |X|).
double average_abs_difference(const VertexSet& domain, const std::vector<double>& f);
// Checks |f(u)-f(v)| <= (w(u)+w(v))/2 on every edge of G, which is
// equivalent to being 1-Lipschitz for dist_w.
bool is_one_lipschitz(const Graph& g, const ConformalWeight& w, const std::vector<double>& f,
                      double tol = 1e-9);

// Membership predicates of the skinny ball, fat ball and fat sphere for a
// vertex at distance d with weight wv.
inline bool in_skinny_ball(double d, double radius, double wv) { return d < radius - 0.5 * wv; }
inline bool in_fat_ball(double d, double radius, double wv) { return d <= radius + 0.5 * wv; }
inline bool in_fat_sphere(double d, double radius, double wv) {
  return !in_skinny_ball(d, radius, wv) && in_fat_ball(d, radius, wv);
}

struct BallsAndSphere {
  VertexSet skinny;
  VertexSet fat;
  VertexSet sphere;
};

// Balls around c of radius R measured in G[within] (whole graph when null).
BallsAndSphere balls_and_sphere(const Graph& g, const ConformalWeight& w, Vertex c, double radius,
                                const VertexSet* within = nullptr);
VertexSet skinny_ball(const Graph& g, const ConformalWeight& w, Vertex c, double radius,
                      const VertexSet* within = nullptr);

// Shortest-path rows of G[within] computed on first use and cached.  Safe
// to share between threads.  Keeps references to g and w.
class AmbientMetric {
 public:
  AmbientMetric(const Graph& g, const ConformalWeight& w, const VertexSet* within = nullptr);

  const std::vector<double>& row(Vertex source) const;
  double operator()(Vertex u, Vertex v) const { return row(u)[v]; }
  // min over centers of the distance from v.
  double to_set(Vertex v, std::span<const Vertex> centers) const;

  const Graph& graph() const { return *g_; }
  const ConformalWeight& weight() const { return *w_; }
  const std::vector<char>& alive() const { return alive_; }

 private:
  const Graph* g_;
  const ConformalWeight* w_;
  std::vector<char> alive_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<double>>> rows_;
};

// diam_w^G(U) with distances taken from the ambient metric.
double diameter_of(const AmbientMetric& metric, const VertexSet& u);

}  // namespace rigsep
