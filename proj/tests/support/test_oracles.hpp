#pragma once

// Independent reference implementations used only by the tests.  None of
// them call into the library code they are checking.

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rigsep/graph.hpp"
#include "rigsep/polyline.hpp"

namespace testsupport {

using rigsep::Graph;
using rigsep::Vertex;
using rigsep::VertexSet;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// All-pairs conformal distances by Floyd-Warshall on an explicit matrix.
inline std::vector<std::vector<double>> floyd_warshall(const Graph& g, const std::vector<double>& w) {
  const int n = g.n();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0.0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 0.5 * (w[u] + w[v]);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Same, restricted to the induced subgraph on `within`.
inline std::vector<std::vector<double>> floyd_warshall_within(const Graph& g, const std::vector<double>& w,
                                                              const VertexSet& within) {
  const int n = g.n();
  std::vector<char> in(n, 0);
  for (Vertex v : within) in[v] = 1;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (int v = 0; v < n; ++v)
    if (in[v]) d[v][v] = 0.0;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) d[u][v] = d[v][u] = 0.5 * (w[u] + w[v]);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Cyclic Jacobi rotations in long double on a dense symmetric matrix.
inline std::vector<long double> jacobi_eigenvalues(std::vector<std::vector<long double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-36L) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300L) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const long double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const long double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const long double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<long double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<std::vector<long double>> laplacian_matrix(const Graph& g) {
  std::vector<std::vector<long double>> l(g.n(), std::vector<long double>(g.n(), 0));
  for (const auto& [u, v] : g.edges()) {
    l[u][u] += 1;
    l[v][v] += 1;
    l[u][v] -= 1;
    l[v][u] -= 1;
  }
  return l;
}

// Exact orientation-based segment intersection on boost rationals.
using BRational = boost::multiprecision::cpp_rational;

inline BRational to_boost(const rigsep::Rational& q) {
  return BRational(boost::multiprecision::cpp_int(q.get_num().get_str()),
                   boost::multiprecision::cpp_int(q.get_den().get_str()));
}

struct BPoint {
  BRational x, y;
};

inline BPoint to_boost(const rigsep::Point& p) { return {to_boost(p.x), to_boost(p.y)}; }

inline int orientation(const BPoint& a, const BPoint& b, const BPoint& c) {
  const BRational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline bool within_box(const BPoint& a, const BPoint& b, const BPoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

inline bool segments_touch(const BPoint& p1, const BPoint& p2, const BPoint& q1, const BPoint& q2) {
  const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(p1, p2, q1)) return true;
  if (o2 == 0 && within_box(p1, p2, q2)) return true;
  if (o3 == 0 && within_box(q1, q2, p1)) return true;
  if (o4 == 0 && within_box(q1, q2, p2)) return true;
  return false;
}

inline bool polylines_touch(const rigsep::Polyline& a, const rigsep::Polyline& b) {
  std::vector<BPoint> pa, pb;
  for (const auto& p : a) pa.push_back(to_boost(p));
  for (const auto& p : b) pb.push_back(to_boost(p));
  if (pa.size() == 1) pa.push_back(pa[0]);
  if (pb.size() == 1) pb.push_back(pb[0]);
  for (std::size_t i = 0; i + 1 < pa.size(); ++i)
    for (std::size_t j = 0; j + 1 < pb.size(); ++j)
      if (segments_touch(pa[i], pa[i + 1], pb[j], pb[j + 1])) return true;
  return false;
}

// Plain set helpers on bitmasks for n <= 20.
inline std::uint32_t neighborhood_mask(const Graph& g, std::uint32_t u) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.n(); ++v)
    if (u >> v & 1)
      for (Vertex x : g.neighbors(v)) out |= 1u << x;
  return out & ~u;
}

// |boundary(U)| / |U| minimized naively; returns phi as a double.
inline double naive_vertex_expansion(const Graph& g) {
  const int n = g.n();
  double best = kInf;
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    std::uint32_t bd = 0;
    for (int v = 0; v < n; ++v) {
      if (!(u >> v & 1)) continue;
      for (Vertex x : g.neighbors(v))
        if (!(u >> x & 1)) bd |= 1u << v;
    }
    const int interior = std::popcount(u & ~bd);
    if (2 * interior > n) continue;
    best = std::min(best, static_cast<double>(std::popcount(bd)) / std::popcount(u));
  }
  return best;
}

// Sample standard deviation of a Bernoulli frequency estimate.
inline double bernoulli_sigma(double p_hat, std::size_t trials) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

}  // namespace testsupport
