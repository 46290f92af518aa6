#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "rigsep/conformal.hpp"
#include "rigsep/errors.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/random.hpp"
#include "test_oracles.hpp"

using namespace rigsep;

namespace {

ConformalWeight random_weight(int n, std::uint64_t seed, double lo = 0.0, double hi = 2.0) {
  Rng rng(seed);
  std::vector<double> w(n);
  for (auto& x : w) x = rng.uniform(lo, hi);
  return ConformalWeight(w);
}

}  // namespace

TEST(Conformal, PathDistances) {
  const Graph p3 = path_graph(3);
  EXPECT_DOUBLE_EQ(dist_omega(p3, ConformalWeight::constant(3), {0})(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(dist_omega(p3, ConformalWeight({0, 2, 0}), {0})(0, 2), 2.0);
  const auto k3 = all_pairs_metric(complete_graph(3), ConformalWeight::constant(3));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(k3(u, v), u == v ? 0.0 : 1.0);
}

TEST(Conformal, RejectsNegativeWeights) {
  EXPECT_THROW(ConformalWeight({1.0, -0.5}), InputError);
  EXPECT_THROW(dist_omega(path_graph(3), ConformalWeight::constant(2), {0}), InputError);
}

TEST(Conformal, UnreachableIsInfinite) {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const auto d = dist_omega(g, ConformalWeight::constant(3), {0});
  EXPECT_EQ(d(0, 2), kInfinity);
  EXPECT_THROW(spread(all_pairs_metric(g, ConformalWeight::constant(3))), InputError);
}

TEST(Conformal, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = connected_gnp(11, 0.3, seed);
    const ConformalWeight w = random_weight(11, seed + 100);
    const auto fw = testsupport::floyd_warshall(g, w.values());
    const auto d = all_pairs_metric(g, w);
    for (Vertex u = 0; u < 11; ++u)
      for (Vertex v = 0; v < 11; ++v) EXPECT_NEAR(d(u, v), fw[u][v], 1e-12);
  }
}

TEST(Conformal, InducedDistancesDominateAmbient) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = connected_gnp(10, 0.35, seed);
    const ConformalWeight w = random_weight(10, seed);
    Rng rng(seed + 7);
    VertexSet h;
    for (Vertex v = 0; v < 10; ++v)
      if (rng.uniform01() < 0.7) h.push_back(v);
    if (h.empty()) continue;
    const auto amb = all_pairs_metric(g, w);
    const auto sub = dist_omega_within(g, w, h, h);
    const auto fw = testsupport::floyd_warshall_within(g, w.values(), h);
    for (Vertex u : h)
      for (Vertex v : h) {
        EXPECT_GE(sub(u, v), amb(u, v) - 1e-12);
        if (std::isinf(fw[u][v])) {
          EXPECT_TRUE(std::isinf(sub(u, v)));
        } else {
          EXPECT_NEAR(sub(u, v), fw[u][v], 1e-12);
        }
      }
  }
}

TEST(Conformal, MetricAxioms) {
  const Graph g = connected_gnp(9, 0.4, 5);
  const auto d = all_pairs_metric(g, random_weight(9, 5));
  for (Vertex u = 0; u < 9; ++u) {
    EXPECT_EQ(d(u, u), 0.0);
    for (Vertex v = 0; v < 9; ++v) {
      EXPECT_DOUBLE_EQ(d(u, v), d(v, u));
      for (Vertex x = 0; x < 9; ++x) EXPECT_LE(d(u, v), d(u, x) + d(x, v) + 1e-12);
    }
  }
}

TEST(Conformal, SmallestPredecessorWinsTies) {
  // 0 reaches 3 through 1 or 2 at equal length.
  const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto t = shortest_path_tree(g, ConformalWeight::constant(4), 0);
  EXPECT_EQ(t.pred[3], 1);
  EXPECT_EQ(tree_path(t, 3), (std::vector<Vertex>{0, 1, 3}));
}

TEST(Conformal, BallsOnPath) {
  const Graph p5 = path_graph(5);
  const auto w = ConformalWeight::constant(5);
  auto b = balls_and_sphere(p5, w, 0, 1.0);
  EXPECT_EQ(b.sphere, (VertexSet{1}));
  EXPECT_EQ(b.skinny, (VertexSet{0}));
  b = balls_and_sphere(p5, w, 0, 1.5);
  EXPECT_EQ(b.sphere, (VertexSet{1, 2}));
  EXPECT_THROW(balls_and_sphere(p5, w, 9, 1.0), InputError);
}

TEST(Conformal, ZeroRadiusBall) {
  const Graph g = connected_gnp(8, 0.4, 1);
  const auto w = random_weight(8, 1, 0.1, 1.0);
  for (Vertex c = 0; c < 8; ++c) {
    const auto b = balls_and_sphere(g, w, c, 0.0);
    EXPECT_TRUE(b.skinny.empty());
    EXPECT_TRUE(set_contains(b.sphere, c));
  }
}

TEST(Conformal, BallDefinitionsMatchDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = connected_gnp(10, 0.3, seed);
    const auto w = random_weight(10, seed, 0.0, 1.5);
    const auto fw = testsupport::floyd_warshall(g, w.values());
    for (double r : {0.0, 0.3, 0.75, 1.2, 2.0, 3.5}) {
      const auto b = balls_and_sphere(g, w, 0, r);
      VertexSet skinny, fat;
      for (Vertex v = 0; v < 10; ++v) {
        if (fw[0][v] < r - w[v] / 2) skinny.push_back(v);
        if (fw[0][v] <= r + w[v] / 2) fat.push_back(v);
      }
      EXPECT_EQ(b.skinny, skinny);
      EXPECT_EQ(b.fat, fat);
      EXPECT_EQ(b.sphere, set_difference(fat, skinny));
    }
  }
}

TEST(Conformal, SkinnyBallIsComponentOfCenterOutsideSphere) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = connected_gnp(12, 0.25, seed);
    const auto w = random_weight(12, seed, 0.05, 1.0);
    for (double r : {0.4, 1.0, 1.7, 2.5}) {
      const auto b = balls_and_sphere(g, w, 3, r);
      if (!set_contains(b.skinny, 3)) continue;
      const auto comps = connected_components(g, set_difference(all_vertices(12), b.sphere));
      for (const auto& c : comps)
        if (set_contains(c, 3)) { EXPECT_EQ(c, b.skinny); }
    }
  }
}

TEST(Conformal, BallsNest) {
  const Graph g = connected_gnp(12, 0.3, 9);
  const auto w = random_weight(12, 9);
  for (double r = 0.0; r < 4.0; r += 0.25) {
    const auto a = balls_and_sphere(g, w, 0, r), b = balls_and_sphere(g, w, 0, r + 0.25);
    EXPECT_TRUE(std::includes(b.skinny.begin(), b.skinny.end(), a.skinny.begin(), a.skinny.end()));
    EXPECT_TRUE(std::includes(b.fat.begin(), b.fat.end(), a.fat.begin(), a.fat.end()));
  }
}

// A shortest path from c meets each fat sphere at most once for radii
// strictly between critical values.
TEST(Conformal, ShortestPathsCrossFatSphereOnce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 10;
    const Graph g = connected_gnp(n, 0.3, seed);
    const auto w = random_weight(n, seed, 0.1, 2.0);
    const auto t = shortest_path_tree(g, w, 0);
    std::set<double> critical;
    for (Vertex v = 0; v < n; ++v) {
      critical.insert(t.dist[v] - w[v] / 2);
      critical.insert(t.dist[v] + w[v] / 2);
    }
    // Critical values that agree up to rounding are one critical radius.
    std::vector<double> radii;
    double prev = *critical.begin();
    for (double c : critical) {
      if (c - prev > 1e-9 && c > 0) radii.push_back(std::max(0.0, prev) / 2 + c / 2);
      prev = c;
    }
    for (double r : radii) {
      if (r <= 0) continue;
      const auto sphere = balls_and_sphere(g, w, 0, r).sphere;
      for (Vertex v = 0; v < n; ++v) {
        int hits = 0;
        for (Vertex x : tree_path(t, v)) hits += set_contains(sphere, x);
        EXPECT_LE(hits, 1) << "seed " << seed << " r " << r;
      }
    }
  }
}

// At a critical radius two path vertices can share the sphere.
TEST(Conformal, FatSphereAtCriticalRadiusMayHoldTwoPathVertices) {
  const auto b = balls_and_sphere(path_graph(3), ConformalWeight::constant(3), 0, 1.5);
  EXPECT_EQ(b.sphere, (VertexSet{1, 2}));
}

TEST(Conformal, SpreadExamples) {
  EXPECT_NEAR(spread(all_pairs_metric(path_graph(3), ConformalWeight::constant(3))), 8.0 / 9.0, 1e-15);
  for (int n = 2; n <= 7; ++n)
    EXPECT_NEAR(spread(all_pairs_metric(complete_graph(n), ConformalWeight::constant(n))), (n - 1.0) / n, 1e-15);
  EXPECT_EQ(spread(all_pairs_metric(Graph(1), ConformalWeight::constant(1))), 0.0);
}

TEST(Conformal, ObservedSpreadExamples) {
  const auto d = all_pairs_metric(path_graph(3), ConformalWeight::constant(3));
  EXPECT_NEAR(observed_spread(d, {0, 1, 2}), 8.0 / 9.0, 1e-15);
  EXPECT_EQ(observed_spread(d, {5, 5, 5}), 0.0);
  EXPECT_THROW(observed_spread(d, {0, 2, 4}), InputError);
}

TEST(Conformal, AverageAbsDifferenceMatchesQuadraticSum) {
  Rng rng(4);
  std::vector<double> f(40);
  for (auto& x : f) x = rng.uniform(-3, 3);
  double direct = 0.0;
  for (double a : f)
    for (double b : f) direct += std::abs(a - b);
  EXPECT_NEAR(average_abs_difference(all_vertices(40), f), direct / 1600.0, 1e-12);
}

TEST(Conformal, LipschitzCheckIsEdgeLocal) {
  const Graph g = path_graph(4);
  const ConformalWeight w({1, 1, 0, 1});
  EXPECT_TRUE(is_one_lipschitz(g, w, {0, 1, 1.5, 2}));
  EXPECT_FALSE(is_one_lipschitz(g, w, {0, 1, 1.6, 2}));
}

// If max weight <= delta and the distance exceeds delta the pair is not an edge.
TEST(Conformal, FarPairsAreNotAdjacent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = connected_gnp(10, 0.3, seed);
    const auto w = random_weight(10, seed);
    const double delta = w.max();
    const auto d = all_pairs_metric(g, w);
    for (Vertex u = 0; u < 10; ++u)
      for (Vertex v = 0; v < 10; ++v)
        if (d(u, v) > delta) { EXPECT_FALSE(g.has_edge(u, v)); }
  }
}

TEST(Conformal, Norms) {
  const ConformalWeight w({1, 3, 0, 4});
  EXPECT_DOUBLE_EQ(w.l1_norm(), 2.0);
  EXPECT_DOUBLE_EQ(w.l2_counting_norm(), std::sqrt(26.0));
  EXPECT_DOUBLE_EQ(w.lp_norm(2), std::sqrt(26.0 / 4));
  EXPECT_FALSE(w.strictly_positive());
  EXPECT_TRUE(ConformalWeight::constant(3).strictly_positive());
}

TEST(Conformal, AmbientMetricRowsAreCachedDistances) {
  const Graph g = connected_gnp(15, 0.2, 2);
  const auto w = random_weight(15, 2);
  AmbientMetric amb(g, w);
  const auto fw = testsupport::floyd_warshall(g, w.values());
  for (Vertex u = 0; u < 15; ++u)
    for (Vertex v = 0; v < 15; ++v) EXPECT_NEAR(amb(u, v), fw[u][v], 1e-12);
  const std::vector<Vertex> centers{2, 9};
  EXPECT_NEAR(amb.to_set(4, centers), std::min(fw[4][2], fw[4][9]), 1e-12);
}
