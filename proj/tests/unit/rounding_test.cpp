#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rigsep/errors.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/oracles.hpp"
#include "rigsep/partition/rounding.hpp"
#include "rigsep/random.hpp"
#include "test_oracles.hpp"

using namespace rigsep;

namespace {

ConformalWeight random_weight(int n, std::uint64_t seed, double lo, double hi) {
  Rng rng(seed);
  std::vector<double> w(n);
  for (auto& x : w) x = rng.uniform(lo, hi);
  return ConformalWeight(w);
}

// Best |dU|/|U| over all sweep levels, scanning every critical value and
// every gap between consecutive critical values.
double brute_sweep_ratio(const Graph& g, const ConformalWeight& w, const std::vector<double>& f) {
  std::vector<double> crit;
  for (Vertex v = 0; v < g.n(); ++v) {
    crit.push_back(f[v] - w[v] / 2);
    crit.push_back(f[v]);
    crit.push_back(f[v] + w[v] / 2);
  }
  std::sort(crit.begin(), crit.end());
  std::vector<double> thetas = crit;
  const double slack = 1e-12;
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) thetas.push_back((crit[i] + crit[i + 1]) / 2);
  double best = testsupport::kInf;
  const int n = g.n();
  for (double t : thetas) {
    VertexSet a, b, s;
    for (Vertex v = 0; v < n; ++v) {
      if (f[v] <= t) a.push_back(v);
      else b.push_back(v);
      if (std::abs(f[v] - t) <= w[v] / 2 + slack * std::max(1.0, std::abs(t))) s.push_back(v);
    }
    for (const VertexSet& u : {set_union(a, s), set_union(b, s)}) {
      if (u.empty() || static_cast<int>(u.size()) == n) continue;
      if (2 * interior(g, u).size() > static_cast<std::size_t>(n)) continue;
      best = std::min(best, static_cast<double>(boundary(g, u).size()) / static_cast<double>(u.size()));
    }
  }
  return best;
}

}  // namespace

TEST(RoundingBall, Examples) {
  const Graph p3 = path_graph(3);
  const auto w3 = ConformalWeight::constant(3);
  EXPECT_EQ(rounding_map_ball(p3, w3, 0, 0.0), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(rounding_map_ball(p3, w3, 0, 5.0), (std::vector<double>{0, 0, 0}));
  const Graph star = star_graph(4);
  EXPECT_EQ(rounding_map_ball(star, ConformalWeight::constant(5), 0, 0.0), (std::vector<double>{0, 1, 1, 1, 1}));
}

TEST(RoundingBall, EmptyBallIsAnError) {
  EXPECT_THROW(rounding_map_ball(path_graph(3), ConformalWeight::constant(3), 0, -1.0), InputError);
}

TEST(RoundingBall, MatchesFloydWarshallAndIsLipschitz) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = connected_gnp(15, 0.2, seed);
    const auto w = random_weight(15, seed, 0.0, 1.0);
    const auto d = testsupport::floyd_warshall(g, w.values());
    const double r = 0.3 + 0.1 * static_cast<double>(seed % 5);
    const auto f = rounding_map_ball(g, w, 3, r);
    EXPECT_TRUE(is_one_lipschitz(g, w, f));
    for (Vertex x = 0; x < 15; ++x) {
      double expect = testsupport::kInf;
      for (Vertex y = 0; y < 15; ++y)
        if (d[3][y] <= r) expect = std::min(expect, d[x][y]);
      EXPECT_NEAR(f[x], expect, 1e-9);
    }
  }
}

// A ball of radius spread/4 holding half the points forces observed spread
// at least spread/4.
TEST(RoundingBall, HeavyBallGivesQuarterSpread) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = connected_gnp(12, 0.25, seed);
    const auto w = random_weight(12, seed + 100, 0.05, 1.0);
    const auto d = testsupport::floyd_warshall(g, w.values());
    double sp = 0.0;
    for (const auto& row : d)
      for (double x : row) sp += x;
    sp /= 144.0;
    for (Vertex x0 = 0; x0 < 12; ++x0) {
      int in_ball = 0;
      for (Vertex y = 0; y < 12; ++y) in_ball += d[x0][y] <= sp / 4;
      if (2 * in_ball < 12) continue;
      const auto f = rounding_map_ball(g, w, x0, sp / 4);
      EXPECT_GE(average_abs_difference(all_vertices(12), f), sp / 4 - 1e-12);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(RoundingColoring, PathWithThreeBlocks) {
  const Graph p5 = path_graph(5);
  PaddedPartitionSample part;
  part.blocks = {{0, 1}, {2}, {3, 4}};
  const auto w = ConformalWeight::constant(5);
  EXPECT_EQ(rounding_map_coloring(p5, w, part, std::vector<int>{1, 0, 1}), (std::vector<double>{0, 0, 1, 0, 0}));
  EXPECT_EQ(rounding_map_coloring(p5, w, part, std::vector<int>{1, 1, 1}), (std::vector<double>(5, 0.0)));
  EXPECT_EQ(rounding_map_coloring(p5, w, part, std::vector<int>{1, 0, 0}), (std::vector<double>{0, 0, 1, 2, 3}));
  EXPECT_THROW(rounding_map_coloring(p5, w, part, std::vector<int>{0, 0, 0}), InputError);
  EXPECT_THROW(rounding_map_coloring(p5, w, part, std::vector<int>{1, 0}), InputError);
}

TEST(RoundingColoring, SingleBlockIsRedrawnToOne) {
  const Graph c6 = cycle_graph(6);
  PaddedPartitionSample part;
  part.blocks = {all_vertices(6)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(rounding_map_coloring(c6, ConformalWeight::constant(6), part, seed), std::vector<double>(6, 0.0));
  }
}

TEST(RoundingColoring, SeededMapsAreLipschitzAndVanishOnColoredBlocks) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = connected_gnp(20, 0.15, seed);
    const auto w = random_weight(20, seed, 0.1, 1.0);
    const auto s = random_separator(g, w, 0.5, 2, seed);
    const auto part = padded_partition(g, s);
    const auto f = rounding_map_coloring(g, w, part, seed);
    EXPECT_TRUE(is_one_lipschitz(g, w, f));
    EXPECT_EQ(f, rounding_map_coloring(g, w, part, seed));
    // f vanishes on whole blocks or on none of their vertices
    for (const auto& block : part.blocks) {
      const bool zero = f[block.front()] == 0.0;
      if (!zero) continue;
      for (Vertex v : block)
        if (w[v] > 0) { EXPECT_EQ(f[v], 0.0); }
    }
    EXPECT_EQ(*std::min_element(f.begin(), f.end()), 0.0);
  }
}

TEST(Sweep, PathWithWeightlessEnds) {
  const Graph p3 = path_graph(3);
  const ConformalWeight w(std::vector<double>{0, 1, 0});
  const auto r = sweep_cut(p3, w, {0, 0.5, 1});
  EXPECT_EQ(r.U, (VertexSet{0, 1}));
  EXPECT_EQ(r.boundary, (VertexSet{1}));
  EXPECT_DOUBLE_EQ(r.ratio, 0.5);
  EXPECT_TRUE(r.from_sweep);
}

TEST(Sweep, PathDistanceFromEnd) {
  const Graph p5 = path_graph(5);
  const auto r = sweep_cut(p5, ConformalWeight::constant(5), {0, 1, 2, 3, 4});
  EXPECT_EQ(r.U, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.boundary, (VertexSet{2}));
  EXPECT_DOUBLE_EQ(r.ratio, 1.0 / 3.0);
}

TEST(Sweep, ConstantMapFallsBackToSingleton) {
  const auto r = sweep_cut(path_graph(4), ConformalWeight::constant(4), {0, 0, 0, 0});
  EXPECT_FALSE(r.from_sweep);
  EXPECT_EQ(r.U, (VertexSet{0}));
  EXPECT_DOUBLE_EQ(r.ratio, 1.0);
}

TEST(Sweep, NonLipschitzIsRejected) {
  EXPECT_THROW(sweep_cut(path_graph(3), ConformalWeight::constant(3), {0, 2, 0}), InputError);
}

TEST(Sweep, MatchesBruteForceOnRandomMaps) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = connected_gnp(14, 0.2, seed);
    const auto w = random_weight(14, seed, 0.0, 1.0);
    const auto f = rounding_map_ball(g, w, static_cast<Vertex>(seed % 14), 0.2);
    const auto r = sweep_cut(g, w, f);
    const double brute = brute_sweep_ratio(g, w, f);
    if (std::isinf(brute)) {
      EXPECT_FALSE(r.from_sweep);
    } else {
      EXPECT_NEAR(r.ratio, brute, 1e-12);
      EXPECT_EQ(boundary(g, r.U), r.boundary);
      EXPECT_LE(2 * interior(g, r.U).size(), 14u);
    }
  }
}

// Every sweep level separates, so |S| >= phi |A| |B| / n.
TEST(Sweep, LevelsSatisfyConductanceInequality) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = connected_gnp(10, 0.3, seed);
    const double phi = vertex_expansion_exact(g).phi;
    const auto w = random_weight(10, seed, 0.0, 1.0);
    const auto r = sweep_cut(g, w, rounding_map_ball(g, w, 0, 0.0));
    ASSERT_FALSE(r.levels.empty());
    for (const auto& lv : r.levels) {
      EXPECT_EQ(lv.a_size + lv.b_size, 10);
      EXPECT_GE(lv.s_size, phi * lv.a_size * lv.b_size / 10.0 - 1e-9);
    }
  }
}

TEST(Sweep, MeasureWeightedRatio) {
  // Counting measure prefers {0,1,2}; a heavy vertex 0 makes that interior
  // too large and {0,1} wins.
  const Graph p4 = path_graph(4);
  const auto w = ConformalWeight::constant(4);
  const std::vector<double> f{0, 1, 2, 3};
  const auto plain = sweep_cut(p4, w, f);
  EXPECT_EQ(plain.U, (VertexSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(plain.ratio, 1.0 / 3.0);
  const auto r = sweep_cut(p4, w, f, Measure{3, 1, 1, 1});
  EXPECT_EQ(r.U, (VertexSet{0, 1}));
  EXPECT_DOUBLE_EQ(r.ratio, 0.25);
}

TEST(Witnesses, PathOfFour) {
  const auto x = vertex_expansion_witnesses(path_graph(4), {0, 1});
  EXPECT_EQ(x.boundary, (VertexSet{1}));
  EXPECT_EQ(x.f1, (std::vector<double>{-0.5, 0, 0.5, 0.5}));
  EXPECT_NEAR(x.sobs1, average_abs_difference(all_vertices(4), x.f1), 1e-15);
  EXPECT_DOUBLE_EQ(x.sobs1, 7.0 / 16.0);
  EXPECT_DOUBLE_EQ(x.normalized1, 4 * 7.0 / 16.0);
}

TEST(Witnesses, Triangle) {
  const auto x = vertex_expansion_witnesses(complete_graph(3), {0});
  EXPECT_EQ(x.boundary, (VertexSet{0}));
  EXPECT_EQ(x.f1, (std::vector<double>{0, 0.5, 0.5}));
  EXPECT_EQ(x.s1, (VertexSet{0}));
  EXPECT_TRUE(x.s2.empty());
}

TEST(Witnesses, DegenerateSetsAreErrors) {
  EXPECT_THROW(vertex_expansion_witnesses(path_graph(4), {}), InputError);
  EXPECT_THROW(vertex_expansion_witnesses(path_graph(4), all_vertices(4)), InputError);
}

// At an expansion-optimal U the better witness reaches 1/(3 phi).
TEST(Witnesses, OptimalSetGivesThirdOfInverseExpansion) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graph_catalog(n)) {
      const auto ex = vertex_expansion_exact(g);
      const auto x = vertex_expansion_witnesses(g, ex.U);
      EXPECT_TRUE(is_one_lipschitz(g, x.omega, x.f1));
      EXPECT_TRUE(is_one_lipschitz(g, x.omega, x.f2));
      EXPECT_GE(x.best_normalized(), 1.0 / (3.0 * ex.phi) - 1e-12);
    }
  }
}
