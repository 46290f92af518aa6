#include <gtest/gtest.h>

#include <cmath>

#include "rigsep/errors.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/partition/chopping.hpp"
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

// Union over k = 0..kmax of fat spheres at tau + k delta, evaluated vertex by vertex.
VertexSet brute_cut(const std::vector<std::vector<double>>& d, const ConformalWeight& w, const VertexSet& h, Vertex c,
                    double tau, double delta, int kmax) {
  VertexSet out;
  for (Vertex v : h) {
    for (int k = 0; k <= kmax; ++k) {
      const double r = tau + k * delta;
      if (d[c][v] >= r - w[v] / 2 && d[c][v] <= r + w[v] / 2) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

void expect_pairwise_nonadjacent(const Graph& g, const std::vector<VertexSet>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) EXPECT_FALSE(has_edge_between(g, comps[i], comps[j]));
}

}  // namespace

TEST(Chopping, CutOnPath) {
  const Graph p5 = path_graph(5);
  const auto w = ConformalWeight::constant(5);
  EXPECT_EQ(cut_delta(p5, w, all_vertices(5), 0, 1.0, 2.0), (VertexSet{1, 3}));
  EXPECT_THROW(cut_delta(p5, w, all_vertices(5), 0, 0.0, 0.0), InputError);
  EXPECT_THROW(cut_delta(p5, w, all_vertices(5), 0, 3.0, 2.0), InputError);
}

TEST(Chopping, CutOfSingleVertex) {
  const Graph k1(1);
  EXPECT_TRUE(cut_delta(k1, ConformalWeight::constant(1), {0}, 0, 0.7, 1.0).empty());
}

TEST(Chopping, CutMatchesBruteForceUnion) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = connected_gnp(14, 0.2, seed);
    const auto w = random_weight(14, seed, 0.05, 1.0);
    const auto d = testsupport::floyd_warshall(g, w.values());
    double diam = 0.0;
    for (const auto& row : d)
      for (double x : row) diam = std::max(diam, x);
    for (double delta : {0.2, 0.5, 1.3}) {
      const int kmax = static_cast<int>(std::ceil(diam / delta)) + 1;
      for (double tau : {0.0, delta / 3, delta}) {
        EXPECT_EQ(cut_delta(g, w, all_vertices(14), 0, tau, delta), brute_cut(d, w, all_vertices(14), 0, tau, delta, kmax));
      }
    }
  }
}

TEST(Chopping, ChopOnPath) {
  const Graph p5 = path_graph(5);
  const auto w = ConformalWeight::constant(5);
  EXPECT_EQ(chop_delta(p5, w, all_vertices(5), 0, 1.0, 2.0), (std::vector<VertexSet>{{0}, {2}, {4}}));
  // Large delta with tau away from the center: no sphere meets the path.
  EXPECT_EQ(chop_delta(p5, w, all_vertices(5), 0, 9.5, 10.0), (std::vector<VertexSet>{all_vertices(5)}));
  // Every vertex in some sphere.
  EXPECT_TRUE(chop_delta(p5, w, all_vertices(5), 0, 0.0, 1.0).empty());
}

TEST(Chopping, ChopComponentsAreNonAdjacent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = connected_gnp(20, 0.15, seed);
    const auto w = random_weight(20, seed, 0.1, 1.0);
    Rng rng(seed);
    const auto comps = chop_delta(g, w, all_vertices(20), 0, rng.uniform(0, 0.8), 0.8);
    expect_pairwise_nonadjacent(g, comps);
  }
}

TEST(Chopping, TreeOnPath) {
  const ChoppingTree t = build_chopping_tree(path_graph(5), ConformalWeight::constant(5), 2.0, constant_offsets(1.0), 1);
  ASSERT_EQ(t.nodes.size(), 4u);
  EXPECT_EQ(t.nodes[0].center, 0);
  EXPECT_EQ(t.nodes[0].vertices, all_vertices(5));
  EXPECT_EQ(t.nodes[0].tau, 1.0);
  std::vector<Vertex> centers;
  for (int c : t.nodes[0].children) centers.push_back(t.nodes[c].center);
  EXPECT_EQ(centers, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(t.nodes[1].spacing, 0.0);
  EXPECT_EQ(t.nodes[2].spacing, 2.0);
  EXPECT_TRUE(std::isnan(t.nodes[1].tau));
}

TEST(Chopping, DepthZeroIsRootOnly) {
  const ChoppingTree t = build_chopping_tree(grid_graph(3), ConformalWeight::constant(16), 1.0, constant_offsets(0.5), 0);
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_THROW(build_chopping_tree(grid_graph(3), ConformalWeight::constant(16), 1.0, constant_offsets(0.5), -1),
               InputError);
}

TEST(Chopping, SingleVertexHasNoChildren) {
  const ChoppingTree t = build_chopping_tree(Graph(1), ConformalWeight::constant(1), 1.0, constant_offsets(0.0), 3);
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].children.empty());
}

TEST(Chopping, TreeStructureInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = connected_gnp(25, 0.12, seed);
    const auto w = random_weight(25, seed, 0.1, 1.0);
    const double delta = 0.9;
    const ChoppingTree t = build_chopping_tree(g, w, delta, uniform_offsets(seed, delta), 3);
    const auto d = testsupport::floyd_warshall(g, w.values());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const auto& node = t.nodes[i];
      if (node.depth >= 3) continue;
      ASSERT_GE(node.tau, 0.0);
      ASSERT_LE(node.tau, delta);
      // Children are the components of the chop, in order.
      std::vector<VertexSet> kids;
      for (int c : node.children) kids.push_back(t.nodes[c].vertices);
      EXPECT_EQ(kids, chop_delta(g, w, node.vertices, node.center, node.tau, delta));
      expect_pairwise_nonadjacent(g, kids);
      for (int c : node.children) {
        const auto& child = t.nodes[c];
        EXPECT_EQ(child.parent, static_cast<int>(i));
        EXPECT_EQ(child.ancestor_centers.front(), node.center);
        // Center maximizes the ambient distance to the ancestors, first vertex on ties.
        auto to_anc = [&](Vertex x) {
          double best = testsupport::kInf;
          for (Vertex a : child.ancestor_centers) best = std::min(best, d[a][x]);
          return best;
        };
        double best = -1;
        Vertex arg = -1;
        for (Vertex x : child.vertices)
          if (to_anc(x) > best + 1e-12) {
            best = to_anc(x);
            arg = x;
          }
        EXPECT_EQ(child.center, arg);
        EXPECT_NEAR(child.spacing, best, 1e-12);
      }
    }
  }
}

TEST(Chopping, UniformOffsetsDependOnNodePathOnly) {
  const Graph g = grid_graph(6);
  const auto w = ConformalWeight::constant(g.n());
  const auto a = build_chopping_tree(g, w, 2.0, uniform_offsets(11, 2.0), 2);
  const auto b = build_chopping_tree(g, w, 2.0, uniform_offsets(11, 2.0), 2);
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    EXPECT_EQ(a.nodes[i].vertices, b.nodes[i].vertices);
    if (!std::isnan(a.nodes[i].tau)) {
      EXPECT_EQ(a.nodes[i].tau, b.nodes[i].tau);
    }
  }
  const auto c = build_chopping_tree(g, w, 2.0, uniform_offsets(12, 2.0), 2);
  EXPECT_NE(a.nodes[0].tau, c.nodes[0].tau);
}

TEST(Chopping, ShatterOnPath) {
  const Graph p5 = path_graph(5);
  const auto w = ConformalWeight::constant(5);
  AmbientMetric amb(p5, w);
  const auto s = shatter(amb, all_vertices(5), {0}, {0.0}, 2.0);
  EXPECT_EQ(s.shards, (VertexSet{2}));
  EXPECT_EQ(s.components, (std::vector<VertexSet>{{0, 1}, {3, 4}}));
  const auto none = shatter(amb, all_vertices(5), {}, {}, 2.0);
  EXPECT_TRUE(none.shards.empty());
  EXPECT_EQ(none.components, (std::vector<VertexSet>{all_vertices(5)}));
  EXPECT_THROW(shatter(amb, all_vertices(5), {0}, {}, 2.0), InputError);
}

TEST(Chopping, ShatterBeyondReachSkipsDiameterCheck) {
  const Graph p5 = path_graph(5);
  const auto w = ConformalWeight::constant(5);
  AmbientMetric amb(p5, w);
  const auto s = shatter(amb, all_vertices(5), {0}, {0.0}, 10.0);
  EXPECT_TRUE(s.shards.empty());
  EXPECT_TRUE(s.diameter_precondition);
  const auto far = shatter(amb, {3, 4}, {0}, {0.5}, 1.0);
  EXPECT_FALSE(far.diameter_precondition);
}

// When every vertex is within delta of a center the components have small
// ambient diameter.
TEST(Chopping, ShatterDiameterBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = connected_gnp(30, 0.1, seed);
    const auto w = random_weight(30, seed, 0.1, 1.0);
    AmbientMetric amb(g, w);
    const auto d = testsupport::floyd_warshall(g, w.values());
    Rng rng(seed);
    std::vector<Vertex> centers{0, 7, 19};
    std::vector<double> taus;
    const double delta = 3.0;
    for (std::size_t i = 0; i < centers.size(); ++i) taus.push_back(rng.uniform(0, delta));
    const auto s = shatter(amb, all_vertices(30), centers, taus, delta);
    expect_pairwise_nonadjacent(g, s.components);
    if (!s.diameter_precondition) continue;
    const double bound = 2 * (delta + *std::max_element(taus.begin(), taus.end()));
    for (const auto& comp : s.components)
      for (Vertex u : comp)
        for (Vertex v : comp) EXPECT_LE(d[u][v], bound + 1e-9);
  }
}
