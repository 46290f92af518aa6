#include <gtest/gtest.h>

#include <cmath>

#include "rigsep/errors.hpp"
#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/oracles.hpp"
#include "test_oracles.hpp"

using namespace rigsep;

namespace {

double fw_spread(const Graph& g, const std::vector<double>& w) {
  const auto d = testsupport::floyd_warshall(g, w);
  double s = 0;
  for (const auto& row : d)
    for (double x : row) s += x;
  return s / (static_cast<double>(g.n()) * g.n());
}

// Every unordered pair of distinct vertices receives exactly one unit.
void expect_unit_demands(const Graph& g, const MultiFlow& f) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) EXPECT_NEAR(f.pair_total(u, v), 1.0, 1e-7) << u << "," << v;
}

}  // namespace

TEST(SpreadLP, SmallExamples) {
  const auto k2 = cspread_lp(complete_graph(2), 1);
  EXPECT_NEAR(k2.value, 0.5, 1e-9);
  EXPECT_NEAR(k2.omega[0] + k2.omega[1], 2.0, 1e-9);
  EXPECT_NEAR(cspread_lp(complete_graph(3), 1).value, 2.0 / 3.0, 1e-9);
  const auto p3 = cspread_lp(path_graph(3), 1);
  EXPECT_NEAR(p3.value, 4.0 / 3.0, 1e-9);
  EXPECT_NEAR(p3.omega[1], 3.0, 1e-9);
  EXPECT_EQ(cspread_lp(Graph(1), 1).value, 0.0);
  EXPECT_THROW(cspread_lp(Graph(2), 1), InputError);
  EXPECT_THROW(cspread_lp(path_graph(3), 3), InputError);
}

TEST(SpreadLP, ResultIsFeasibleAndSelfConsistent) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = connected_gnp(9, 0.35, seed);
    for (int p : {1, 2}) {
      const auto r = cspread_lp(g, p);
      EXPECT_LE(r.norm, 1.0 + 1e-8);
      EXPECT_NEAR(r.value, fw_spread(g, r.omega.values()), 1e-9);
      EXPECT_NEAR(r.value, r.lp_value, 1e-6 * std::max(1.0, r.value));
      EXPECT_LE(r.value, r.upper_bound * (1 + 1e-6));
      for (double x : r.omega.values()) EXPECT_GE(x, 0.0);
    }
  }
}

TEST(SpreadLP, AgreesWithGridSearchOracle) {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : connected_graph_catalog(n)) {
      const double lp = cspread_lp(g, 1).value;
      const double grid = cspread_exact_small(g);
      EXPECT_NEAR(lp, grid, 1e-3);
      EXPECT_GE(lp, grid - 1e-9);
    }
  }
}

TEST(SpreadLP, L2NeverBelowUniformWeight) {
  // Constant weight 1 has unit L2 norm, so it is feasible for p = 2.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = connected_gnp(10, 0.3, seed);
    EXPECT_GE(cspread_lp(g, 2).value, fw_spread(g, std::vector<double>(10, 1.0)) - 1e-9);
  }
}

TEST(SpreadLP, LargeInputUsesCertifiedAscent) {
  SpreadLPOptions opt;
  opt.exact_limit = 8;
  const Graph g = grid_graph(3);
  const auto approx = cspread_lp(g, 1, opt);
  EXPECT_FALSE(approx.exact);
  const auto exact = cspread_lp(g, 1);
  EXPECT_TRUE(exact.exact);
  EXPECT_LE(approx.value, exact.value + 1e-9);
  EXPECT_GE(approx.upper_bound, exact.value - 1e-6);
}

TEST(Vcong, SmallExamples) {
  EXPECT_NEAR(vcong_lp(complete_graph(2), kInfNorm).value, 1.0, 1e-9);
  EXPECT_NEAR(vcong_lp(complete_graph(3), kInfNorm).value, 2.0, 1e-9);
  EXPECT_NEAR(vcong_lp(complete_graph(2), kInfNorm, Congestion::VertexVisit).value, 1.0, 1e-9);
  EXPECT_NEAR(vcong_lp(complete_graph(3), kInfNorm, Congestion::VertexVisit).value, 2.0, 1e-9);
  const auto p3 = vcong_lp(path_graph(3), kInfNorm, Congestion::VertexVisit);
  EXPECT_NEAR(p3.value, 3.0, 1e-9);
  EXPECT_NEAR(p3.congestion[1], 3.0, 1e-9);
  EXPECT_NEAR(vcong_lp(path_graph(3), kInfNorm).value, 4.0, 1e-9);
}

TEST(Vcong, FlowMeetsDemandsAndReportsItsCongestion) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = connected_gnp(8, 0.4, seed);
    for (int p : {kInfNorm, 1, 2}) {
      for (auto conv : {Congestion::EdgeIncidence, Congestion::VertexVisit}) {
        const auto r = vcong_lp(g, p, conv);
        expect_unit_demands(g, r.flow);
        const auto c = congestion_map(g, r.flow, conv);
        for (Vertex v = 0; v < g.n(); ++v) EXPECT_NEAR(c[v], r.congestion[v], 1e-7);
        double norm = 0;
        if (p == kInfNorm) {
          for (double x : c) norm = std::max(norm, x);
        } else {
          for (double x : c) norm += std::pow(x, p);
          norm = std::pow(norm, 1.0 / p);
        }
        EXPECT_NEAR(norm, r.value, 1e-6 * r.value);
        EXPECT_LE(r.lower_bound, r.value * (1 + 1e-9));
      }
    }
  }
}

// Every vertex is an endpoint of n-1 demands.  The stronger bound n fails
// already on K2 with either convention.
TEST(Vcong, EndpointLowerBound) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = vcong_lp(complete_graph(n), kInfNorm, Congestion::VertexVisit);
    EXPECT_NEAR(r.value, n - 1, 1e-9);
  }
  EXPECT_LT(vcong_lp(complete_graph(2), kInfNorm).value, 2.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = connected_gnp(9, 0.3, seed);
    EXPECT_GE(vcong_lp(g, kInfNorm, Congestion::VertexVisit).value, g.n() - 1 - 1e-9);
  }
}

TEST(Duality, InfinityOneExamples) {
  for (const Graph& g : {complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(5), star_graph(4)}) {
    const auto r = check_duality(g, kInfNorm, 1);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.relative_error, 1e-4);
    EXPECT_LE(r.visit_relative_error, 1e-4);
    EXPECT_NEAR(r.scale, g.n(), 1e-12);
  }
  const auto p3 = check_duality(path_graph(3), kInfNorm, 1);
  EXPECT_NEAR(p3.vcong_incidence, 4.0, 1e-7);
  EXPECT_NEAR(p3.vcong_visit, 3.0, 1e-7);
  EXPECT_NEAR(p3.visit_predicted, (3 * 4.0 / 3.0 + 2) / 2, 1e-7);
}

TEST(Duality, InfinityOneOnCatalog) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : connected_graph_catalog(n)) EXPECT_TRUE(check_duality(g, kInfNorm, 1).holds);
}

TEST(Duality, TwoTwo) {
  for (const Graph& g : {complete_graph(3), path_graph(4), cycle_graph(5)}) {
    const auto r = check_duality(g, 2, 2);
    EXPECT_TRUE(r.holds) << r.relative_error;
    EXPECT_NEAR(r.scale, std::pow(g.n(), 1.5), 1e-9);
  }
}

TEST(Duality, OneInfinity) {
  const auto r = check_duality(path_graph(4), 1, kInfNorm);
  EXPECT_TRUE(r.holds) << r.relative_error;
  EXPECT_THROW(check_duality(path_graph(4), 2, 1), InputError);
}
