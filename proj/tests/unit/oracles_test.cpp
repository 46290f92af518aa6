#include <gtest/gtest.h>

#include <bit>

#include "rigsep/errors.hpp"
#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/oracles.hpp"
#include "rigsep/random.hpp"
#include "test_oracles.hpp"

using namespace rigsep;

TEST(Expansion, Examples) {
  EXPECT_DOUBLE_EQ(vertex_expansion_exact(complete_graph(5)).phi, 1.0);
  EXPECT_DOUBLE_EQ(vertex_expansion_exact(complete_graph(2)).phi, 1.0);
  const auto p4 = vertex_expansion_exact(path_graph(4));
  EXPECT_DOUBLE_EQ(p4.phi, 1.0 / 3.0);
  EXPECT_EQ(p4.U, (VertexSet{0, 1, 2}));
  EXPECT_EQ(p4.boundary, (VertexSet{2}));
  EXPECT_THROW(vertex_expansion_exact(path_graph(26)), InputError);
}

TEST(Expansion, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp(4 + static_cast<int>(seed % 9), 0.35, seed);
    EXPECT_NEAR(vertex_expansion_exact(g).phi, testsupport::naive_vertex_expansion(g), 1e-12) << "seed " << seed;
  }
}

TEST(Expansion, WeightedMeasure) {
  const Graph p4 = path_graph(4);
  const auto r = vertex_expansion_exact(p4, Measure{3, 1, 1, 1});
  EXPECT_DOUBLE_EQ(r.phi, 0.25);
  EXPECT_EQ(r.U, (VertexSet{0, 1}));
  EXPECT_DOUBLE_EQ(vertex_expansion_exact(p4, Measure(4, 2.0)).phi, 1.0 / 3.0);
}

TEST(SeparatorOracle, Examples) {
  EXPECT_DOUBLE_EQ(min_balanced_separator_exact(path_graph(5)).size, 1.0);
  EXPECT_DOUBLE_EQ(min_balanced_separator_exact(complete_graph(6)).size, 2.0);
  EXPECT_DOUBLE_EQ(min_balanced_separator_exact(Graph(6)).size, 0.0);
  EXPECT_TRUE(min_balanced_separator_exact(Graph(6)).S.empty());
  EXPECT_THROW(min_balanced_separator_exact(path_graph(19)), InputError);
}

TEST(SeparatorOracle, ResultIsBalancedAndMinimal) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = connected_gnp(10, 0.3, seed);
    const auto r = min_balanced_separator_exact(g);
    const auto comps = connected_components(g, set_difference(all_vertices(10), r.S));
    for (const auto& c : comps) EXPECT_LE(3 * c.size(), 20u);
    // No smaller set is balanced.
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      if (static_cast<double>(std::popcount(mask)) >= r.size) continue;
      VertexSet s;
      for (int v = 0; v < 10; ++v)
        if (mask >> v & 1u) s.push_back(v);
      bool ok = true;
      for (const auto& c : connected_components(g, set_difference(all_vertices(10), s))) ok &= 3 * c.size() <= 20;
      EXPECT_FALSE(ok) << "seed " << seed;
    }
  }
}

TEST(Minors, Examples) {
  const Graph k3 = complete_graph(3), k4 = complete_graph(4);
  EXPECT_FALSE(has_minor_exact(path_graph(6), k3).has_value());
  EXPECT_FALSE(has_minor_exact(star_graph(5), k3).has_value());
  const auto c4k3 = has_minor_exact(cycle_graph(4), k3);
  ASSERT_TRUE(c4k3.has_value());
  EXPECT_TRUE(validate_minor_witness(cycle_graph(4), k3, *c4k3, false).empty());
  EXPECT_FALSE(has_minor_exact(cycle_graph(4), k4).has_value());
  const Graph g = connected_gnp(7, 0.4, 2);
  EXPECT_TRUE(has_minor_exact(g, g).has_value());
  EXPECT_TRUE(has_strict_minor_exact(g, g).has_value());
  EXPECT_TRUE(has_minor_exact(grid_graph(2), k4).has_value());
}

TEST(Minors, StrictAndCarefulDiffer) {
  EXPECT_TRUE(has_minor_exact(complete_graph(4), complete_graph(3)).has_value());
  EXPECT_TRUE(has_strict_minor_exact(complete_graph(4), complete_graph(3)).has_value());
  // P3 is a minor of K4 but not a strict minor of it.
  EXPECT_FALSE(has_strict_minor_exact(complete_graph(4), path_graph(3)).has_value());
  EXPECT_TRUE(has_minor_exact(complete_graph(4), path_graph(3)).has_value());
  // Careful K3 minor needs the subdivided triangle C6.
  EXPECT_TRUE(has_careful_minor_exact(cycle_graph(6), complete_graph(3)).has_value());
  EXPECT_FALSE(has_careful_minor_exact(cycle_graph(5), complete_graph(3)).has_value());
  EXPECT_FALSE(has_careful_minor_exact(complete_graph(6), complete_graph(3)).has_value());
}

TEST(Minors, WitnessValidationReportsViolations) {
  const Graph p3 = path_graph(3);
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(validate_minor_witness(p3, k2, {{{0}, {1, 2}}}, true).empty());
  EXPECT_FALSE(validate_minor_witness(p3, k2, {{{0}, {2}}}, false).empty());
  EXPECT_FALSE(validate_minor_witness(p3, k2, {{{0, 2}, {1}}}, false).empty());
  EXPECT_FALSE(validate_minor_witness(p3, k2, {{{0, 1}, {1}}}, false).empty());
  EXPECT_TRUE(validate_minor_witness(p3, path_graph(3), {{{0}, {1}, {2}}}, true).empty());
  EXPECT_FALSE(validate_minor_witness(complete_graph(3), path_graph(3), {{{0}, {1}, {2}}}, true).empty());
}

TEST(Careful, HandBuiltWitnesses) {
  const Graph p3 = path_graph(3);
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(validate_careful_witness(p3, k2, {{{0}, {2}}, {1}}).empty());
  // subdivider inside a branch set
  EXPECT_FALSE(validate_careful_witness(p3, k2, {{{0, 1}, {2}}, {1}}).empty());
  // adjacent branch sets
  EXPECT_FALSE(validate_careful_witness(path_graph(4), k2, {{{0, 1}, {2}}, {3}}).empty());
  // subdivider touching a third branch set
  const Graph star = star_graph(3);
  const Graph h = Graph::from_edges(3, {{0, 1}});
  EXPECT_FALSE(validate_careful_witness(star, h, {{{1}, {2}, {3}}, {0}}).empty());
  // C6 carries a careful triangle
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(validate_careful_witness(cycle_graph(6), k3, {{{0}, {2}, {4}}, {1, 5, 3}}).empty());
}

TEST(Careful, FoundWitnessesValidate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = connected_gnp(9, 0.3, seed);
    if (const auto w = has_careful_minor_exact(g, complete_graph(3))) {
      EXPECT_TRUE(validate_minor_witness(g, subdivision(complete_graph(3)), *w, true).empty());
    }
  }
}

// A K3 minor of G lifts to a careful K3 minor of the subdivision of G.
TEST(Careful, SubdivisionCarriesEveryMinor) {
  const Graph k3 = complete_graph(3);
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : connected_graph_catalog(n)) {
      if (subdivision(g).n() > 10) continue;
      const bool minor = has_minor_exact(g, k3).has_value();
      const bool careful = has_careful_minor_exact(subdivision(g), k3).has_value();
      if (minor) { EXPECT_TRUE(careful); }
    }
  }
}

TEST(CspreadSmall, Examples) {
  EXPECT_NEAR(cspread_exact_small(complete_graph(2)), 0.5, 1e-6);
  EXPECT_NEAR(cspread_exact_small(complete_graph(3)), 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(cspread_exact_small(path_graph(3)), 4.0 / 3.0, 1e-3);
  EXPECT_NEAR(cspread_exact_small(path_graph(3)), cspread_lp(path_graph(3), 1).value, 1e-3);
  EXPECT_THROW(cspread_exact_small(path_graph(7)), InputError);
}

TEST(Catalog, Counts) {
  const std::vector<std::size_t> expect{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_graph_catalog(n).size(), expect[n - 1]) << "n = " << n;
  EXPECT_THROW(connected_graph_catalog(7), InputError);
}

TEST(Catalog, GraphsAreConnectedAndOrdered) {
  for (int n = 1; n <= 5; ++n) {
    const auto cat = connected_graph_catalog(n);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      EXPECT_TRUE(is_connected(cat[i]));
      if (i > 0) { EXPECT_LE(cat[i - 1].m(), cat[i].m()); }
    }
  }
}
