#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigsep/graph.hpp"
#include "rigsep/partition/rounding.hpp"

namespace rigsep {

// Exhaustive searches for small instances.  Every function refuses inputs
// above its documented size with InputError.

struct ExpansionResult {
  double phi = 0.0;
  VertexSet U;
  VertexSet boundary;
};

// min |dU|/|U| over nonempty U with |interior(U)| <= |V|/2 (measures when mu
// is given); n <= 25.  Ties: smaller boundary, then lexicographically
// smaller U.
ExpansionResult vertex_expansion_exact(const Graph& g, const Measure& mu = {});

struct SeparatorOracleResult {
  double size = 0.0;  // |S| or mu(S)
  VertexSet S;
};

// Minimum 2/3-balanced separator; n <= 18.
SeparatorOracleResult min_balanced_separator_exact(const Graph& g, const Measure& mu = {});

struct MinorWitness {
  std::vector<VertexSet> supernodes;  // indexed by H vertex
};

// Pairwise disjoint connected sets with an edge between the sets of every
// H-edge.  |V_G| <= 10, |V_H| <= 10.
std::optional<MinorWitness> has_minor_exact(const Graph& g, const Graph& h);

// As has_minor_exact, with E_G(A_u, A_v) nonempty exactly for the H-edges.
std::optional<MinorWitness> has_strict_minor_exact(const Graph& g, const Graph& h);

// Strict minor of the subdivision of H.
std::optional<MinorWitness> has_careful_minor_exact(const Graph& g, const Graph& h);

// Returns the list of violated conditions of a minor witness (empty if valid).
std::vector<std::string> validate_minor_witness(const Graph& g, const Graph& h, const MinorWitness& w,
                                                bool strict);

struct CarefulWitness {
  std::vector<VertexSet> branch;  // B_u per H vertex
  std::vector<Vertex> subdivider;  // w_xy per edge of h.edges()
};

// Conditions: the B_u are nonempty, connected, pairwise disjoint and pairwise
// non-adjacent; the w_xy are distinct, outside every B_u and independent;
// w_xy has a neighbor in B_u exactly when u is x or y.
std::vector<std::string> validate_careful_witness(const Graph& g, const Graph& h, const CarefulWitness& w);

// Grid search plus local refinement of the L1-extremal spread; n <= 6.
double cspread_exact_small(const Graph& g);

// Connected graphs on exactly n vertices up to isomorphism, n <= 6, each in
// a canonical labelling, ordered by edge count then edge list.
std::vector<Graph> connected_graph_catalog(int n);

}  // namespace rigsep
