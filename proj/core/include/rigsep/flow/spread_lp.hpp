#pragma once

#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/flow/multiflow.hpp"
#include "rigsep/graph.hpp"

namespace rigsep {

struct SpreadLPOptions {
  // Largest n solved exactly by simplex; above it p = 1 falls back to a
  // multiplicative-weights ascent with a certified upper bound.
  int exact_limit = 24;
  // Solve the (omega, d) LP through its dual (smaller tableau).
  bool via_dual = true;
  int ascent_iterations = 600;
  // p = 2 cutting-plane loop.
  double relative_gap = 1e-7;
  int max_rounds = 3000;
};

struct SpreadLPResult {
  ConformalWeight omega;  // ||omega||_{L^p} <= 1
  double value = 0.0;     // spread(dist_omega), recomputed from omega
  double lp_value = 0.0;  // objective reported by the optimizer
  double upper_bound = 0.0;
  bool exact = true;
  int iterations = 0;
  double norm = 0.0;  // ||omega||_{L^p}
};

// max (1/n^2) sum_{u,v} dist_w(u,v) over ||w||_{L^p} <= 1, p in {1, 2}.
SpreadLPResult cspread_lp(const Graph& g, int p, const SpreadLPOptions& opt = {});

struct VcongOptions {
  double relative_gap = 1e-7;  // p = 2
  int max_sweeps = 20000;
  int max_rounds = 10000;      // column generation
};

struct VcongResult {
  double value = 0.0;        // ||c||_{l_p} of the returned flow
  double lower_bound = 0.0;  // certified by LP duality or the Frank-Wolfe gap
  MultiFlow flow;
  std::vector<double> congestion;
  std::vector<double> prices;  // optimal vertex prices (p = inf)
  int iterations = 0;
};

// min ||c_L||_{l_p} over flows with unit demand between every unordered pair
// of distinct vertices; p = 0 stands for infinity.  Exact for p in {1, inf}
// by column generation, to relative_gap for p = 2.
inline constexpr int kInfNorm = 0;
VcongResult vcong_lp(const Graph& g, int p, Congestion convention = Congestion::EdgeIncidence,
                     const VcongOptions& opt = {});

struct DualityReport {
  int p = 0, q = 0;  // p = 0 means infinity
  double cspread = 0.0;
  double scale = 0.0;  // n^(2-1/q)
  double predicted = 0.0;
  double vcong_incidence = 0.0;
  double vcong_visit = 0.0;
  double relative_error = 0.0;  // incidence convention vs predicted
  // For (inf,1) only: the visit convention equals (n cspread_1 + n - 1) / 2.
  double visit_predicted = 0.0;
  double visit_relative_error = 0.0;
  bool holds = false;
  SpreadLPResult spread;
  VcongResult flow_incidence;
  VcongResult flow_visit;
};

// (p,q) in {(inf,1), (2,2), (1,inf)}.
DualityReport check_duality(const Graph& g, int p, int q, double tol = 1e-4);

}  // namespace rigsep
