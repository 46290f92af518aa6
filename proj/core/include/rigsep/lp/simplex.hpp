#pragma once

#include <utility>
#include <vector>

namespace rigsep::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

// optimize c^T x subject to the rows and x >= 0.
struct Problem {
  int num_vars = 0;
  std::vector<double> objective;
  bool maximize = true;
  std::vector<Row> rows;

  int add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs) {
    rows.push_back({std::move(coeffs), sense, rhs});
    return static_cast<int>(rows.size()) - 1;
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Optimal;
  double objective = 0.0;
  std::vector<double> x;
  // Sensitivity of the optimum to each right-hand side.
  std::vector<double> duals;
  int iterations = 0;
};

struct Options {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-11;
  int max_iterations = 0;  // 0: automatic
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 50;
};

// Dense two-phase primal simplex.  Throws SolverError on iteration limit.
Solution solve(const Problem& p, const Options& opt = {});

// Builds the LP dual: for max c^T x, Ax (<=,>=,=) b, x >= 0 it is
// min b^T y, A^T y >= c with y >= 0 / <= 0 / free per row sense (free rows
// are split).  Returns the dual solved and mapped back: x is recovered from
// the dual's sensitivities, duals from the dual's solution.
Solution solve_via_dual(const Problem& p, const Options& opt = {});

}  // namespace rigsep::lp
