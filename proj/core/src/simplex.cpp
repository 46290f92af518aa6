#include "rigsep/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigsep/errors.hpp"

namespace rigsep::lp {

namespace {

class Tableau {
 public:
  Tableau(int m, int ncols) : m_(m), n_(ncols), w_(ncols + 1), t_(static_cast<std::size_t>(m) * (ncols + 1), 0.0),
                              basis_(static_cast<std::size_t>(m), -1) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double& rhs(int i) { return at(i, n_); }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }

  // Reduced costs r_j = c_B B^-1 A_j - c_j and objective value c_B x_B.
  void price(const std::vector<double>& cost, std::vector<double>& r, double& z) const {
    r.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) r[j] = -cost[j];
    z = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &t_[static_cast<std::size_t>(i) * w_];
      for (int j = 0; j < n_; ++j) r[j] += cb * row[j];
      z += cb * row[n_];
    }
  }

  void pivot(int p, int q, std::vector<double>& r, double& z) {
    double* prow = &t_[static_cast<std::size_t>(p) * w_];
    const double inv = 1.0 / prow[q];
    nz_.clear();
    for (int j = 0; j <= n_; ++j) {
      if (prow[j] != 0.0) {
        prow[j] *= inv;
        if (std::abs(prow[j]) < 1e-14) prow[j] = 0.0;
        if (prow[j] != 0.0) nz_.push_back(j);
      }
    }
    prow[q] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == p) continue;
      double* row = &t_[static_cast<std::size_t>(i) * w_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (int j : nz_) row[j] -= f * prow[j];
      row[q] = 0.0;
      if (row[n_] < 0.0 && row[n_] > -1e-12) row[n_] = 0.0;
    }
    const double f = r[q];
    if (f != 0.0) {
      for (int j : nz_) {
        if (j == n_)
          z -= f * prow[j];
        else
          r[j] -= f * prow[j];
      }
      r[q] = 0.0;
    }
    basis_[p] = q;
  }

 private:
  int m_, n_, w_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<int> nz_;
};

enum class Outcome { Optimal, Unbounded };

Outcome iterate(Tableau& t, std::vector<double>& r, double& z, const std::vector<char>& barred, const Options& opt,
                int& iterations, int limit) {
  int degenerate = 0;
  bool bland = false;
  const int m = t.rows(), n = t.cols();
  for (;;) {
    int q = -1;
    double best = -opt.optimality_tol;
    for (int j = 0; j < n; ++j) {
      if (barred[j] || r[j] >= -opt.optimality_tol) continue;
      if (bland) {
        q = j;
        break;
      }
      if (r[j] < best) {
        best = r[j];
        q = j;
      }
    }
    if (q < 0) return Outcome::Optimal;

    int p = -1;
    double ratio = 0.0, piv = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = t.at(i, q);
      if (a <= opt.pivot_tol) continue;
      const double rt = std::max(0.0, t.rhs(i)) / a;
      if (p < 0 || rt < ratio - 1e-12 * std::max(1.0, ratio)) {
        p = i;
        ratio = rt;
        piv = a;
      } else if (rt <= ratio + 1e-12 * std::max(1.0, ratio)) {
        const bool take = bland ? t.basis()[i] < t.basis()[p] : a > piv;
        if (take) {
          p = i;
          ratio = std::min(ratio, rt);
          piv = a;
        }
      }
    }
    if (p < 0) return Outcome::Unbounded;
    if (ratio <= 1e-12) {
      if (++degenerate >= opt.degenerate_switch) bland = true;
    } else {
      degenerate = 0;
      bland = false;
    }
    t.pivot(p, q, r, z);
    if (++iterations > limit) throw SolverError("simplex: iteration limit reached");
  }
}

}  // namespace

Solution solve(const Problem& p, const Options& opt) {
  const int nv = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.objective.size()) != nv) throw InputError("simplex: objective length mismatch");

  std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
  std::vector<Sense> sense(static_cast<std::size_t>(m));
  int nslack = 0, nart = 0;
  for (int i = 0; i < m; ++i) {
    Sense s = p.rows[i].sense;
    if (p.rows[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (s == Sense::LessEqual)
        s = Sense::GreaterEqual;
      else if (s == Sense::GreaterEqual)
        s = Sense::LessEqual;
    }
    sense[i] = s;
    if (s != Sense::Equal) ++nslack;
    if (s != Sense::LessEqual) ++nart;
  }
  const int ncols = nv + nslack + nart;
  Tableau t(m, ncols);
  std::vector<int> identity_col(static_cast<std::size_t>(m));
  std::vector<char> artificial(static_cast<std::size_t>(ncols), 0);
  int next_slack = nv, next_art = nv + nslack;
  for (int i = 0; i < m; ++i) {
    for (auto [j, a] : p.rows[i].coeffs) {
      if (j < 0 || j >= nv) throw InputError("simplex: variable index out of range");
      t.at(i, j) += sign[i] * a;
    }
    t.rhs(i) = sign[i] * p.rows[i].rhs;
    if (sense[i] == Sense::LessEqual) {
      t.at(i, next_slack) = 1.0;
      identity_col[i] = next_slack++;
    } else {
      if (sense[i] == Sense::GreaterEqual) t.at(i, next_slack++) = -1.0;
      t.at(i, next_art) = 1.0;
      artificial[next_art] = 1;
      identity_col[i] = next_art++;
    }
    t.basis()[i] = identity_col[i];
  }

  const int limit = opt.max_iterations > 0 ? opt.max_iterations : 200 * (m + ncols) + 10000;
  Solution sol;
  std::vector<double> r;
  double z = 0.0;

  if (nart > 0) {
    std::vector<double> c1(static_cast<std::size_t>(ncols), 0.0);
    for (int j = 0; j < ncols; ++j)
      if (artificial[j]) c1[j] = -1.0;
    t.price(c1, r, z);
    std::vector<char> none(static_cast<std::size_t>(ncols), 0);
    iterate(t, r, z, none, opt, sol.iterations, limit);
    double scale = 1.0;
    for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(p.rows[i].rhs));
    if (z < -opt.feasibility_tol * scale * 10.0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    for (int i = 0; i < m; ++i) {
      if (!artificial[t.basis()[i]]) continue;
      int q = -1;
      double best = 1e-9;
      for (int j = 0; j < ncols; ++j) {
        if (artificial[j]) continue;
        if (std::abs(t.at(i, j)) > best) {
          best = std::abs(t.at(i, j));
          q = j;
        }
      }
      if (q >= 0) t.pivot(i, q, r, z);
    }
  }

  std::vector<double> c2(static_cast<std::size_t>(ncols), 0.0);
  for (int j = 0; j < nv; ++j) c2[j] = p.maximize ? p.objective[j] : -p.objective[j];
  t.price(c2, r, z);
  if (iterate(t, r, z, artificial, opt, sol.iterations, limit) == Outcome::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(static_cast<std::size_t>(nv), 0.0);
  for (int i = 0; i < m; ++i)
    if (t.basis()[i] < nv) sol.x[t.basis()[i]] = std::max(0.0, t.rhs(i));
  sol.objective = 0.0;
  for (int j = 0; j < nv; ++j) sol.objective += p.objective[j] * sol.x[j];
  sol.duals.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    const double y = sign[i] * r[identity_col[i]];
    sol.duals[i] = p.maximize ? y : -y;
  }
  return sol;
}

Solution solve_via_dual(const Problem& p, const Options& opt) {
  const int m = static_cast<int>(p.rows.size());
  const double flip = p.maximize ? 1.0 : -1.0;
  // Dual variable columns per primal row: one (sign-adjusted) or two for equalities.
  std::vector<int> pos(static_cast<std::size_t>(m), -1), neg(static_cast<std::size_t>(m), -1);
  Problem d;
  d.maximize = false;
  for (int i = 0; i < m; ++i) {
    const Sense s = p.rows[i].sense;
    if (s != Sense::GreaterEqual) pos[i] = d.num_vars++;
    if (s != Sense::LessEqual) neg[i] = d.num_vars++;
  }
  d.objective.assign(static_cast<std::size_t>(d.num_vars), 0.0);
  for (int i = 0; i < m; ++i) {
    if (pos[i] >= 0) d.objective[pos[i]] = p.rows[i].rhs;
    if (neg[i] >= 0) d.objective[neg[i]] = -p.rows[i].rhs;
  }
  std::vector<std::vector<std::pair<int, double>>> cols(static_cast<std::size_t>(p.num_vars));
  for (int i = 0; i < m; ++i) {
    for (auto [j, a] : p.rows[i].coeffs) {
      if (pos[i] >= 0) cols[j].emplace_back(pos[i], a);
      if (neg[i] >= 0) cols[j].emplace_back(neg[i], -a);
    }
  }
  for (int j = 0; j < p.num_vars; ++j) d.add_row(std::move(cols[j]), Sense::GreaterEqual, flip * p.objective[j]);

  const Solution ds = solve(d, opt);
  Solution sol;
  sol.iterations = ds.iterations;
  if (ds.status == Status::Unbounded) {
    sol.status = Status::Infeasible;
    return sol;
  }
  if (ds.status == Status::Infeasible) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x.assign(static_cast<std::size_t>(p.num_vars), 0.0);
  for (int j = 0; j < p.num_vars; ++j) sol.x[j] = std::max(0.0, ds.duals[j]);
  sol.duals.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double y = 0.0;
    if (pos[i] >= 0) y += ds.x[pos[i]];
    if (neg[i] >= 0) y -= ds.x[neg[i]];
    sol.duals[i] = flip * y;
  }
  sol.objective = 0.0;
  for (int j = 0; j < p.num_vars; ++j) sol.objective += p.objective[j] * sol.x[j];
  return sol;
}

}  // namespace rigsep::lp
