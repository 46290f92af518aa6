#include "rigsep/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rigsep/errors.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

namespace {

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) {
    l(v, v) = g.degree(v);
    for (Vertex u : g.neighbors(v)) l(v, u) = -1.0;
  }
  return l;
}

void apply_laplacian(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double s = g.degree(v) * x[v];
    for (Vertex u : g.neighbors(v)) s -= x[u];
    y[v] = s;
  }
}

struct RitzPairs {
  std::vector<double> values;
  std::vector<Eigen::VectorXd> vectors;
};

// Smallest k eigenpairs of L through Lanczos on shift*I - L with full
// reorthogonalization.  With deflate set, vectors are kept orthogonal to the
// constant vector (the lambda_0 eigenvector of a connected graph).
RitzPairs lanczos_smallest(const Graph& g, int k, bool deflate, double tol) {
  const int n = g.n();
  const int dim = deflate ? n - 1 : n;
  const double shift = 2.0 * std::max(1, g.max_degree());
  const Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Rng rng(0x5eed);
  auto random_start = [&](const Eigen::MatrixXd& v, int cols) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);
    for (int pass = 0; pass < 2; ++pass) {
      if (deflate) x -= ones.dot(x) * ones;
      for (int j = 0; j < cols; ++j) x -= v.col(j).dot(x) * v.col(j);
    }
    return Eigen::VectorXd(x / x.norm());
  };

  for (int m = std::min(dim, std::max(2 * k + 40, 80));; m = std::min(dim, 2 * m)) {
    Eigen::MatrixXd v(n, m);
    Eigen::VectorXd alpha(m), beta(m);
    v.col(0) = random_start(v, 0);
    Eigen::VectorXd w(n);
    double last_beta = 0.0;
    for (int j = 0; j < m; ++j) {
      apply_laplacian(g, v.col(j), w);
      w = shift * v.col(j) - w;
      alpha[j] = v.col(j).dot(w);
      for (int pass = 0; pass < 2; ++pass) {
        if (deflate) w -= ones.dot(w) * ones;
        for (int i = 0; i <= j; ++i) w -= v.col(i).dot(w) * v.col(i);
      }
      const double b = w.norm();
      last_beta = b;
      if (j + 1 == m) break;
      if (b < 1e-10 * shift) {
        // Invariant subspace found; continue in a fresh direction.
        beta[j] = 0.0;
        v.col(j + 1) = random_start(v, j + 1);
      } else {
        beta[j] = b;
        v.col(j + 1) = w / b;
      }
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    if (es.info() != Eigen::Success) throw SolverError("lanczos: tridiagonal eigensolve failed");
    bool converged = true;
    RitzPairs out;
    const int take = std::min(k, m);
    for (int i = 0; i < take; ++i) {
      const int col = m - 1 - i;  // largest of shift - L
      const double resid = std::abs(last_beta * es.eigenvectors()(m - 1, col));
      if (resid > tol * shift) converged = false;
      out.values.push_back(shift - es.eigenvalues()[col]);
      Eigen::VectorXd x = v * es.eigenvectors().col(col);
      out.vectors.push_back(x / x.norm());
    }
    if ((converged && take == k) || m == dim) {
      if (take < k) throw SolverError("lanczos: fewer eigenpairs than requested");
      return out;
    }
  }
}

std::vector<double> to_std(const Eigen::VectorXd& x) { return {x.data(), x.data() + x.size()}; }

void fix_sign(std::vector<double>& x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[best]) + 1e-12) best = i;
  if (!x.empty() && x[best] < 0.0)
    for (double& e : x) e = -e;
}

}  // namespace

LaplacianSpectrum laplacian_spectrum(const Graph& g, int k, bool with_vectors) {
  const int n = g.n();
  if (k < 0 || k > n) throw InputError("laplacian_spectrum: k must lie in [0, n]");
  LaplacianSpectrum out;
  if (k == 0) return out;
  if (n <= kDenseSpectrumLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g),
                                                      with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw SolverError("laplacian_spectrum: dense eigensolve failed");
    for (int i = 0; i < k; ++i) {
      out.eigenvalues.push_back(es.eigenvalues()[i]);
      if (with_vectors) out.eigenvectors.push_back(to_std(es.eigenvectors().col(i)));
    }
    return out;
  }
  auto rp = lanczos_smallest(g, k, false, 1e-10);
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rp.values[a] < rp.values[b]; });
  for (int i : order) {
    out.eigenvalues.push_back(rp.values[i]);
    if (with_vectors) out.eigenvectors.push_back(to_std(rp.vectors[i]));
  }
  return out;
}

std::vector<double> fiedler_vector(const Graph& g) {
  if (g.n() < 2) throw InputError("fiedler_vector: need at least two vertices");
  if (!is_connected(g)) throw InputError("fiedler_vector: graph is not connected");
  std::vector<double> x;
  if (g.n() <= 400) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g));
    if (es.info() != Eigen::Success) throw SolverError("fiedler_vector: dense eigensolve failed");
    x = to_std(es.eigenvectors().col(1));
  } else {
    x = to_std(lanczos_smallest(g, 1, true, 1e-8).vectors.front());
  }
  fix_sign(x);
  return x;
}

BisectionResult spectral_bisection(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw InputError("spectral_bisection: empty graph");
  if (!is_connected(g)) throw InputError("spectral_bisection: graph is not connected");
  BisectionResult res;
  if (n == 1) {
    res.side = {0};
    return res;
  }
  res.fiedler = fiedler_vector(g);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return res.fiedler[a] < res.fiedler[b]; });

  std::vector<char> in(static_cast<std::size_t>(n), 0);
  long cut = 0;
  int best_k = -1;
  long best_cut = 0;
  for (int k = 1; k < n; ++k) {
    const Vertex v = order[k - 1];
    in[v] = 1;
    for (Vertex u : g.neighbors(v)) cut += in[u] ? -1 : 1;
    // cut / min(k, n-k) < best_cut / min(best_k, n-best_k), cross-multiplied.
    const long small = std::min(k, n - k);
    if (best_k < 0 || cut * std::min(best_k, n - best_k) < best_cut * small) {
      best_k = k;
      best_cut = cut;
    }
  }
  std::fill(in.begin(), in.end(), 0);
  for (int i = 0; i < best_k; ++i) in[order[i]] = 1;
  res.side = make_set({order.begin(), order.begin() + best_k});
  res.cut_edges = static_cast<std::size_t>(best_cut);
  res.ratio = static_cast<double>(best_cut) / std::min(best_k, n - best_k);
  const char smaller = best_k <= n - best_k ? 1 : 0;
  std::vector<Vertex> sep;
  for (auto [u, v] : g.edges())
    if (in[u] != in[v]) sep.push_back(in[u] == smaller ? u : v);
  res.separator = make_set(std::move(sep));
  return res;
}

SpreadingResult spreading_constant(const Graph& g, const ConformalWeight& w, int r, SpreadingMode mode,
                                   std::uint64_t seed, std::size_t samples) {
  w.check_matches(g);
  const int n = g.n();
  if (r < 1 || r > n) throw InputError("spreading_constant: r must lie in [1, n]");
  const double norm = w.l2_counting_norm();
  if (!(norm > 0.0)) throw InputError("spreading_constant: omega must be nonzero");
  const auto d = all_pairs_metric(g, w);
  auto value = [&](const std::vector<Vertex>& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) sum += 2.0 * d(s[i], s[j]);
    return sum / (static_cast<double>(r) * r);
  };
  SpreadingResult res;
  res.epsilon = kInfinity;
  auto consider = [&](const std::vector<Vertex>& s) {
    const double v = value(s);
    ++res.subsets;
    if (v < res.epsilon) {
      res.epsilon = v;
      res.minimizer = make_set(s);
    }
  };
  if (mode == SpreadingMode::Exact) {
    double count = 1.0;
    for (int i = 0; i < r; ++i) count = count * (n - i) / (i + 1);
    if (count > 1e6 + 0.5) throw InputError("spreading_constant: more than 10^6 subsets, use sampled mode");
    std::vector<Vertex> s(static_cast<std::size_t>(r));
    std::iota(s.begin(), s.end(), 0);
    for (;;) {
      consider(s);
      int i = r - 1;
      while (i >= 0 && s[i] == n - r + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
    }
  } else {
    if (samples == 0) throw InputError("spreading_constant: need at least one sample");
    res.exact = false;
    Rng rng(seed);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < samples; ++t) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = 0; i < r; ++i) std::swap(perm[i], perm[i + rng.below(static_cast<std::uint64_t>(n - i))]);
      consider({perm.begin(), perm.begin() + r});
    }
  }
  res.epsilon /= norm;
  return res;
}

}  // namespace rigsep
