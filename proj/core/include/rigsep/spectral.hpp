#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/graph.hpp"

namespace rigsep {

struct LaplacianSpectrum {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // unit norm, empty unless requested
};

// Dense solve up to this many vertices, Lanczos above.
inline constexpr int kDenseSpectrumLimit = 2000;

// Smallest k eigenvalues of L_G = D - A.
LaplacianSpectrum laplacian_spectrum(const Graph& g, int k, bool with_vectors = false);

// Unit eigenvector of lambda_1 for a connected graph with n >= 2.  Sign is
// fixed so that the first entry of largest magnitude is positive.
std::vector<double> fiedler_vector(const Graph& g);

struct BisectionResult {
  VertexSet separator;
  VertexSet side;  // the sweep prefix achieving the best ratio cut
  std::size_t cut_edges = 0;
  double ratio = 0.0;  // cut edges / min(|side|, n - |side|)
  std::vector<double> fiedler;
};

// Fiedler sweep: best ratio-cut prefix, converted to a vertex separator by
// taking the smaller-side endpoint of every cut edge.
BisectionResult spectral_bisection(const Graph& g);

enum class SpreadingMode { Exact, Sampled };

struct SpreadingResult {
  double epsilon = 0.0;
  VertexSet minimizer;
  std::size_t subsets = 0;  // subsets evaluated
  bool exact = true;
};

// min over r-subsets S of (1/r^2) sum_{u,v in S} dist_w(u,v), divided by
// ||w||_{l_2}.  Sampled mode evaluates uniform r-subsets and so returns an
// upper bound.
SpreadingResult spreading_constant(const Graph& g, const ConformalWeight& w, int r, SpreadingMode mode,
                                   std::uint64_t seed = 0, std::size_t samples = 10000);

}  // namespace rigsep
