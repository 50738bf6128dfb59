#pragma once
// Moment bounds for the digit-restricted exponential sums via transfer
// matrices. States are digit windows of length J; the matrix entry weights a
// window shift by G(window)^t, where G is a certified upper bound for the
// sup of the normalized digit sum over phases whose leading digits form the
// window. The Perron root lambda then bounds sum_a F(a/10^k)^t growth, and
// certification (at t = 1, J = 2) means lambda stays below 10^{54/125} for
// every excluded pair resp. 10^{99/200} for every excluded triple.

#include <cstdint>
#include <string>
#include <vector>

#include "digitsieve/digits.hpp"

namespace digitsieve {

struct GFactor {
  std::vector<int> window;  // digits t_0..t_J, most significant phase digit first
  double value;             // certified upper bound, always <= 1
  double half_width;        // gamma ranges over [0, half_width]
  int grid_points;
  double margin;  // Lipschitz slack added on top of the grid max
};

// sup over gamma in [0, 10^{-J-1}] of the normalized digit sum at
// beta = sum t_j 10^{-j-1} + gamma, bounded by grid max + L h / 2 with
// L = 2 pi (sum of kept digits) / (10 - |B|), clamped at 1. gamma is the
// phase mass of the digits past the window, which is always nonnegative, so
// the window is one-sided; gamma = 0 is the first grid point, making the
// all-zero window return exactly 1.
GFactor g_factor(const ExcludedDigits& B, const std::vector<int>& window, int grid_points);

// Row-stochastic-shaped sparse matrix in CSR: dimension 10^J, exactly ten
// entries per row. Row r encodes the trailing window digits, the entry for
// leading digit a sits at column a + 10 (r mod 10^{J-1}) and carries
// G(a, digits of r)^t.
struct TransferMatrix {
  int J;
  double t;
  int grid_points;
  std::string B;
  size_t dim;
  std::vector<size_t> row_ptr;
  std::vector<uint32_t> col;
  std::vector<double> val;
};

TransferMatrix build_transfer_matrix(const ExcludedDigits& B, double t, int J, int grid_points,
                                     int threads = 1);

struct EigenCertificate {
  std::string B;
  int d;  // |B|
  int J;
  double t;
  int grid_points;
  double lambda_lower;  // Collatz-Wielandt bracket, lower
  double lambda_upper;  // and upper; true Perron root sits inside
  uint64_t iterations;
  double threshold;
  double margin;  // threshold - lambda_upper
  bool verdict;   // lambda_upper < threshold
};

// Power iteration with two-sided Collatz-Wielandt brackets, tracked
// monotonically; states whose outgoing mass vanishes are pruned first so the
// ratios stay finite. Converges when (upper-lower)/lower <= tol; throws
// after max_iter.
EigenCertificate dominant_eigenvalue(const TransferMatrix& M, double tol = 1e-10,
                                     uint64_t max_iter = 100000);

// 10^{54/125} for pairs, 10^{99/200} for triples.
double certification_threshold(int d);

// All size-d subsets of 0..9 in lexicographic order.
std::vector<std::vector<int>> digit_subsets(int d);

// Certifies every size-d exclusion set — 45 pairs or 120 triples — against
// the matching threshold (or an explicit one); the certified setting is
// J = 2, t = 1 for both sizes.
std::vector<EigenCertificate> certify_all(int d, int J, double t, double threshold,
                                          int grid_points, int threads = 1);

// sum_{a < 10^k} F(a / 10^k)^t by direct product evaluation; the quantity the
// eigenvalue bounds from above by dim * lambda^k (up to constants), k <= 6.
double moment_sum_oracle(int k, const ExcludedDigits& B, double t, int threads = 1);

}  // namespace digitsieve
