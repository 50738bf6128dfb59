#pragma once
// Normalized exponential sums over digit-restricted sets:
//   F_Y(theta) = Y^{-gamma_B} | sum_{n < Y, n in A} e(n theta) |,  Y = 10^k.
// Under the padded convention F factors exactly into per-digit terms, which
// is the O(k) evaluation path; the literal member-by-member sum is kept as
// the oracle. The factorization fails under the genuine convention when 0 is
// excluded (the two conventions count different sets there).

#include <cstdint>
#include <string>
#include <vector>

#include "digitsieve/digits.hpp"

namespace digitsieve {

struct NormalizedSum {
  double value;
  int k;
  double theta;
};

// |sum over kept digits d of e(d phi)| / (10 - |B|); the single-digit factor.
double normalized_digit_sum(const ExcludedDigits& B, double phi);

// Literal sum over members, k <= 7. Padded walks the digit odometer with an
// incremental phase (refreshed by sincos at every carry, so at most 8
// rotation multiplies accumulate error between refreshes); terms are
// compensated-summed.
NormalizedSum eval_direct(int k, const ExcludedDigits& B, double theta,
                          DigitConvention conv = DigitConvention::Padded);

// Product of k digit factors at phases 10^i theta; O(k). Genuine convention
// accepted only when 0 is not excluded (the conventions then agree).
NormalizedSum eval_product(int k, const ExcludedDigits& B, double theta,
                           DigitConvention conv = DigitConvention::Padded);

// Same product with theta = a/q + beta evaluated through exact modular
// arithmetic: the i-th phase is (a 10^i mod q)/q + 10^i beta, so no drift
// accumulates across digits even for k near 20.
double eval_product_rational(int k, const ExcludedDigits& B, uint64_t a, uint64_t q,
                             double beta = 0.0);

// 27/77, 54/125, 99/200 for |B| = 1, 2, 3; no reference exists beyond that.
double scan_reference_exponent(const ExcludedDigits& B);

struct ScanReport {
  std::string B;
  int k;
  uint64_t q_or_Q;
  uint64_t grid;
  double measured;
  double reference;
  double ratio;
};

// max over a in 1..q and a beta grid of F(a/q + beta), beta spanning one
// period [0, 1/q); reference q^e + q 10^{-k(1-e)}.
ScanReport scan_single_modulus(int k, const ExcludedDigits& B, uint64_t q,
                               uint64_t beta_points, int threads = 1);

// max over all reduced fractions a/q with q <= Q and a beta grid on [0, 1/Q^2);
// reference Q^{2e} + Q^2 10^{-k(1-e)}.
ScanReport scan_farey(int k, const ExcludedDigits& B, uint64_t Q, uint64_t beta_points,
                      int threads = 1);

struct DecayFit {
  std::string B;
  uint64_t q;
  uint64_t a;
  std::vector<int> ks;
  std::vector<double> values;  // F at a/q for each k
  double c0_hat;               // fitted decay rate in exp(-c0 k log 10 / log q)
  double intercept;
};

// Fits -log F(a/q) against k log 10 / log q over k in [k_min, k_max] with
// q^3 < 10^k. Requires gcd(a, q) = 1 and q with some factor coprime to 10
// left after stripping 2s and 5s.
DecayFit small_modulus_decay(int k_min, int k_max, const ExcludedDigits& B, uint64_t q,
                             uint64_t a);

struct L1Report {
  std::string B;
  int k;
  uint64_t grid;
  double estimate;
  double reference;  // 10^{k(-1+e)}
  double ratio;
};

// Trapezoid estimate of the L1 norm of F over [0,1]; grid must resolve the
// 10^k oscillation scale (grid >= 10^k).
L1Report l1_norm(int k, const ExcludedDigits& B, uint64_t grid, int threads = 1);

}  // namespace digitsieve
