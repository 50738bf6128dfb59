#pragma once
// The sieve side: weights a(n) counting representations n = m^2 + ell^2 with
// m ranging over all of Z (m = 0 contributes once, |m| > 0 twice), ell a
// genuine-convention member of the digit-restricted set with (ell, Pi) = 1
// for Pi the primorial of P. ell = 0 never survives since gcd(0, Pi) = Pi.
// On top: S(x) = sum a(n) Lambda(n), congruence sums A_d vs their model M_d,
// a four-piece Vaughan decomposition of S, and the main-term comparison.

#include <cstdint>
#include <string>
#include <vector>

#include "digitsieve/digits.hpp"
#include "digitsieve/quadratic.hpp"
#include "digitsieve/util.hpp"

namespace digitsieve {

struct SieveRun {
  uint64_t x;
  uint32_t P;
  uint64_t Pi;  // primorial of P
  ExcludedDigits B;
  bool theorem_mode;  // (log log x)^4 <= log P <= sqrt(log x)/log log x
};

SieveRun make_run(uint64_t x, uint32_t P, const ExcludedDigits& B);

struct VonMangoldt {
  double lambda;
  bool is_prime;
};

// Lambda(n) for any n up to 2e18: strips n to the largest perfect-power base
// and tests it with deterministic Miller-Rabin.
VonMangoldt von_mangoldt_ex(uint64_t n);

struct WeightArray {
  uint64_t x;
  std::vector<uint16_t> a;      // a[n] for n <= x
  std::vector<uint64_t> ells;   // the admissible ell <= sqrt(x), ascending
  uint64_t lattice_points;      // sum over ell of (2 floor(sqrt(x-ell^2)) + 1)
};

// Dense weight array; refuses to allocate past budget_bytes.
WeightArray build_weights(const SieveRun& run, uint64_t budget_bytes = 2500000000ull);

// The unrestricted lattice sum over all member ell (0 included, no
// coprimality condition): the comparison quantity the main-term prediction
// scales, whose (ell, Pi) = 1 thinning the Mertens factor models.
uint64_t lattice_count(const SieveRun& run);

struct SSums {
  double total;       // sum a(n) Lambda(n), n <= x
  double prime_only;  // the subsum over prime n
};

// Lambda by linear sieve for x <= 1e7, per-n classification above.
SSums s_of_x(const SieveRun& run, const WeightArray& w, int threads = 1);

struct CongruenceRow {
  uint64_t d;
  double A_d;        // sum_{n <= x, d | n} a(n), exact integer in a double
  double M_d;        // (1/d) sum_ell (2 floor(sqrt(x-ell^2)) + 1) rho_ell(d)
  double R_d;        // A_d - M_d
  double cum_R;      // sum_{e <= d} |R_e|
  double reference;  // d^{1/4} x^{1/2 + gamma_B/4}
  double ratio;      // cum_R / reference
  double A_log_d;    // sum_{n <= x, d | n} a(n) log n, when requested
};

// Rows d = 1..D; requires D^2 <= x. At d = 1, R_1 = 0 identically (the model
// is exact there).
std::vector<CongruenceRow> congruence_table(const SieveRun& run, const WeightArray& w,
                                            uint64_t D, bool with_log, int threads = 1);

struct VaughanSplit {
  double S_direct;  // sum a(n) Lambda(n) computed straight
  double S1;        // n <= U part
  double S2;        //  mu_{<=V} * log convolution part
  double S3;        // -(Lambda_{<=U} * mu_{<=V} * 1) part
  double S4;        // bilinear tail part
  double sum;       // S1 + S2 + S3 + S4
  double residual;  // sum - S_direct
  double residual_rel;
  uint64_t U, V;
};

// Exact identity for every n > U when U, V >= 1; the four pieces are
// evaluated independently of S_direct, so the residual measures real
// floating-point drift only. Requires x <= 1e7, U, V >= 2.
VaughanSplit vaughan_decompose(const SieveRun& run, const WeightArray& w, uint64_t U,
                               uint64_t V);

struct TheoremCheck {
  double S;
  double main_term;
  double ratio;  // S / main_term
  bool theorem_mode;
  double prime_only;
  uint64_t lattice_points;  // unrestricted count from lattice_count
  double C;
  Rational kappa;
  uint64_t C_truncation;
};

// Compares S(x) against (4 C kappa_B / pi)(e^-gamma / log P) L with L the
// UNRESTRICTED lattice count: the coprimality thinning of S is exactly what
// the kappa and Mertens factors model, so scaling the coprime count instead
// would apply the restriction twice.
TheoremCheck verify_main_theorem(const SieveRun& run, const WeightArray& w,
                                 uint64_t C_truncation, int threads = 1);

}  // namespace digitsieve
