#pragma once
// The nontrivial character mod 4, root counts of nu^2 + 1 = 0 (mod d), their
// gcd-twisted variants, the Euler product constant of the singular series,
// and the digit-density factors entering the main term.

#include <cstdint>
#include <vector>

#include "digitsieve/digits.hpp"
#include "digitsieve/util.hpp"

namespace digitsieve {

// chi(n): 0 for even n, +1 for n = 1 (mod 4), -1 for n = 3 (mod 4).
int chi(long long n);

// rho(d) = #{nu mod d : nu^2 + 1 = 0 (mod d)}. Multiplicative; per prime
// power: rho(2) = 1, rho(2^e) = 0 for e >= 2, rho(p^e) = 1 + chi(p) for odd p.
uint64_t rho(uint64_t d);
uint64_t rho_brute(uint64_t d);  // literal scan of all residues, d <= 2^26

// Prime-power root count three ways, for cross-checking: closed form /
// residue scan / Hensel climb from the base prime.
uint64_t rho_prime_power(uint64_t p, int e);
uint64_t rho_prime_power_brute(uint64_t p, int e);   // p^e <= 2^22
uint64_t rho_prime_power_lifted(uint64_t p, int e);  // p^e <= 2^62

// Largest r with r^2 | d.
uint64_t square_part_root(uint64_t d);

// rho_ell(d) = gcd(r(d), ell) * rho(d / gcd(d, ell^2)), the weighted root
// count for the arithmetic progression ell (mod d) sieve weights. At primes:
// rho_ell(p) = 1 + chi(p) when p does not divide ell, and 1 when p | ell.
uint64_t rho_ell(uint64_t ell, uint64_t d);
uint64_t rho_ell_brute(uint64_t ell, uint64_t d);  // counts nu with nu^2 + ell^2 = 0 (mod d)

// (sum_{d <= y} rho_ell(d)/d) / (log^2 y * prod_{p | ell} (1 + 7/sqrt(p))).
// Bounded uniformly in ell; exercised as a sanity check, not a theorem.
double average_rho_check(uint64_t ell, uint64_t y);

// sum_{d <= V} mu(d) rho_ell(d) / d. Exactly 1 at V = 1 and 1/2 at V = 2
// (ell odd); tends to 0 as V grows.
double mobius_rho_partial_sum(uint64_t ell, uint64_t V, int threads = 1);

struct ConstantC {
  double value;
  uint64_t truncation;
  double tail_bound;  // 1 / (truncation - 1), crude envelope of the dropped tail
};

// C = prod_p (1 - chi(p) / ((p-1)(p - chi(p)))) over p <= p_max. The factor
// is 1 at p = 2 and 9/8 at p = 3.
ConstantC constant_C(uint64_t p_max, int threads = 1);
double constant_C_factor(uint64_t p);

// Density correction for a single restricted digit a0 entering via the units
// mod 10: 10/9 when (a0, 10) != 1, else 5/6.
Rational kappa1(int a0);

// General version for 1 <= |B| <= 3:
// (10/phi(10)) * (phi(10) + #{a in B : (a,10) != 1} - |B|) / (10 - |B|).
Rational kappa_B(const ExcludedDigits& B);

// Main term (4 C kappa / pi) * (e^-gamma / log P) * lattice_count.
double main_term_value(double C, const Rational& kappa, uint64_t P, double lattice_count);

}  // namespace digitsieve
