#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "digitsieve/quadratic.hpp"

using namespace digitsieve;

TEST_CASE("character mod 4") {
  CHECK(chi(1) == 1);
  CHECK(chi(3) == -1);
  CHECK(chi(2) == 0);
  CHECK(chi(0) == 0);
  for (long long n = 0; n < 200; ++n) {
    CHECK(chi(n) == chi(n + 4));
    if (n % 2 == 0) CHECK(chi(n) == 0);
  }
  // completely multiplicative on odd arguments
  for (long long m = 1; m < 60; m += 2)
    for (long long n = 1; n < 60; n += 2) CHECK(chi(m * n) == chi(m) * chi(n));
}

TEST_CASE("root counts match the literal residue scan") {
  for (uint64_t d = 1; d <= 3000; ++d) CHECK(rho(d) == rho_brute(d));
  CHECK(rho(1) == 1);
  CHECK(rho(2) == 1);
  CHECK(rho(4) == 0);
  CHECK(rho(5) == 2);
  CHECK(rho(13) == 2);
  CHECK(rho(65) == 4);   // 2 * 2
  CHECK(rho(25) == 2);
  CHECK(rho(3) == 0);
  CHECK(rho(9) == 0);
  CHECK(rho(50) == 2);   // rho(2) * rho(25)
  CHECK(rho(4294967295ull) == 0);  // 3 divides it and 3 = 3 (mod 4)
}

TEST_CASE("prime power root count: closed form, scan, and Hensel climb agree") {
  const uint64_t ps[] = {2, 3, 5, 7, 13, 17, 29, 101};
  for (uint64_t p : ps) {
    for (int e = 1;; ++e) {
      long double size = std::pow(static_cast<long double>(p), e);
      if (size > 4194304.0L) break;  // brute limit 2^22
      uint64_t closed = rho_prime_power(p, e);
      CHECK(closed == rho_prime_power_brute(p, e));
      CHECK(closed == rho_prime_power_lifted(p, e));
    }
  }
  // beyond the scan range the climb still matches the closed form
  uint64_t p = 1000001;
  while (!(is_prime_u64(p) && p % 4 == 1)) ++p;  // first 1 mod 4 prime past 1e6
  for (int e = 1; e <= 3; ++e)
    CHECK(rho_prime_power_lifted(p, e) == rho_prime_power(p, e));
  uint64_t q = 1000001;
  while (!(is_prime_u64(q) && q % 4 == 3)) ++q;
  CHECK(rho_prime_power_lifted(q, 2) == 0);
}

TEST_CASE("square part root") {
  CHECK(square_part_root(1) == 1);
  CHECK(square_part_root(4) == 2);
  CHECK(square_part_root(12) == 2);
  CHECK(square_part_root(72) == 6);
  CHECK(square_part_root(49) == 7);
  CHECK(square_part_root(100) == 10);
  for (uint64_t d = 1; d <= 500; ++d) {
    uint64_t r = square_part_root(d);
    CHECK(d % (r * r) == 0);
    for (uint64_t s = r + 1; s * s <= d; ++s) CHECK(d % (s * s) != 0);
  }
}

TEST_CASE("gcd-twisted root counts match the shifted-square scan") {
  for (uint64_t ell = 1; ell <= 30; ++ell)
    for (uint64_t d = 1; d <= 300; ++d) CHECK(rho_ell(ell, d) == rho_ell_brute(ell, d));
  // spot values worked by hand
  CHECK(rho_ell(10, 25) == 5);
  CHECK(rho_ell(5, 25) == 5);
  CHECK(rho_ell(2, 8) == 2);
  CHECK(rho_ell(1, 5) == 2);
  // larger arguments stay consistent
  CHECK(rho_ell(97, 97 * 97) == rho_ell_brute(97, 97 * 97));
  CHECK(rho_ell(1000, 4096) == rho_ell_brute(1000, 4096));
}

TEST_CASE("at primes the twist collapses to 1 + chi or 1") {
  uint64_t ell = 15;
  for (uint64_t p : primes_upto(1000)) {
    uint64_t expect = (ell % p == 0) ? 1 : static_cast<uint64_t>(1 + (p == 2 ? 0 : chi(p)));
    CHECK(rho_ell(ell, p) == expect);
  }
}

TEST_CASE("mobius-weighted partial sums") {
  CHECK(mobius_rho_partial_sum(1, 1) == 1.0);
  CHECK(mobius_rho_partial_sum(1, 2) == 0.5);
  CHECK(mobius_rho_partial_sum(15, 1) == 1.0);
  double s = mobius_rho_partial_sum(1, 20000);
  CHECK(std::abs(s) < 1.0);
  // deterministic across thread counts
  CHECK(mobius_rho_partial_sum(1, 20000, 1) == mobius_rho_partial_sum(1, 20000, 4));
}

TEST_CASE("Euler product factors") {
  CHECK(constant_C_factor(2) == 1.0);
  CHECK(constant_C_factor(3) == 1.125);
  CHECK(constant_C_factor(5) == doctest::Approx(15.0 / 16.0).epsilon(1e-16));
  CHECK(constant_C_factor(7) == doctest::Approx(49.0 / 48.0).epsilon(1e-16));
  CHECK(constant_C_factor(13) == doctest::Approx(143.0 / 144.0).epsilon(1e-16));
}

TEST_CASE("Euler product against a sequential long double oracle") {
  uint64_t p_max = 200000;
  long double prod = 1.0L;
  for (uint64_t p : primes_upto(p_max)) {
    long double c = chi(static_cast<long long>(p));
    prod *= 1.0L - c / ((static_cast<long double>(p) - 1) * (static_cast<long double>(p) - c));
  }
  ConstantC got = constant_C(p_max);
  CHECK(got.value == doctest::Approx(static_cast<double>(prod)).epsilon(1e-14));
  CHECK(got.truncation == p_max);
  CHECK(got.tail_bound == doctest::Approx(1.0 / (p_max - 1)).epsilon(1e-16));
  // bitwise agreement across thread counts
  CHECK(constant_C(p_max, 1).value == constant_C(p_max, 3).value);
  // truncation stability: successive cutoffs agree far better than the envelope
  CHECK(std::abs(constant_C(200000).value - constant_C(1000000).value) < 1e-5);
}

TEST_CASE("digit density corrections") {
  for (int b : {0, 2, 4, 5, 6, 8}) CHECK(kappa1(b) == Rational(10, 9));
  for (int b : {1, 3, 7, 9}) CHECK(kappa1(b) == Rational(5, 6));
  CHECK_THROWS(kappa1(10));

  CHECK(kappa_B(ExcludedDigits({7})) == Rational(5, 6));
  CHECK(kappa_B(ExcludedDigits({0})) == Rational(10, 9));
  CHECK(kappa_B(ExcludedDigits({1, 3})) == Rational(5, 8));
  CHECK(kappa_B(ExcludedDigits({0, 5})) == Rational(5, 4));
  CHECK(kappa_B(ExcludedDigits({1, 2, 3})) == Rational(5, 7));
  for (int b = 0; b <= 9; ++b) CHECK(kappa_B(ExcludedDigits({b})) == kappa1(b));
  CHECK_THROWS(kappa_B(ExcludedDigits({1, 2, 3, 4})));
}

TEST_CASE("main term recomputes from its pieces") {
  double C = 1.3728;
  Rational kap(5, 6);
  uint64_t P = 97;
  double lattice = 123456.0;
  double got = main_term_value(C, kap, P, lattice);
  double expect = 4.0 * C * (5.0 / 6.0) / std::numbers::pi * 0.561459483566885 /
                  std::log(static_cast<double>(P)) * lattice;
  CHECK(got == doctest::Approx(expect).epsilon(1e-15));
  CHECK_THROWS(main_term_value(C, kap, 2, lattice));  // log P too small guard
}

TEST_CASE("averaged root density stays bounded") {
  for (uint64_t ell : {1ull, 6ull, 15ull, 97ull}) {
    double v = average_rho_check(ell, 10000);
    CHECK(v > 0.0);
    CHECK(v < 50.0);
  }
}
