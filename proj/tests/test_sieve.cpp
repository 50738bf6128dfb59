#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "digitsieve/sieve.hpp"

using namespace digitsieve;

namespace {

// trial-division Lambda, independent of every library sieve
double lambda_naive(uint64_t n) {
  if (n < 2) return 0.0;
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::log(static_cast<double>(n));  // prime
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

int mu_naive(uint64_t n) {
  int m = 1;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

bool prime_naive(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("von Mangoldt classification against trial division") {
  for (uint64_t n = 1; n <= 20000; ++n) {
    VonMangoldt v = von_mangoldt_ex(n);
    CHECK(v.lambda == doctest::Approx(lambda_naive(n)).epsilon(1e-14));
    CHECK(v.is_prime == prime_naive(n));
  }
  CHECK(von_mangoldt_ex(1024).lambda == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(!von_mangoldt_ex(1024).is_prime);
  CHECK(von_mangoldt_ex(243).lambda == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(von_mangoldt_ex(1ull << 60).lambda == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt_ex(999999937).is_prime);  // 9-digit prime
  CHECK(von_mangoldt_ex(2ull * 999999937).lambda == 0.0);
  CHECK_THROWS(von_mangoldt_ex(0));
  CHECK_THROWS(von_mangoldt_ex(2000000000000000001ull));
}

TEST_CASE("run construction: primorial, gates, window flag") {
  ExcludedDigits B({7});
  SieveRun r = make_run(100, 5, B);
  CHECK(r.Pi == 30);
  CHECK(make_run(100, 13, B).Pi == 30030);
  CHECK(make_run(100, 47, B).Pi > 0);   // largest primorial fitting 64 bits
  CHECK_THROWS(make_run(100, 53, B));   // first overflowing primorial
  CHECK_THROWS(make_run(0, 5, B));
  CHECK_THROWS(make_run(300000001ull, 5, B));
  CHECK_THROWS(make_run(100, 1, B));
  // the admissible window is narrow: satisfied at x = 16 for P = 3, 5 only
  CHECK(make_run(16, 3, B).theorem_mode);
  CHECK(make_run(16, 5, B).theorem_mode);
  CHECK(!make_run(16, 7, B).theorem_mode);
  CHECK(!make_run(1000000, 5, B).theorem_mode);
  CHECK(!make_run(10, 2, B).theorem_mode);  // below the x floor
}

TEST_CASE("hand-worked weights at x = 10") {
  ExcludedDigits B({7});
  SieveRun run = make_run(10, 2, B);
  CHECK(run.Pi == 2);
  WeightArray w = build_weights(run);
  CHECK(w.ells == std::vector<uint64_t>{1, 3});
  std::vector<uint16_t> expect(11, 0);
  expect[1] = 1;   // 0^2 + 1^2
  expect[2] = 2;   // (+-1)^2 + 1^2
  expect[5] = 2;   // (+-2)^2 + 1^2
  expect[9] = 1;   // 0^2 + 3^2
  expect[10] = 4;  // (+-3)^2 + 1^2 and (+-1)^2 + 3^2
  CHECK(w.a == expect);
  CHECK(w.lattice_points == 10);
  // unrestricted count also admits ell = 0 (7 points) and ell = 2 (5 points):
  // 7 + 7 + 5 + 3 = 22, versus the coprime weighted total of 10
  CHECK(lattice_count(run) == 22);

  SSums s = s_of_x(run, w);
  double want = 2 * std::log(2.0) + 2 * std::log(5.0) + std::log(3.0);
  CHECK(s.total == doctest::Approx(want).epsilon(1e-14));
  CHECK(s.prime_only == doctest::Approx(2 * std::log(2.0) + 2 * std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("weights match a per-n two-squares scan") {
  ExcludedDigits B({0});
  SieveRun run = make_run(500, 3, B);
  WeightArray w = build_weights(run);
  // admissible ell: genuine members, coprime to 6, ell^2 <= 500
  for (uint64_t l : w.ells) {
    CHECK(is_member(l, B, DigitConvention::Genuine));
    CHECK(std::gcd(l, run.Pi) == 1);
    CHECK(l * l <= 500);
  }
  for (uint64_t n = 0; n <= 500; ++n) {
    uint64_t cnt = 0;
    for (uint64_t l = 1; l * l <= 500; ++l) {
      if (!is_member(l, B, DigitConvention::Genuine)) continue;
      if (std::gcd(l, run.Pi) != 1) continue;
      if (l * l > n) continue;
      uint64_t rest = n - l * l;
      uint64_t s = isqrt_u64(rest);
      if (s * s == rest) cnt += (s == 0) ? 1 : 2;
    }
    CHECK(w.a[n] == cnt);
  }
  uint64_t pts = 0;
  for (uint64_t n = 0; n <= 500; ++n) pts += w.a[n];
  CHECK(pts == w.lattice_points);
  CHECK_THROWS(build_weights(run, 10));  // 10-byte budget
}

TEST_CASE("S(x) is thread-count invariant and matches a straight loop") {
  ExcludedDigits B({7});
  SieveRun run = make_run(20000, 5, B);
  WeightArray w = build_weights(run);
  SSums s1 = s_of_x(run, w, 1);
  SSums s4 = s_of_x(run, w, 4);
  CHECK(s1.total == s4.total);
  CHECK(s1.prime_only == s4.prime_only);
  NeumaierSum ref, refp;
  for (uint64_t n = 2; n <= 20000; ++n) {
    if (!w.a[n]) continue;
    double lam = lambda_naive(n);
    if (lam == 0.0) continue;
    ref.add(w.a[n] * lam);
    if (prime_naive(n)) refp.add(w.a[n] * lam);
  }
  CHECK(s1.total == doctest::Approx(ref.value()).epsilon(1e-13));
  CHECK(s1.prime_only == doctest::Approx(refp.value()).epsilon(1e-13));
  WeightArray other = build_weights(make_run(100, 5, B));
  CHECK_THROWS(s_of_x(run, other));  // mismatched bounds
}

TEST_CASE("congruence rows: exact model at d = 1, hand value at d = 2") {
  ExcludedDigits B({7});
  SieveRun run = make_run(10, 2, B);
  WeightArray w = build_weights(run);
  auto rows = congruence_table(run, w, 3, true);
  CHECK(rows.size() == 3);
  CHECK(rows[0].d == 1);
  CHECK(rows[0].A_d == 10.0);
  CHECK(rows[0].M_d == 10.0);
  CHECK(rows[0].R_d == 0.0);
  CHECK(rows[0].cum_R == 0.0);
  // d = 2: A_2 = a(2) + a(10) = 6; M_2 = (7 rho_1(2) + 3 rho_3(2)) / 2 = 5
  CHECK(rows[1].A_d == 6.0);
  CHECK(rows[1].M_d == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(rows[1].R_d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1].cum_R == doctest::Approx(1.0).epsilon(1e-12));
  double ref2 = std::pow(2.0, 0.25) * std::pow(10.0, 0.5 + gamma_exponent(B) / 4.0);
  CHECK(rows[1].reference == doctest::Approx(ref2).epsilon(1e-13));
  CHECK(rows[1].ratio == doctest::Approx(rows[1].cum_R / ref2).epsilon(1e-12));
  CHECK(rows[1].A_log_d ==
        doctest::Approx(2 * std::log(2.0) + 4 * std::log(10.0)).epsilon(1e-13));
  auto nolog = congruence_table(run, w, 3, false);
  CHECK(nolog[1].A_log_d == 0.0);
  CHECK_THROWS(congruence_table(run, w, 4, false));  // 16 > x
}

TEST_CASE("congruence table is deterministic across thread counts") {
  ExcludedDigits B({7});
  SieveRun run = make_run(10000, 5, B);
  WeightArray w = build_weights(run);
  auto r1 = congruence_table(run, w, 100, true, 1);
  auto r4 = congruence_table(run, w, 100, true, 4);
  REQUIRE(r1.size() == r4.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].A_d == r4[i].A_d);
    CHECK(r1[i].M_d == r4[i].M_d);
    CHECK(r1[i].cum_R == r4[i].cum_R);
    CHECK(r1[i].A_log_d == r4[i].A_log_d);
  }
}

TEST_CASE("the four-piece identity holds pointwise") {
  // Lambda(n) = Lambda(n)[n<=U] + sum_{b|n, b<=V} mu(b) log(n/b)
  //           - sum_{uv|n, u<=U, v<=V} Lambda(u) mu(v)
  //           + sum_{uvw=n, u>U, v>V} Lambda(u) mu(v)
  const uint64_t N = 3000;
  std::vector<std::vector<uint64_t>> divs(N + 1);
  for (uint64_t d = 1; d <= N; ++d)
    for (uint64_t n = d; n <= N; n += d) divs[n].push_back(d);
  std::vector<double> Lam(N + 1);
  std::vector<int> Mu(N + 1);
  for (uint64_t n = 0; n <= N; ++n) {
    Lam[n] = n ? lambda_naive(n) : 0.0;
    Mu[n] = n ? mu_naive(n) : 0;
  }
  for (auto [U, V] : std::vector<std::pair<uint64_t, uint64_t>>{{10, 10}, {50, 7}, {2, 2}}) {
    for (uint64_t n = 1; n <= N; ++n) {
      double rhs = n <= U ? Lam[n] : 0.0;
      for (uint64_t b : divs[n])
        if (b <= V && Mu[b]) rhs += Mu[b] * std::log(static_cast<double>(n / b));
      for (uint64_t u : divs[n]) {
        if (Lam[u] == 0.0) continue;
        for (uint64_t v : divs[n / u]) {
          if (u <= U && v <= V && Mu[v]) rhs -= Lam[u] * Mu[v];
          if (u > U && v > V && Mu[v]) rhs += Lam[u] * Mu[v];
        }
      }
      CHECK(std::abs(rhs - Lam[n]) < 1e-9);
    }
  }
}

TEST_CASE("decomposition drift is tiny and the fields are consistent") {
  ExcludedDigits B({7});
  SieveRun run = make_run(2000, 3, B);
  WeightArray w = build_weights(run);
  for (auto [U, V] : std::vector<std::pair<uint64_t, uint64_t>>{{30, 20}, {2, 2}, {100, 5}}) {
    VaughanSplit v = vaughan_decompose(run, w, U, V);
    CHECK(v.U == U);
    CHECK(v.V == V);
    CHECK(v.residual_rel < 1e-9);
    CHECK(v.residual == v.sum - v.S_direct);
    CHECK(v.S_direct == doctest::Approx(s_of_x(run, w).total).epsilon(1e-13));
    CHECK(v.residual_rel ==
          std::abs(v.residual) / std::max(1.0, std::abs(v.S_direct)));
  }
  CHECK_THROWS(vaughan_decompose(run, w, 1, 20));
  CHECK_THROWS(vaughan_decompose(run, w, 30, 1));
  CHECK_THROWS(vaughan_decompose(run, w, 3000, 20));  // U > x
}

TEST_CASE("main-term comparison wiring") {
  ExcludedDigits B({7});
  SieveRun run = make_run(10000, 5, B);
  WeightArray w = build_weights(run);
  TheoremCheck t = verify_main_theorem(run, w, 10000);
  CHECK(t.kappa == Rational(5, 6));
  CHECK(t.C == constant_C(10000).value);
  CHECK(t.C_truncation == 10000);
  CHECK(t.S == s_of_x(run, w).total);
  CHECK(t.lattice_points == lattice_count(run));
  // the comparison lattice is unrestricted, so it strictly exceeds the
  // coprime-filtered weighted total
  CHECK(t.lattice_points > w.lattice_points);
  CHECK(t.main_term ==
        doctest::Approx(main_term_value(t.C, t.kappa, 5, static_cast<double>(t.lattice_points)))
            .epsilon(1e-15));
  CHECK(t.ratio == t.S / t.main_term);
  CHECK(!t.theorem_mode);
  CHECK(t.S > 0.0);
  CHECK(t.main_term > 0.0);
}
