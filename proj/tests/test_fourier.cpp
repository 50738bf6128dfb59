#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "digitsieve/fourier.hpp"

using namespace digitsieve;

namespace {

// dead-simple oracle: long double phases, term by term, no incremental tricks
double direct_oracle(int k, const ExcludedDigits& B, double theta, DigitConvention conv) {
  const long double tau = 2.0L * std::numbers::pi_v<long double>;
  std::complex<long double> z{0.0L, 0.0L};
  uint64_t Y = pow10_u64(k);
  for (uint64_t n = 0; n < Y; ++n) {
    bool in = conv == DigitConvention::Padded ? is_member(n, B, conv, k) : is_member(n, B, conv);
    if (!in) continue;
    long double p = static_cast<long double>(n) * static_cast<long double>(theta);
    p -= std::floor(p);
    z += std::complex<long double>(std::cos(tau * p), std::sin(tau * p));
  }
  long double scale = std::pow(10.0L, -static_cast<long double>(k) *
                                          static_cast<long double>(gamma_exponent(B)));
  return static_cast<double>(std::abs(z) * scale);
}

double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

}  // namespace

TEST_CASE("single digit factor: unit at zero, periodic, even, a hand value") {
  ExcludedDigits B({1, 3});
  CHECK(normalized_digit_sum(B, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double phi : {0.1, 0.37, 0.77}) {
    double f = normalized_digit_sum(B, phi);
    CHECK(f == doctest::Approx(normalized_digit_sum(B, phi + 1.0)).epsilon(1e-12));
    CHECK(f == doctest::Approx(normalized_digit_sum(B, -phi)).epsilon(1e-12));
    CHECK(f <= 1.0 + 1e-12);
    CHECK(f >= 0.0);
  }
  // at phi = 1/2 the kept digits contribute (-1)^d: 5 evens minus 3 odds over 8
  CHECK(normalized_digit_sum(B, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("direct evaluation matches the term-by-term oracle") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> thetas = {0.0, 1.0 / 3.0, 0.5, 1e-9, 0.9999999};
  for (int i = 0; i < 8; ++i) thetas.push_back(U(rng));
  for (const auto& ds : {std::vector<int>{7}, {0}, {1, 3}}) {
    ExcludedDigits B(ds);
    for (int k : {1, 2, 3, 4}) {
      for (double th : thetas) {
        CHECK(eval_direct(k, B, th, DigitConvention::Padded).value ==
              doctest::Approx(direct_oracle(k, B, th, DigitConvention::Padded)).epsilon(1e-11));
        CHECK(eval_direct(k, B, th, DigitConvention::Genuine).value ==
              doctest::Approx(direct_oracle(k, B, th, DigitConvention::Genuine)).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("padded and genuine direct sums coincide exactly when 0 is allowed") {
  ExcludedDigits B({7});
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    double th = U(rng);
    double p = eval_direct(3, B, th, DigitConvention::Padded).value;
    double g = eval_direct(3, B, th, DigitConvention::Genuine).value;
    CHECK(p == doctest::Approx(g).epsilon(1e-12));
  }
  // ... and differ when 0 is excluded: at theta = 0 the sums are plain counts
  ExcludedDigits B0({0});
  CHECK(eval_direct(2, B0, 0.0, DigitConvention::Genuine).value ==
        doctest::Approx(90.0 / 81.0).epsilon(1e-13));
  CHECK(eval_direct(2, B0, 0.0, DigitConvention::Padded).value ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("product factorization equals the direct sum") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> thetas = {0.0, 0.123456789, 1.0 / 3.0, 0.7071067811865476, 1e-9};
  for (int i = 0; i < 6; ++i) thetas.push_back(U(rng));
  for (const auto& ds : {std::vector<int>{7}, {0}, {1, 3}, {0, 5}, {1, 2, 3}}) {
    ExcludedDigits B(ds);
    for (int k : {1, 2, 4, 6}) {
      for (double th : thetas) {
        double d = eval_direct(k, B, th, DigitConvention::Padded).value;
        double p = eval_product(k, B, th, DigitConvention::Padded).value;
        CHECK(std::abs(d - p) / std::max(1.0, std::abs(d)) < 1e-10);
      }
    }
  }
}

TEST_CASE("factorization rejects the genuine convention when 0 is excluded") {
  CHECK_THROWS(eval_product(3, ExcludedDigits({0}), 0.25, DigitConvention::Genuine));
  // but accepts it when the conventions agree
  double a = eval_product(3, ExcludedDigits({7}), 0.25, DigitConvention::Genuine).value;
  double b = eval_product(3, ExcludedDigits({7}), 0.25, DigitConvention::Padded).value;
  CHECK(a == b);
}

TEST_CASE("rational-phase product equals the plain product where both are exact") {
  ExcludedDigits B({7});
  // theta = 3/8 is an exact double, and every 10^i * theta reduces exactly
  for (int k : {1, 4, 10, 18}) {
    double plain = eval_product(k, B, 0.375).value;
    double rat = eval_product_rational(k, B, 3, 8);
    CHECK(plain == doctest::Approx(rat).epsilon(1e-13));
  }
  // beta-only path: q = 1, a = 0 reduces to the plain product at theta = beta
  for (double beta : {0.0, 0.2, 0.0001}) {
    CHECK(eval_product_rational(5, B, 0, 1, beta) ==
          doctest::Approx(eval_product(5, B, beta).value).epsilon(1e-12));
  }
  // a/q + beta splitting agrees with the merged angle at small k
  CHECK(eval_product_rational(4, B, 1, 7, 0.001) ==
        doctest::Approx(eval_product(4, B, 1.0 / 7.0 + 0.001).value).epsilon(1e-9));
}

TEST_CASE("fractional multiply against an exact dyadic oracle") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t num = rng() & ((1ull << 40) - 1);
    double theta = static_cast<double>(num) / static_cast<double>(1ull << 40);
    uint64_t n = rng() % 1000000000000000ull;  // < 2^53, exact as a double
    unsigned __int128 prod = static_cast<unsigned __int128>(num) * n;
    double exact_frac =
        static_cast<double>(static_cast<uint64_t>(prod & ((1ull << 40) - 1))) /
        static_cast<double>(1ull << 40);
    double got = frac_mul(static_cast<double>(n), theta);
    CHECK(dist_to_int(got - exact_frac) < 1e-13);
  }
}

TEST_CASE("reference exponents and their gate") {
  CHECK(scan_reference_exponent(ExcludedDigits({7})) == doctest::Approx(27.0 / 77.0));
  CHECK(scan_reference_exponent(ExcludedDigits({0, 5})) == doctest::Approx(54.0 / 125.0));
  CHECK(scan_reference_exponent(ExcludedDigits({1, 2, 3})) == doctest::Approx(99.0 / 200.0));
  CHECK_THROWS(scan_reference_exponent(ExcludedDigits({1, 2, 3, 4})));
}

TEST_CASE("modulus scan: deterministic, bounded below by sampled points") {
  ExcludedDigits B({7});
  ScanReport r1 = scan_single_modulus(3, B, 7, 32, 1);
  ScanReport r4 = scan_single_modulus(3, B, 7, 32, 4);
  CHECK(r1.measured == r4.measured);  // bitwise, any thread count
  CHECK(r1.B == "{7}");
  CHECK(r1.k == 3);
  CHECK(r1.q_or_Q == 7);
  CHECK(r1.grid == 32);
  CHECK(r1.ratio == r1.measured / r1.reference);
  // theta = q/q wraps to 0 where F = 1, so the maximum is at least 1
  CHECK(r1.measured >= 1.0 - 1e-12);
  CHECK(r1.measured >= eval_product_rational(3, B, 1, 7) - 1e-12);
  CHECK(r1.reference == doctest::Approx(std::pow(7.0, 27.0 / 77.0) +
                                        7.0 * std::pow(10.0, -3 * (1 - 27.0 / 77.0))));
  CHECK_THROWS(scan_single_modulus(3, B, 0, 32));
  CHECK_THROWS(scan_single_modulus(3, B, 200000, 32));
}

TEST_CASE("farey scan: deterministic and consistent with its reference") {
  ExcludedDigits B({1, 3});
  ScanReport r1 = scan_farey(4, B, 5, 8, 1);
  ScanReport r3 = scan_farey(4, B, 5, 8, 3);
  CHECK(r1.measured == r3.measured);
  CHECK(r1.measured >= eval_product_rational(4, B, 1, 1) - 1e-12);  // includes 1/1 -> F(0)=1
  double e = 54.0 / 125.0;
  CHECK(r1.reference ==
        doctest::Approx(std::pow(5.0, 2 * e) + 25.0 * std::pow(10.0, -4 * (1 - e))));
  CHECK_THROWS(scan_farey(4, B, 5000, 8));
}

TEST_CASE("small modulus decay fit") {
  ExcludedDigits B({7});
  DecayFit fit = small_modulus_decay(1, 12, B, 3, 1);
  CHECK(fit.ks.front() == 2);  // k = 1 dropped: 10 < q^3 = 27
  CHECK(fit.ks.back() == 12);
  CHECK(fit.c0_hat > 0.1);
  // 10 = 1 (mod 3), so every digit factor is the same and F is geometric
  double f = fit.values[1] / fit.values[0];
  for (size_t i = 1; i < fit.values.size(); ++i)
    CHECK(fit.values[i] / fit.values[i - 1] == doctest::Approx(f).epsilon(1e-10));
  CHECK(fit.values[0] == doctest::Approx(std::pow(std::sqrt(3.0) / 9.0, 2)).epsilon(1e-12));

  CHECK_THROWS(small_modulus_decay(1, 12, B, 20, 1));  // 20 strips to 1
  CHECK_THROWS(small_modulus_decay(1, 12, B, 9, 3));   // gcd(a, q) != 1
  CHECK_THROWS(small_modulus_decay(5, 4, B, 3, 1));    // empty range
  CHECK_THROWS(small_modulus_decay(1, 2, B, 21, 1));   // only one admissible k
}

TEST_CASE("L1 estimate equals an in-test trapezoid and is thread stable") {
  ExcludedDigits B({7});
  uint64_t grid = 1000;
  L1Report r = l1_norm(2, B, grid, 1);
  long double acc = 0.0L;
  for (uint64_t j = 0; j <= grid; ++j) {
    double w = (j == 0 || j == grid) ? 0.5 : 1.0;
    acc += static_cast<long double>(
        w * eval_product(2, B, static_cast<double>(j) / static_cast<double>(grid)).value);
  }
  CHECK(r.estimate == doctest::Approx(static_cast<double>(acc / grid)).epsilon(1e-13));
  CHECK(r.estimate > 0.0);
  CHECK(r.reference == doctest::Approx(std::pow(10.0, 2 * (27.0 / 77.0 - 1.0))));
  CHECK(l1_norm(2, B, grid, 3).estimate == r.estimate);
  CHECK_THROWS(l1_norm(3, B, 999));  // grid below the oscillation scale
}

TEST_CASE("argument gates") {
  ExcludedDigits B({7});
  CHECK_THROWS(eval_direct(0, B, 0.1));
  CHECK_THROWS(eval_direct(8, B, 0.1));
  CHECK_THROWS(eval_product(0, B, 0.1));
  CHECK_THROWS(eval_product(23, B, 0.1));
  CHECK_THROWS(eval_product_rational(5, B, 1, 0));
  CHECK(std::isfinite(eval_product(22, B, 0.318).value));
}

TEST_CASE("compensated sums recover catastrophic cancellation") {
  NeumaierSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);
  NeumaierSum t;
  for (int i = 0; i < 50; ++i) t.add(0.1);
  CHECK(t.value() == doctest::Approx(5.0).epsilon(1e-15));
  ComplexSum c;
  c.add(3.0, 0.0);
  c.add(0.0, 4.0);
  CHECK(c.magnitude() == doctest::Approx(5.0).epsilon(1e-15));
}
