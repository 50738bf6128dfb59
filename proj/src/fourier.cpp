#include "digitsieve/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace digitsieve {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

struct Cx {
  double re, im;
};

inline Cx cx_mul(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline Cx unit_phase(double frac) { return {std::cos(kTau * frac), std::sin(kTau * frac)}; }

}  // namespace

double normalized_digit_sum(const ExcludedDigits& B, double phi) {
  Cx w = unit_phase(phi - std::nearbyint(phi));
  Cx p = {1.0, 0.0};
  double zr = 0.0, zi = 0.0;
  for (int d = 0; d <= 9; ++d) {
    if (!B.excludes(d)) {
      zr += p.re;
      zi += p.im;
    }
    p = cx_mul(p, w);
  }
  return std::hypot(zr, zi) / (10 - B.size());
}

NormalizedSum eval_direct(int k, const ExcludedDigits& B, double theta, DigitConvention conv) {
  if (k < 1 || k > 7) throw std::invalid_argument("direct evaluation limited to k in 1..7");
  ComplexSum acc;
  if (conv == DigitConvention::Genuine) {
    uint64_t Y = pow10_u64(k);
    for (uint64_t n = 0; n < Y; ++n) {
      if (!is_member(n, B, DigitConvention::Genuine)) continue;
      Cx z = unit_phase(frac_mul(static_cast<double>(n), theta));
      acc.add(z.re, z.im);
    }
  } else {
    const auto& al = B.allowed();
    const int m = static_cast<int>(al.size());
    std::vector<uint64_t> p10(k);
    for (int i = 0; i < k; ++i) p10[i] = pow10_u64(i);
    // rotation applied when the low digit advances al[j-1] -> al[j]
    std::vector<Cx> rot0(m);
    for (int j = 1; j < m; ++j)
      rot0[j] = unit_phase(frac_mul(static_cast<double>(al[j] - al[j - 1]), theta));
    std::vector<int> idx(k, 0);
    uint64_t n = 0;
    for (int i = 0; i < k; ++i) n += static_cast<uint64_t>(al[0]) * p10[i];
    Cx z = unit_phase(frac_mul(static_cast<double>(n), theta));
    for (;;) {
      acc.add(z.re, z.im);
      int pos = 0;
      while (pos < k && idx[pos] == m - 1) ++pos;
      if (pos == k) break;
      if (pos > 0) {
        // carry: reset the low positions to the smallest digit
        uint64_t drop = 0;
        for (int i = 0; i < pos; ++i) {
          drop += static_cast<uint64_t>(al[m - 1] - al[0]) * p10[i];
          idx[i] = 0;
        }
        n -= drop;
      }
      ++idx[pos];
      n += static_cast<uint64_t>(al[idx[pos]] - al[idx[pos] - 1]) * p10[pos];
      if (pos == 0) {
        z = cx_mul(z, rot0[idx[0]]);
      } else {
        // fresh phase at every carry keeps the drift below ~8 multiplies
        z = unit_phase(frac_mul(static_cast<double>(n), theta));
      }
    }
  }
  double scale = std::pow(10.0, -k * gamma_exponent(B));
  return {acc.magnitude() * scale, k, theta};
}

NormalizedSum eval_product(int k, const ExcludedDigits& B, double theta, DigitConvention conv) {
  if (k < 1 || k > 22) throw std::invalid_argument("product evaluation limited to k in 1..22");
  if (conv == DigitConvention::Genuine && B.excludes(0))
    throw std::invalid_argument(
        "per-digit factorization requires the padded convention when 0 is excluded");
  double prod = 1.0;
  double p10 = 1.0;  // exact as a double for all i < 23
  for (int i = 0; i < k; ++i) {
    prod *= normalized_digit_sum(B, frac_mul(p10, theta));
    p10 *= 10.0;
  }
  return {prod, k, theta};
}

double eval_product_rational(int k, const ExcludedDigits& B, uint64_t a, uint64_t q,
                             double beta) {
  if (k < 1 || k > 22) throw std::invalid_argument("product evaluation limited to k in 1..22");
  if (q == 0) throw std::invalid_argument("modulus must be positive");
  uint64_t m = a % q;
  double prod = 1.0;
  double p10 = 1.0;
  for (int i = 0; i < k; ++i) {
    double phi = static_cast<double>(m) / static_cast<double>(q) + frac_mul(p10, beta);
    prod *= normalized_digit_sum(B, phi);
    m = mulmod_u64(m, 10, q);
    p10 *= 10.0;
  }
  return prod;
}

double scan_reference_exponent(const ExcludedDigits& B) {
  switch (B.size()) {
    case 1:
      return 27.0 / 77.0;
    case 2:
      return 54.0 / 125.0;
    case 3:
      return 99.0 / 200.0;
    default:
      throw std::invalid_argument("no scan reference exponent for this exclusion size");
  }
}

ScanReport scan_single_modulus(int k, const ExcludedDigits& B, uint64_t q, uint64_t beta_points,
                               int threads) {
  if (q < 1 || q > 100000) throw std::invalid_argument("modulus out of 1..1e5");
  if (beta_points < 1 || beta_points > 100000000ull)
    throw std::invalid_argument("beta grid out of range");
  double e = scan_reference_exponent(B);
  const uint64_t blk = 256;
  size_t nb = static_cast<size_t>((beta_points + blk - 1) / blk);
  std::vector<double> best(nb, 0.0);
  // beta sweeps one full period [0, 1/q) of the fractional offset
  run_blocks(nb, threads, [&](size_t bi) {
    uint64_t lo = bi * blk, hi = std::min<uint64_t>(beta_points, lo + blk);
    double mx = 0.0;
    for (uint64_t i = lo; i < hi; ++i) {
      double beta = static_cast<double>(i) /
                    (static_cast<double>(beta_points) * static_cast<double>(q));
      for (uint64_t a = 1; a <= q; ++a)
        mx = std::max(mx, eval_product_rational(k, B, a, q, beta));
    }
    best[bi] = mx;
  });
  double measured = 0.0;
  for (double v : best) measured = std::max(measured, v);
  double reference = std::pow(static_cast<double>(q), e) +
                     static_cast<double>(q) * std::pow(10.0, -k * (1.0 - e));
  return {B.str(), k, q, beta_points, measured, reference, measured / reference};
}

ScanReport scan_farey(int k, const ExcludedDigits& B, uint64_t Q, uint64_t beta_points,
                      int threads) {
  if (Q < 1 || Q > 2000) throw std::invalid_argument("denominator bound out of 1..2000");
  if (beta_points < 1 || beta_points > 100000000ull)
    throw std::invalid_argument("beta grid out of range");
  double e = scan_reference_exponent(B);
  std::vector<std::pair<uint32_t, uint32_t>> fr;  // (q, a), reduced
  for (uint64_t q = 1; q <= Q; ++q)
    for (uint64_t a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) fr.emplace_back(static_cast<uint32_t>(q), static_cast<uint32_t>(a));
  size_t nb = fr.size();
  std::vector<double> best(nb, 0.0);
  double span = 1.0 / (static_cast<double>(Q) * static_cast<double>(Q));
  run_blocks(nb, threads, [&](size_t i) {
    auto [q, a] = fr[i];
    double mx = 0.0;
    for (uint64_t j = 0; j < beta_points; ++j) {
      double beta = span * static_cast<double>(j) / static_cast<double>(beta_points);
      mx = std::max(mx, eval_product_rational(k, B, a, q, beta));
    }
    best[i] = mx;
  });
  double measured = 0.0;
  for (double v : best) measured = std::max(measured, v);
  double reference = std::pow(static_cast<double>(Q), 2.0 * e) +
                     static_cast<double>(Q) * static_cast<double>(Q) *
                         std::pow(10.0, -k * (1.0 - e));
  return {B.str(), k, Q, beta_points, measured, reference, measured / reference};
}

DecayFit small_modulus_decay(int k_min, int k_max, const ExcludedDigits& B, uint64_t q,
                             uint64_t a) {
  if (k_min < 1 || k_max > 18 || k_min > k_max)
    throw std::invalid_argument("digit range out of order");
  if (q < 2) throw std::invalid_argument("modulus must exceed 1");
  if (std::gcd(a, q) != 1) throw std::invalid_argument("numerator must be coprime to the modulus");
  uint64_t q1 = q;
  while (q1 % 2 == 0) q1 /= 2;
  while (q1 % 5 == 0) q1 /= 5;
  if (q1 <= 1)
    throw std::invalid_argument("modulus needs a factor coprime to 10 exceeding 1");
  scan_reference_exponent(B);  // same |B| <= 3 gate as the scans
  DecayFit fit;
  fit.B = B.str();
  fit.q = q;
  fit.a = a % q == 0 ? q : a % q;
  unsigned __int128 q3 = static_cast<unsigned __int128>(q) * q * q;
  for (int k = k_min; k <= k_max; ++k) {
    if (q3 >= static_cast<unsigned __int128>(pow10_u64(k))) continue;
    fit.ks.push_back(k);
    fit.values.push_back(eval_product_rational(k, B, a, q, 0.0));
  }
  if (fit.ks.size() < 2)
    throw std::invalid_argument("need at least two admissible digit lengths for the fit");
  // least squares of -log F against x = k log 10 / log q
  double lq = std::log(static_cast<double>(q));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = fit.ks.size();
  for (size_t i = 0; i < n; ++i) {
    double x = fit.ks[i] * std::numbers::ln10 / lq;
    double y = -std::log(std::max(fit.values[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double det = n * sxx - sx * sx;
  fit.c0_hat = (n * sxy - sx * sy) / det;
  fit.intercept = (sy * sxx - sx * sxy) / det;
  return fit;
}

L1Report l1_norm(int k, const ExcludedDigits& B, uint64_t grid, int threads) {
  if (k < 1 || k > 7) throw std::invalid_argument("digit length out of 1..7");
  if (grid < pow10_u64(k))
    throw std::invalid_argument("grid must resolve the oscillation scale 10^k");
  if (grid > 50000000ull) throw std::invalid_argument("grid too large");
  double e = scan_reference_exponent(B);
  const uint64_t blk = 1u << 16;
  size_t nb = static_cast<size_t>(grid / blk) + 1;  // nodes 0..grid inclusive
  std::vector<double> part(nb, 0.0);
  run_blocks(nb, threads, [&](size_t bi) {
    uint64_t lo = bi * blk, hi = std::min<uint64_t>(grid + 1, (bi + 1) * blk);
    if (lo >= hi) return;
    NeumaierSum s;
    for (uint64_t j = lo; j < hi; ++j) {
      double w = (j == 0 || j == grid) ? 0.5 : 1.0;
      double theta = static_cast<double>(j) / static_cast<double>(grid);
      s.add(w * eval_product(k, B, theta).value);
    }
    part[bi] = s.value();
  });
  NeumaierSum total;
  for (double v : part) total.add(v);
  double estimate = total.value() / static_cast<double>(grid);
  double reference = std::pow(10.0, k * (-1.0 + e));
  return {B.str(), k, grid, estimate, reference, estimate / reference};
}

}  // namespace digitsieve
