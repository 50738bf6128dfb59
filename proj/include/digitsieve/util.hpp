#pragma once
// Shared numeric plumbing: exact rationals, compensated summation, prime
// sieves, 64-bit modular arithmetic, deterministic block-parallel execution.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace digitsieve {

// Reduced fraction, denominator kept positive.
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

// Neumaier's compensated sum; the correction term also catches addends larger
// than the running sum, so the result is accurate to O(eps * |total|).
struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

struct ComplexSum {
  NeumaierSum re, im;
  void add(double r, double i) {
    re.add(r);
    im.add(i);
  }
  double magnitude() const { return std::hypot(re.value(), im.value()); }
};

// frac(n * theta) in [-1/2, 1/2]. The fma recovers the rounding error of the
// product, so the reduction keeps ~1 ulp accuracy even for n near 2^53.
inline double frac_mul(double n, double theta) {
  double p = n * theta;
  double e = std::fma(n, theta, -p);
  return (p - std::nearbyint(p)) + e;
}

uint64_t pow10_u64(int k);  // k in [0, 19]
uint64_t isqrt_u64(uint64_t n);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);  // requires gcd(a, m) = 1
bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin over the full 64-bit range

std::vector<uint32_t> primes_upto(uint32_t n);
// All primes in [lo, hi), ascending; base_primes must cover sqrt(hi).
void primes_in_segment(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& base_primes,
                       std::vector<uint64_t>& out);

struct SpfSieve {
  std::vector<uint32_t> spf;  // smallest prime factor; spf[0] = spf[1] = 0
  std::vector<int8_t> mu;     // Moebius function
};
SpfSieve linear_sieve(uint32_t n);

struct PrimePower {
  uint64_t p;
  int e;
};
std::vector<PrimePower> factorize(uint64_t n);  // trial division, n <= ~1e12 practical

// Runs fn(0), ..., fn(nblocks - 1), distributing block indices over `threads`
// workers via an atomic counter. Callers keep per-block result slots and
// combine them in block order afterwards, which makes every reduction
// independent of the thread count and of scheduling.
void run_blocks(size_t nblocks, int threads, const std::function<void(size_t)>& fn);

std::string fmt_double(double v);  // %.17g, round-trip exact

}  // namespace digitsieve
