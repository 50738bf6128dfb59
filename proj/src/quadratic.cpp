#include "digitsieve/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace digitsieve {

int chi(long long n) {
  long long r = ((n % 4) + 4) % 4;
  if (r == 0 || r == 2) return 0;
  return r == 1 ? 1 : -1;
}

uint64_t rho_prime_power_brute(uint64_t p, int e) {
  unsigned __int128 pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  if (pe > (1u << 22)) throw std::invalid_argument("brute root scan modulus too large");
  auto m = static_cast<uint64_t>(pe);
  uint64_t cnt = 0;
  for (uint64_t v = 0; v < m; ++v)
    if ((v * v + 1) % m == 0) ++cnt;
  return cnt;
}

uint64_t rho_prime_power_lifted(uint64_t p, int e) {
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  {
    unsigned __int128 pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      if (pe > (static_cast<unsigned __int128>(1) << 62))
        throw std::invalid_argument("lifted modulus too large");
    }
  }
  std::vector<uint64_t> roots;
  if (p == 2) {
    roots = {1};  // 1^2 + 1 = 0 (mod 2)
  } else if (p % 4 == 3) {
    return 0;
  } else {
    // p = 1 (mod 4): a^((p-1)/4) is a square root of -1 for any non-residue a
    uint64_t v = 0;
    for (uint64_t a = 2; a < p; ++a) {
      uint64_t cand = powmod_u64(a, (p - 1) / 4, p);
      if (mulmod_u64(cand, cand, p) == p - 1) {
        v = cand;
        break;
      }
    }
    if (v == 0) throw std::runtime_error("no square root of -1 found; modulus not prime?");
    roots = {v, p - v};
  }
  uint64_t mod = p;
  for (int i = 2; i <= e; ++i) {
    uint64_t nmod = mod * p;
    std::vector<uint64_t> lift;
    for (uint64_t r : roots) {
      if (p == 2) {
        // derivative 2r is even: test both candidate lifts explicitly
        for (uint64_t t = 0; t < 2; ++t) {
          uint64_t c = r + t * mod;
          if ((mulmod_u64(c, c, nmod) + 1) % nmod == 0) lift.push_back(c);
        }
      } else {
        // Newton step: r' = r - (r^2+1) * (2r)^-1 (mod nmod), unique lift
        uint64_t fr = (mulmod_u64(r, r, nmod) + 1) % nmod;
        uint64_t inv = invmod_u64(mulmod_u64(2, r, nmod), nmod);
        uint64_t c = (r + nmod - mulmod_u64(fr, inv, nmod)) % nmod;
        lift.push_back(c);
      }
    }
    std::sort(lift.begin(), lift.end());
    roots = std::move(lift);
    mod = nmod;
    if (roots.empty()) return 0;
  }
  return roots.size();
}

uint64_t rho_prime_power(uint64_t p, int e) {
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  if (e == 1) {
    if (p == 2) return 1;
    return static_cast<uint64_t>(1 + chi(static_cast<long long>(p)));
  }
  if (p == 2) return 0;
  if (p % 4 == 3) return 0;
  // odd p = 1 (mod 4): Hensel lifts are unique, count stays 2
  return 2;
}

uint64_t rho(uint64_t d) {
  if (d == 0) throw std::invalid_argument("modulus must be positive");
  uint64_t out = 1;
  for (const auto& [p, e] : factorize(d)) {
    uint64_t r = rho_prime_power(p, e);
    if (r == 0) return 0;
    out *= r;
  }
  return out;
}

uint64_t rho_brute(uint64_t d) {
  if (d == 0 || d > (1u << 26)) throw std::invalid_argument("brute scan modulus out of range");
  uint64_t cnt = 0;
  for (uint64_t v = 0; v < d; ++v)
    if ((v * v + 1) % d == 0) ++cnt;
  return cnt;
}

uint64_t square_part_root(uint64_t d) {
  uint64_t r = 1;
  for (const auto& [p, e] : factorize(d))
    for (int i = 0; i < e / 2; ++i) r *= p;
  return r;
}

uint64_t rho_ell(uint64_t ell, uint64_t d) {
  if (ell == 0 || d == 0) throw std::invalid_argument("arguments must be positive");
  if (ell > 3000000000ull) throw std::invalid_argument("ell too large to square");
  uint64_t ell2 = ell * ell;
  uint64_t g = std::gcd(d, ell2);
  return std::gcd(square_part_root(d), ell) * rho(d / g);
}

uint64_t rho_ell_brute(uint64_t ell, uint64_t d) {
  if (ell == 0 || d == 0 || d > (1u << 26))
    throw std::invalid_argument("brute scan arguments out of range");
  uint64_t l2 = mulmod_u64(ell % d, ell % d, d);
  uint64_t cnt = 0;
  for (uint64_t v = 0; v < d; ++v)
    if ((mulmod_u64(v, v, d) + l2) % d == 0) ++cnt;
  return cnt;
}

namespace {

// rho_ell(n) from the smallest-prime-factor table, multiplicatively.
uint64_t rho_ell_from_spf(uint64_t ell, uint64_t n, const SpfSieve& sv) {
  uint64_t r = 1;  // square_part_root(n)
  uint64_t m = n;
  uint64_t out_rho = 1;  // rho(n / gcd(n, ell^2)), built per prime
  while (m > 1) {
    uint64_t p = sv.spf[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) r *= p;
    int drop = 0;  // exponent of p in gcd(p^e, ell^2)
    if (ell % p == 0) {
      uint64_t l = ell;
      int le = 0;
      while (l % p == 0) {
        l /= p;
        ++le;
      }
      drop = std::min(e, 2 * le);
    }
    int keep = e - drop;
    if (keep > 0) {
      uint64_t rp = rho_prime_power(p, keep);
      if (rp == 0) out_rho = 0;
      out_rho *= rp;
    }
  }
  return std::gcd(r, ell) * out_rho;
}

}  // namespace

double average_rho_check(uint64_t ell, uint64_t y) {
  if (ell == 0) throw std::invalid_argument("ell must be positive");
  if (y < 2 || y > 2000000) throw std::invalid_argument("y out of 2..2e6");
  auto sv = linear_sieve(static_cast<uint32_t>(y));
  NeumaierSum sum;
  sum.add(1.0);  // n = 1 contributes rho_ell(1)/1 = 1
  for (uint64_t n = 2; n <= y; ++n)
    sum.add(static_cast<double>(rho_ell_from_spf(ell, n, sv)) / static_cast<double>(n));
  double ly = std::log(static_cast<double>(y));
  double denom = ly * ly;
  for (const auto& [p, e] : factorize(ell))
    denom *= 1.0 + 7.0 / std::sqrt(static_cast<double>(p));
  return sum.value() / denom;
}

double mobius_rho_partial_sum(uint64_t ell, uint64_t V, int threads) {
  if (ell == 0 || V == 0) throw std::invalid_argument("arguments must be positive");
  if (V > 20000000ull) throw std::invalid_argument("truncation too large");
  (void)threads;  // ascending accumulation is kept strictly sequential
  NeumaierSum sum;
  sum.add(1.0);
  if (V == 1) return sum.value();
  auto sv = linear_sieve(static_cast<uint32_t>(V));
  for (uint64_t d = 2; d <= V; ++d) {
    if (sv.mu[d] == 0) continue;
    uint64_t r = rho_ell_from_spf(ell, d, sv);
    if (r == 0) continue;
    sum.add(sv.mu[d] * static_cast<double>(r) / static_cast<double>(d));
  }
  return sum.value();
}

double constant_C_factor(uint64_t p) {
  if (p < 2) throw std::invalid_argument("not a prime");
  if (p == 2) return 1.0;
  double c = chi(static_cast<long long>(p));
  return 1.0 - c / ((static_cast<double>(p) - 1.0) * (static_cast<double>(p) - c));
}

ConstantC constant_C(uint64_t p_max, int threads) {
  if (p_max < 3) throw std::invalid_argument("truncation must be at least 3");
  if (p_max > 200000000ull) throw std::invalid_argument("truncation too large");
  auto base = primes_upto(static_cast<uint32_t>(isqrt_u64(p_max)));
  const uint64_t seg = 1u << 20;
  size_t nseg = static_cast<size_t>(p_max / seg) + 1;
  std::vector<long double> partial(nseg, 1.0L);
  run_blocks(nseg, threads, [&](size_t i) {
    uint64_t lo = i * seg;
    uint64_t hi = std::min<uint64_t>(p_max + 1, (i + 1) * seg);
    if (lo >= hi) return;
    std::vector<uint64_t> ps;
    primes_in_segment(lo, hi, base, ps);
    long double acc = 1.0L;
    for (uint64_t p : ps) {
      if (p == 2) continue;
      long double c = (p % 4 == 1) ? 1.0L : -1.0L;
      acc *= 1.0L - c / ((static_cast<long double>(p) - 1.0L) * (static_cast<long double>(p) - c));
    }
    partial[i] = acc;
  });
  long double prod = 1.0L;
  for (long double v : partial) prod *= v;
  return {static_cast<double>(prod), p_max, 1.0 / static_cast<double>(p_max - 1)};
}

Rational kappa1(int a0) {
  if (a0 < 0 || a0 > 9) throw std::invalid_argument("digit out of 0..9");
  return std::gcd(a0, 10) != 1 ? Rational(10, 9) : Rational(5, 6);
}

Rational kappa_B(const ExcludedDigits& B) {
  if (B.size() > 3)
    throw std::invalid_argument("density factor defined for at most three excluded digits");
  long long phi10 = 4;
  long long bad = 0;  // excluded digits not coprime to 10
  for (int a : B.digits())
    if (std::gcd(a, 10) != 1) ++bad;
  return Rational(10 * (phi10 + bad - B.size()), phi10 * (10 - B.size()));
}

double main_term_value(double C, const Rational& kappa, uint64_t P, double lattice_count) {
  if (P < 3) throw std::invalid_argument("sieve cutoff must be at least 3");
  constexpr double kExpMinusEuler = 0.561459483566885;  // e^{-gamma}
  constexpr double kPi = 3.14159265358979323846;
  return 4.0 * C * kappa.value() / kPi * (kExpMinusEuler / std::log(static_cast<double>(P))) *
         lattice_count;
}

}  // namespace digitsieve
