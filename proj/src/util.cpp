#include "digitsieve/util.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace digitsieve {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

uint64_t pow10_u64(int k) {
  if (k < 0 || k > 19) throw std::invalid_argument("pow10 exponent out of range");
  uint64_t r = 1;
  while (k--) r *= 10;
  return r;
}

uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r * r > n) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
  // extended Euclid on signed 128-bit to dodge overflow of the cofactors
  __int128 t = 0, nt = 1;
  __int128 r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("invmod of a non-unit");
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

namespace {

bool witness_composite(uint64_t a, uint64_t d, int s, uint64_t n) {
  uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kMrBases)
    if (n % p == 0) return n == p;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // {2,3,5,7} is a proven witness set below 3215031751; the first twelve
  // primes cover the full 64-bit range
  size_t nbases = n < 3215031751ull ? 4 : 12;
  for (size_t i = 0; i < nbases; ++i)
    if (witness_composite(kMrBases[i], d, s, n)) return false;
  return true;
}

std::vector<uint32_t> primes_upto(uint32_t n) {
  std::vector<uint32_t> out;
  if (n < 2) return out;
  std::vector<uint8_t> comp(n + 1, 0);
  for (uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<uint32_t>(i));
    for (uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return out;
}

void primes_in_segment(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& base_primes,
                       std::vector<uint64_t>& out) {
  out.clear();
  if (hi <= lo) return;
  std::vector<uint8_t> comp(hi - lo, 0);
  for (uint32_t p : base_primes) {
    uint64_t pp = p;
    uint64_t start = (lo + pp - 1) / pp * pp;
    if (start < pp * pp) start = pp * pp;
    for (uint64_t j = start; j < hi; j += pp) comp[j - lo] = 1;
  }
  for (uint64_t v = lo; v < hi; ++v)
    if (v >= 2 && !comp[v - lo]) out.push_back(v);
}

SpfSieve linear_sieve(uint32_t n) {
  SpfSieve sv;
  sv.spf.assign(n + 1, 0);
  sv.mu.assign(n + 1, 0);
  if (n >= 1) sv.mu[1] = 1;
  std::vector<uint32_t> primes;
  for (uint32_t i = 2; i <= n; ++i) {
    if (sv.spf[i] == 0) {
      sv.spf[i] = i;
      sv.mu[i] = -1;
      primes.push_back(i);
    }
    for (uint32_t p : primes) {
      if (p > sv.spf[i] || static_cast<uint64_t>(p) * i > n) break;
      sv.spf[p * i] = p;
      sv.mu[p * i] = (i % p == 0) ? 0 : -sv.mu[i];
    }
  }
  return sv;
}

std::vector<PrimePower> factorize(uint64_t n) {
  std::vector<PrimePower> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

void run_blocks(size_t nblocks, int threads, const std::function<void(size_t)>& fn) {
  if (nblocks == 0) return;
  size_t nt = threads < 1 ? 1 : static_cast<size_t>(threads);
  if (nt > nblocks) nt = nblocks;
  if (nt == 1) {
    for (size_t i = 0; i < nblocks; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= nblocks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace digitsieve
