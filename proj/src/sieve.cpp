#include "digitsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace digitsieve {

SieveRun make_run(uint64_t x, uint32_t P, const ExcludedDigits& B) {
  if (x < 1) throw std::invalid_argument("x must be positive");
  if (x > 200000000ull) throw std::invalid_argument("x out of supported range");
  if (P < 2) throw std::invalid_argument("sieve cutoff must be at least 2");
  unsigned __int128 pi = 1;
  for (uint32_t p : primes_upto(P)) {
    pi *= p;
    if (pi > UINT64_MAX) throw std::invalid_argument("primorial exceeds 64 bits");
  }
  bool tm = false;
  if (x >= 16) {
    double lx = std::log(static_cast<double>(x));
    double llx = std::log(lx);
    double lp = std::log(static_cast<double>(P));
    tm = std::pow(llx, 4.0) <= lp && lp <= std::sqrt(lx) / llx;
  }
  return {x, P, static_cast<uint64_t>(pi), B, tm};
}

namespace {

uint64_t ipow_checked(uint64_t b, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > UINT64_MAX) return 0;
  }
  return static_cast<uint64_t>(r);
}

uint64_t iroot(uint64_t n, int e) {
  if (e == 1) return n;
  auto r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / e));
  while (r > 1 && (ipow_checked(r, e) == 0 || ipow_checked(r, e) > n)) --r;
  while (ipow_checked(r + 1, e) != 0 && ipow_checked(r + 1, e) <= n) ++r;
  return r;
}

}  // namespace

VonMangoldt von_mangoldt_ex(uint64_t n) {
  if (n < 1 || n > 2000000000000000000ull)
    throw std::invalid_argument("value out of supported range");
  if (n < 2) return {0.0, false};
  // fast path: a small prime factor settles the value with a few divisions
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p) continue;
    uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) return {std::log(static_cast<double>(p)), n == p};
    return {0.0, false};
  }
  // strip perfect powers; prime exponents suffice since b^(ef) = (b^e)^f
  uint64_t base = n;
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (int e : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
      if (base < (1ull << e)) break;  // any root would fall below 2
      uint64_t r = iroot(base, e);
      if (r >= 2 && ipow_checked(r, e) == base) {
        base = r;
        reduced = true;
        break;
      }
    }
  }
  if (is_prime_u64(base)) return {std::log(static_cast<double>(base)), base == n};
  return {0.0, false};
}

WeightArray build_weights(const SieveRun& run, uint64_t budget_bytes) {
  uint64_t need = (run.x + 1) * sizeof(uint16_t);
  if (need > budget_bytes) throw std::length_error("weight array exceeds the memory budget");
  WeightArray w;
  w.x = run.x;
  w.a.assign(run.x + 1, 0);
  uint64_t rt = isqrt_u64(run.x);
  w.ells = enumerate_members(rt, run.B, DigitConvention::Genuine, run.Pi);
  uint64_t points = 0;
  for (uint64_t l : w.ells) {
    uint64_t l2 = l * l;
    uint64_t mmax = isqrt_u64(run.x - l2);
    for (uint64_t m = 0; m <= mmax; ++m) {
      uint64_t n = m * m + l2;
      uint16_t inc = (m == 0) ? 1 : 2;  // m and -m
      if (w.a[n] > std::numeric_limits<uint16_t>::max() - inc)
        throw std::overflow_error("weight multiplicity overflow");
      w.a[n] = static_cast<uint16_t>(w.a[n] + inc);
    }
    points += 2 * mmax + 1;
  }
  w.lattice_points = points;
  return w;
}

uint64_t lattice_count(const SieveRun& run) {
  uint64_t rt = isqrt_u64(run.x);
  auto ells = enumerate_members(rt, run.B, DigitConvention::Genuine, 1);
  uint64_t points = 0;
  for (uint64_t l : ells) points += 2 * isqrt_u64(run.x - l * l) + 1;
  return points;
}

namespace {

// Lambda(n) for all n <= x as a dense array, from the smallest-prime-factor
// sieve: nonzero exactly at prime powers.
std::vector<double> lambda_array(uint64_t x, const SpfSieve& sv) {
  std::vector<double> lam(x + 1, 0.0);
  for (uint64_t p = 2; p <= x; ++p) {
    if (sv.spf[p] != p) continue;
    double lg = std::log(static_cast<double>(p));
    for (uint64_t q = p;;) {
      lam[q] = lg;
      if (q > x / p) break;
      q *= p;
    }
  }
  return lam;
}

constexpr uint64_t kDenseLambdaCap = 10000000ull;

}  // namespace

SSums s_of_x(const SieveRun& run, const WeightArray& w, int threads) {
  if (w.x != run.x) throw std::invalid_argument("weights built for a different bound");
  uint64_t x = run.x;
  if (x < 2) return {0.0, 0.0};
  const uint64_t blk = 1u << 22;
  size_t nb = static_cast<size_t>(x / blk) + 1;
  std::vector<double> tot(nb, 0.0), pr(nb, 0.0);
  if (x <= kDenseLambdaCap) {
    auto sv = linear_sieve(static_cast<uint32_t>(x));
    auto lam = lambda_array(x, sv);
    run_blocks(nb, threads, [&](size_t bi) {
      uint64_t lo = std::max<uint64_t>(2, bi * blk);
      uint64_t hi = std::min(x + 1, (bi + 1) * blk);
      NeumaierSum t, q;
      for (uint64_t n = lo; n < hi; ++n) {
        if (!w.a[n] || lam[n] == 0.0) continue;
        double v = w.a[n] * lam[n];
        t.add(v);
        if (sv.spf[n] == n) q.add(v);
      }
      tot[bi] = t.value();
      pr[bi] = q.value();
    });
  } else {
    run_blocks(nb, threads, [&](size_t bi) {
      uint64_t lo = std::max<uint64_t>(2, bi * blk);
      uint64_t hi = std::min(x + 1, (bi + 1) * blk);
      NeumaierSum t, q;
      for (uint64_t n = lo; n < hi; ++n) {
        if (!w.a[n]) continue;
        auto vm = von_mangoldt_ex(n);
        if (vm.lambda == 0.0) continue;
        double v = w.a[n] * vm.lambda;
        t.add(v);
        if (vm.is_prime) q.add(v);
      }
      tot[bi] = t.value();
      pr[bi] = q.value();
    });
  }
  NeumaierSum T, Q;
  for (size_t i = 0; i < nb; ++i) {
    T.add(tot[i]);
    Q.add(pr[i]);
  }
  return {T.value(), Q.value()};
}

std::vector<CongruenceRow> congruence_table(const SieveRun& run, const WeightArray& w,
                                            uint64_t D, bool with_log, int threads) {
  if (w.x != run.x) throw std::invalid_argument("weights built for a different bound");
  if (D < 1) throw std::invalid_argument("depth must be positive");
  if (static_cast<unsigned __int128>(D) * D > run.x)
    throw std::invalid_argument("depth exceeds sqrt(x)");
  uint64_t x = run.x;
  struct LC {
    uint64_t l, cnt;
  };
  std::vector<LC> lc;
  lc.reserve(w.ells.size());
  for (uint64_t l : w.ells) lc.push_back({l, 2 * isqrt_u64(x - l * l) + 1});
  std::vector<CongruenceRow> rows(D);
  run_blocks(D, threads, [&](size_t i) {
    uint64_t d = i + 1;
    uint64_t Ad = 0;
    NeumaierSum Al;
    for (uint64_t n = d; n <= x; n += d) {
      if (!w.a[n]) continue;
      Ad += w.a[n];
      if (with_log) Al.add(w.a[n] * std::log(static_cast<double>(n)));
    }
    unsigned __int128 msum = 0;
    for (const auto& e : lc) msum += static_cast<unsigned __int128>(e.cnt) * rho_ell(e.l, d);
    double Md = static_cast<double>(msum) / static_cast<double>(d);
    CongruenceRow row{};
    row.d = d;
    row.A_d = static_cast<double>(Ad);
    row.M_d = Md;
    row.R_d = static_cast<double>(Ad) - Md;
    row.A_log_d = with_log ? Al.value() : 0.0;
    rows[i] = row;
  });
  double ref_scale = std::pow(static_cast<double>(x), 0.5 + gamma_exponent(run.B) / 4.0);
  NeumaierSum cum;
  for (uint64_t i = 0; i < D; ++i) {
    cum.add(std::abs(rows[i].R_d));
    rows[i].cum_R = cum.value();
    rows[i].reference = std::pow(static_cast<double>(i + 1), 0.25) * ref_scale;
    rows[i].ratio = rows[i].cum_R / rows[i].reference;
  }
  return rows;
}

VaughanSplit vaughan_decompose(const SieveRun& run, const WeightArray& w, uint64_t U,
                               uint64_t V) {
  if (w.x != run.x) throw std::invalid_argument("weights built for a different bound");
  uint64_t x = run.x;
  if (x > kDenseLambdaCap) throw std::invalid_argument("decomposition needs x <= 1e7");
  if (U < 2 || V < 2 || U > x || V > x)
    throw std::invalid_argument("cut points must lie in [2, x]");
  auto sv = linear_sieve(static_cast<uint32_t>(x));
  auto lam = lambda_array(x, sv);
  NeumaierSum direct;
  for (uint64_t n = 2; n <= x; ++n)
    if (w.a[n] && lam[n] != 0.0) direct.add(w.a[n] * lam[n]);

  // piece 1: the head n <= U taken verbatim
  NeumaierSum s1;
  for (uint64_t n = 2; n <= U; ++n)
    if (w.a[n] && lam[n] != 0.0) s1.add(w.a[n] * lam[n]);

  // piece 2: sum_{b <= V} mu(b) sum_{m <= x/b} a(bm) log m
  NeumaierSum s2;
  for (uint64_t b = 1; b <= V; ++b) {
    if (sv.mu[b] == 0) continue;
    NeumaierSum inner;
    for (uint64_t m = 2; b * m <= x; ++m)
      if (w.a[b * m]) inner.add(w.a[b * m] * std::log(static_cast<double>(m)));
    s2.add(sv.mu[b] * inner.value());
  }

  // piece 3: -(Lambda_{<=U} * mu_{<=V}) convolved with 1 against the weights
  unsigned __int128 uv = static_cast<unsigned __int128>(U) * V;
  uint64_t L = uv > x ? x : static_cast<uint64_t>(uv);
  std::vector<double> c(L + 1, 0.0);
  for (uint64_t u = 2; u <= std::min(U, L); ++u) {
    if (lam[u] == 0.0) continue;
    for (uint64_t v = 1; v <= V && u * v <= L; ++v)
      if (sv.mu[v] != 0) c[u * v] += lam[u] * sv.mu[v];
  }
  NeumaierSum s3;
  for (uint64_t r = 2; r <= L; ++r) {
    if (c[r] == 0.0) continue;
    uint64_t inner = 0;
    for (uint64_t n = r; n <= x; n += r) inner += w.a[n];
    s3.add(c[r] * static_cast<double>(inner));
  }

  // piece 4: sum_{u > U} Lambda(u) sum_{v > V} mu(v) sum_w a(uvw)
  NeumaierSum s4;
  for (uint64_t u = U + 1; u <= x; ++u) {
    if (lam[u] == 0.0) continue;
    uint64_t vmax = x / u;
    if (vmax <= V) continue;
    NeumaierSum inner_u;
    for (uint64_t v = V + 1; v <= vmax; ++v) {
      if (sv.mu[v] == 0) continue;
      uint64_t q = u * v;
      uint64_t acc = 0;
      for (uint64_t n = q; n <= x; n += q) acc += w.a[n];
      if (acc) inner_u.add(sv.mu[v] * static_cast<double>(acc));
    }
    s4.add(lam[u] * inner_u.value());
  }

  VaughanSplit out;
  out.S_direct = direct.value();
  out.S1 = s1.value();
  out.S2 = s2.value();
  out.S3 = -s3.value();
  out.S4 = s4.value();
  NeumaierSum sum;
  sum.add(out.S1);
  sum.add(out.S2);
  sum.add(out.S3);
  sum.add(out.S4);
  out.sum = sum.value();
  out.residual = out.sum - out.S_direct;
  out.residual_rel = std::abs(out.residual) / std::max(1.0, std::abs(out.S_direct));
  out.U = U;
  out.V = V;
  return out;
}

TheoremCheck verify_main_theorem(const SieveRun& run, const WeightArray& w,
                                 uint64_t C_truncation, int threads) {
  auto s = s_of_x(run, w, threads);
  auto C = constant_C(C_truncation, threads);
  Rational kap = kappa_B(run.B);
  uint64_t lattice = lattice_count(run);
  double main = main_term_value(C.value, kap, run.P, static_cast<double>(lattice));
  if (!(main > 0.0)) throw std::domain_error("main term vanishes: empty admissible lattice");
  TheoremCheck out;
  out.S = s.total;
  out.main_term = main;
  out.ratio = s.total / main;
  out.theorem_mode = run.theorem_mode;
  out.prime_only = s.prime_only;
  out.lattice_points = lattice;
  out.C = C.value;
  out.kappa = kap;
  out.C_truncation = C.truncation;
  return out;
}

}  // namespace digitsieve
