#include "digitsieve/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "digitsieve/fourier.hpp"

namespace digitsieve {

GFactor g_factor(const ExcludedDigits& B, const std::vector<int>& window, int grid_points) {
  if (window.empty() || window.size() > 6)
    throw std::invalid_argument("window length out of range");
  for (int t : window)
    if (t < 0 || t > 9) throw std::invalid_argument("window digits must be 0..9");
  if (grid_points < 101) throw std::invalid_argument("gamma grid needs at least 101 points");
  int J = static_cast<int>(window.size()) - 1;
  double base = 0.0, scale = 0.1;
  for (int j = 0; j <= J; ++j) {
    base += window[j] * scale;
    scale *= 0.1;
  }
  // gamma is the contribution of the digits beyond the window, a nonnegative
  // tail of at most sum_{j>J} 9*10^{-j-1} = 10^{-J-1}, so the supremum runs
  // over [0, 10^{-J-1}] only; widening it to a symmetric window would push
  // several certified eigenvalues past their thresholds
  double hw = std::pow(10.0, -(J + 1));
  double h = hw / (grid_points - 1);
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double gamma = i * h;
    best = std::max(best, normalized_digit_sum(B, base + gamma));
  }
  double L = 0.0;
  for (int d = 0; d <= 9; ++d)
    if (!B.excludes(d)) L += d;
  L *= 2.0 * std::numbers::pi / (10 - B.size());
  double margin = L * h / 2.0;
  return {window, std::min(1.0, best + margin), hw, grid_points, margin};
}

TransferMatrix build_transfer_matrix(const ExcludedDigits& B, double t, int J, int grid_points,
                                     int threads) {
  if (J < 1 || J > 3) throw std::invalid_argument("window length out of 1..3");
  if (t < 0) throw std::invalid_argument("moment exponent must be nonnegative");
  size_t dim = 1;
  for (int i = 0; i < J; ++i) dim *= 10;
  size_t sub = dim / 10;  // 10^{J-1}
  size_t nwin = dim * 10;
  std::vector<double> g(nwin);
  const size_t blk = 200;
  size_t nb = (nwin + blk - 1) / blk;
  run_blocks(nb, threads, [&](size_t bi) {
    size_t lo = bi * blk, hi = std::min(nwin, lo + blk);
    std::vector<int> win(J + 1);
    for (size_t w = lo; w < hi; ++w) {
      size_t v = w;
      for (int j = 0; j <= J; ++j) {
        win[j] = static_cast<int>(v % 10);
        v /= 10;
      }
      g[w] = g_factor(B, win, grid_points).value;
    }
  });
  TransferMatrix M;
  M.J = J;
  M.t = t;
  M.grid_points = grid_points;
  M.B = B.str();
  M.dim = dim;
  M.row_ptr.resize(dim + 1);
  M.col.resize(dim * 10);
  M.val.resize(dim * 10);
  for (size_t r = 0; r <= dim; ++r) M.row_ptr[r] = 10 * r;
  for (size_t r = 0; r < dim; ++r) {
    for (uint32_t a = 0; a < 10; ++a) {
      size_t slot = 10 * r + a;
      M.col[slot] = a + 10 * static_cast<uint32_t>(r % sub);
      double base = g[a + 10 * r];
      M.val[slot] = t == 1.0 ? base : (t == 0.0 ? 1.0 : std::pow(base, t));
    }
  }
  return M;
}

EigenCertificate dominant_eigenvalue(const TransferMatrix& M, double tol, uint64_t max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  size_t n = M.dim;
  std::vector<char> alive(n, 1);
  // drop states whose outgoing mass vanishes; they die in one application
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t r = 0; r < n; ++r) {
      if (!alive[r]) continue;
      double rs = 0.0;
      for (size_t s = M.row_ptr[r]; s < M.row_ptr[r + 1]; ++s)
        if (alive[M.col[s]]) rs += M.val[s];
      if (rs == 0.0) {
        alive[r] = 0;
        changed = true;
      }
    }
  }
  EigenCertificate cert;
  cert.B = M.B;
  cert.d = 0;
  for (char ch : M.B)
    if (ch >= '0' && ch <= '9') ++cert.d;
  cert.J = M.J;
  cert.t = M.t;
  cert.grid_points = M.grid_points;
  cert.threshold = 0.0;
  cert.margin = 0.0;
  cert.verdict = false;
  std::vector<size_t> live;
  for (size_t r = 0; r < n; ++r)
    if (alive[r]) live.push_back(r);
  if (live.empty()) {
    cert.lambda_lower = cert.lambda_upper = 0.0;
    cert.iterations = 0;
    return cert;
  }
  std::vector<double> v(n, 0.0), w(n, 0.0);
  for (size_t r : live) v[r] = 1.0;
  double bl = 0.0, bu = std::numeric_limits<double>::infinity();
  uint64_t iter = 0;
  while (iter < max_iter) {
    ++iter;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, mx = 0.0;
    for (size_t r : live) {
      double acc = 0.0;
      for (size_t s = M.row_ptr[r]; s < M.row_ptr[r + 1]; ++s)
        if (alive[M.col[s]]) acc += M.val[s] * v[M.col[s]];
      w[r] = acc;
      double ratio = acc / v[r];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      mx = std::max(mx, acc);
    }
    // Collatz-Wielandt: the Perron root lies in [min ratio, max ratio] for
    // every positive vector, so the running intersection brackets it
    bl = std::max(bl, lo);
    bu = std::min(bu, hi);
    if (bl > 0.0 && bu - bl <= tol * bl) break;
    if (mx <= 0.0) break;
    for (size_t r : live) v[r] = w[r] / mx;
  }
  if (!(bl > 0.0) || bu - bl > tol * bl)
    throw std::runtime_error("power iteration did not converge; matrix may be reducible");
  cert.lambda_lower = bl;
  cert.lambda_upper = bu;
  cert.iterations = iter;
  return cert;
}

double certification_threshold(int d) {
  if (d == 2) return std::pow(10.0, 54.0 / 125.0);
  if (d == 3) return std::pow(10.0, 99.0 / 200.0);
  throw std::invalid_argument("certification threshold defined for d = 2 or 3");
}

std::vector<std::vector<int>> digit_subsets(int d) {
  if (d < 1 || d > 9) throw std::invalid_argument("subset size out of 1..9");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= 9; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<EigenCertificate> certify_all(int d, int J, double t, double threshold,
                                          int grid_points, int threads) {
  if (d != 2 && d != 3) throw std::invalid_argument("certification covers d = 2 or 3");
  if (threshold <= 0.0) threshold = certification_threshold(d);
  auto subsets = digit_subsets(d);
  std::vector<EigenCertificate> out(subsets.size());
  run_blocks(subsets.size(), threads, [&](size_t i) {
    ExcludedDigits b(subsets[i]);
    auto M = build_transfer_matrix(b, t, J, grid_points, 1);
    auto cert = dominant_eigenvalue(M);
    cert.threshold = threshold;
    cert.margin = threshold - cert.lambda_upper;
    cert.verdict = cert.lambda_upper < threshold;
    out[i] = cert;
  });
  return out;
}

double moment_sum_oracle(int k, const ExcludedDigits& B, double t, int threads) {
  if (k < 1 || k > 6) throw std::invalid_argument("digit length out of 1..6");
  if (t < 0) throw std::invalid_argument("moment exponent must be nonnegative");
  uint64_t Y = pow10_u64(k);
  const uint64_t blk = 4096;
  size_t nb = static_cast<size_t>((Y + blk - 1) / blk);
  std::vector<double> part(nb, 0.0);
  run_blocks(nb, threads, [&](size_t bi) {
    uint64_t lo = bi * blk, hi = std::min(Y, (bi + 1) * blk);
    NeumaierSum s;
    for (uint64_t a = lo; a < hi; ++a) {
      double F = eval_product_rational(k, B, a, Y);
      s.add(t == 1.0 ? F : (t == 0.0 ? 1.0 : std::pow(F, t)));
    }
    part[bi] = s.value();
  });
  NeumaierSum total;
  for (double v : part) total.add(v);
  return total.value();
}

}  // namespace digitsieve
