#include "digitsieve/digits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace digitsieve {

DigitConvention parse_convention(const std::string& s) {
  if (s == "padded") return DigitConvention::Padded;
  if (s == "genuine") return DigitConvention::Genuine;
  throw std::invalid_argument("unknown digit convention: " + s);
}

std::string convention_name(DigitConvention c) {
  return c == DigitConvention::Padded ? "padded" : "genuine";
}

ExcludedDigits::ExcludedDigits(const std::vector<int>& digits) {
  for (int d : digits) {
    if (d < 0 || d > 9) throw std::invalid_argument("excluded digit out of 0..9");
    if (mask_ >> d & 1) throw std::invalid_argument("duplicate excluded digit");
    mask_ |= 1u << d;
    ++count_;
  }
  if (count_ < 1 || count_ > 8)
    throw std::invalid_argument("excluded digit set size must be 1..8");
  for (int d = 0; d <= 9; ++d) {
    if (excludes(d))
      digits_.push_back(d);
    else
      allowed_.push_back(d);
  }
}

ExcludedDigits ExcludedDigits::parse(const std::string& s) {
  std::vector<int> ds;
  bool has_sep = s.find(',') != std::string::npos;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') continue;
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit set: " + s);
    ds.push_back(ch - '0');
  }
  (void)has_sep;  // "05" and "0,5" both accepted
  return ExcludedDigits(ds);
}

std::string ExcludedDigits::str() const {
  std::string out = "{";
  for (size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ",";
    out += static_cast<char>('0' + digits_[i]);
  }
  out += "}";
  return out;
}

std::string ExcludedDigits::compact() const {
  std::string out;
  for (int d : digits_) out += static_cast<char>('0' + d);
  return out;
}

bool is_member(uint64_t n, const ExcludedDigits& B, DigitConvention conv, int k) {
  if (conv == DigitConvention::Padded) {
    if (k < 1 || k > 19) throw std::invalid_argument("padded membership needs k in 1..19");
    if (k < 19 && n >= pow10_u64(k))
      throw std::invalid_argument("value too wide for the padding length");
    for (int i = 0; i < k; ++i) {
      if (B.excludes(static_cast<int>(n % 10))) return false;
      n /= 10;
    }
    return true;
  }
  if (n == 0) return !B.excludes(0);
  while (n) {
    if (B.excludes(static_cast<int>(n % 10))) return false;
    n /= 10;
  }
  return true;
}

uint64_t count_below(int k, const ExcludedDigits& B, DigitConvention conv) {
  if (k < 0 || k > 19) throw std::invalid_argument("digit length out of 0..19");
  uint64_t A = 10 - B.size();
  if (conv == DigitConvention::Padded) {
    unsigned __int128 c = 1;
    for (int i = 0; i < k; ++i) c *= A;
    if (c > UINT64_MAX) throw std::overflow_error("count exceeds 64 bits");
    return static_cast<uint64_t>(c);
  }
  uint64_t lead = A - (B.excludes(0) ? 0 : 1);
  unsigned __int128 total = B.excludes(0) ? 0 : 1;  // the value 0 itself
  unsigned __int128 tail = 1;
  for (int L = 1; L <= k; ++L) {
    total += lead * tail;
    tail *= A;
  }
  if (total > UINT64_MAX) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<uint64_t>(total);
}

namespace {

void dfs_members(uint64_t prefix, int depth, int len, bool lead_nonzero, uint64_t limit,
                 const std::vector<int>& allowed, const std::vector<uint64_t>& p10,
                 uint64_t coprime_to, std::vector<uint64_t>& out) {
  int rem = len - depth - 1;
  for (int d : allowed) {
    if (depth == 0 && lead_nonzero && d == 0) continue;
    uint64_t v = prefix * 10 + static_cast<uint64_t>(d);
    // smallest completion of v is v * 10^rem; digits ascend, so stop early
    if (v > limit / p10[rem]) break;
    if (rem == 0) {
      if (coprime_to == 0 || std::gcd(v, coprime_to) == 1) out.push_back(v);
    } else {
      dfs_members(v, depth + 1, len, lead_nonzero, limit, allowed, p10, coprime_to, out);
    }
  }
}

}  // namespace

std::vector<uint64_t> enumerate_members(uint64_t limit, const ExcludedDigits& B,
                                        DigitConvention conv, uint64_t coprime_to, int k) {
  std::vector<uint64_t> out;
  std::vector<uint64_t> p10(19);
  for (int i = 0; i < 19; ++i) p10[i] = pow10_u64(i);
  if (conv == DigitConvention::Padded) {
    if (k < 1 || k > 18) throw std::invalid_argument("padded enumeration needs k in 1..18");
    uint64_t cap = std::min(limit, p10[k] - 1);
    dfs_members(0, 0, k, false, cap, B.allowed(), p10, coprime_to, out);
    return out;
  }
  if (!B.excludes(0) && (coprime_to == 0 || coprime_to == 1)) out.push_back(0);
  int len = 0;
  for (uint64_t v = limit; v; v /= 10) ++len;
  if (len > 18) throw std::invalid_argument("enumeration limit too large");
  for (int L = 1; L <= len; ++L) {
    uint64_t cap = std::min(limit, p10[L] - 1);
    dfs_members(0, 0, L, true, cap, B.allowed(), p10, coprime_to, out);
  }
  return out;
}

Rational coprime_fraction_kappa(int k, const ExcludedDigits& B) {
  if (B.size() != 1)
    throw std::invalid_argument("coprime fraction defined for singleton exclusions only");
  if (k < 1 || k > 7) throw std::invalid_argument("digit length out of 1..7");
  auto members = enumerate_members(pow10_u64(k) - 1, B, DigitConvention::Genuine);
  long long total = 0, cop = 0;
  for (uint64_t n : members) {
    ++total;
    if (std::gcd(n, static_cast<uint64_t>(10)) == 1) ++cop;
  }
  return Rational(cop, total);
}

double gamma_exponent(const ExcludedDigits& B) {
  return std::log10(10.0 - B.size());
}

}  // namespace digitsieve
