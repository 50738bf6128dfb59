#pragma once
// Digit-restricted sets: decimal expansions avoiding a fixed excluded digit
// set B. Two counting conventions exist and they disagree exactly when 0 is
// excluded: Padded treats every n < 10^k as a k-digit string with leading
// zeros, Genuine looks only at the digits actually written. Under Genuine the
// value 0 has expansion "0", so 0 is a member iff 0 is not excluded.

#include <cstdint>
#include <string>
#include <vector>

#include "digitsieve/util.hpp"

namespace digitsieve {

enum class DigitConvention { Padded, Genuine };

DigitConvention parse_convention(const std::string& s);  // "padded" | "genuine"
std::string convention_name(DigitConvention c);

class ExcludedDigits {
 public:
  // 1 <= |B| <= 8, digits in 0..9, duplicates rejected.
  explicit ExcludedDigits(const std::vector<int>& digits);
  static ExcludedDigits parse(const std::string& s);  // "0,5" or "05"

  bool excludes(int d) const { return mask_ >> d & 1; }
  int size() const { return count_; }
  const std::vector<int>& digits() const { return digits_; }    // ascending
  const std::vector<int>& allowed() const { return allowed_; }  // ascending
  std::string str() const;      // "{0,5}"
  std::string compact() const;  // "05", comma-free for CSV cells
  bool operator==(const ExcludedDigits& o) const { return mask_ == o.mask_; }

 private:
  uint32_t mask_ = 0;
  int count_ = 0;
  std::vector<int> digits_;
  std::vector<int> allowed_;
};

// Padded membership needs the padding length k (n < 10^k required); Genuine
// ignores k.
bool is_member(uint64_t n, const ExcludedDigits& B, DigitConvention conv, int k = -1);

// Number of members below 10^k. Padded: (10-|B|)^k. Genuine: leading digit
// can not be 0, plus the value 0 itself when 0 is allowed.
uint64_t count_below(int k, const ExcludedDigits& B, DigitConvention conv);

// All members <= limit, ascending. coprime_to != 0 additionally requires
// gcd(n, coprime_to) = 1, which silently drops n = 0 since gcd(0, m) = m.
// Padded enumeration needs the padding length k and enumerates n < 10^k
// intersected with [0, limit].
std::vector<uint64_t> enumerate_members(uint64_t limit, const ExcludedDigits& B,
                                        DigitConvention conv, uint64_t coprime_to = 0,
                                        int k = -1);

// Exact fraction of members below 10^k (genuine convention) coprime to 10.
// Only defined for singleton B = {b}; the answer is 4/9 when (b,10) != 1 and
// 3/9 when b is one of 1,3,7,9, independent of k >= 1.
Rational coprime_fraction_kappa(int k, const ExcludedDigits& B);

// gamma_B = log10(10 - |B|); the counting exponent of the restricted set.
double gamma_exponent(const ExcludedDigits& B);

}  // namespace digitsieve
