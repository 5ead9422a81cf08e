#include "seltwist/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace seltwist {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  unsigned long long m = v < 0 ? (~static_cast<unsigned long long>(v) + 1ull)
                               : static_cast<unsigned long long>(v);
  while (m > 0) {
    limbs_.push_back(static_cast<uint32_t>(m % kBase));
    m /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view s) {
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sg = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (!r.is_zero() && sg < 0) r.sign_ = -1;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.limbs_.size(); ++i) {
    uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    r.limbs_[i] = static_cast<uint32_t>(s % kBase);
    carry = s / kBase;
  }
  r.sign_ = 1;
  r.trim();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow -
                (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<uint32_t>(s);
  }
  r.sign_ = 1;
  r.trim();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.sign_ == b.sign_) {
    BigInt r = BigInt::add_mag(a, b);
    r.sign_ = a.sign_;
    return r;
  }
  int c = BigInt::cmp_mag(a, b);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
  r.sign_ = c > 0 ? a.sign_ : b.sign_;
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                     r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur % BigInt::kBase);
      carry = cur / BigInt::kBase;
    }
    size_t k = i + b.limbs_.size();
    while (carry > 0) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur % BigInt::kBase);
      carry = cur / BigInt::kBase;
      ++k;
    }
  }
  r.sign_ = a.sign_ * b.sign_;
  r.trim();
  return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) return {BigInt(), a};

  // Magnitude-only long division, limb at a time with binary search on the
  // trial digit.  Quadratic, fine at this project's sizes.
  BigInt q, rem;
  q.limbs_.assign(a.limbs_.size(), 0);
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    // rem = rem * base + limb
    rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
    rem.sign_ = 1;
    rem.trim();
    uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      uint32_t mid = lo + (hi - lo) / 2;
      BigInt t = b.abs() * BigInt(static_cast<long long>(mid));
      if (cmp_mag(t, rem) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    q.limbs_[i] = digit;
    if (digit != 0) rem = sub_mag(rem, b.abs() * BigInt(static_cast<long long>(digit)));
  }
  q.sign_ = 1;
  q.trim();
  if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
  if (!rem.is_zero()) rem.sign_ = a.sign_;
  return {q, rem};
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::pow(unsigned e) const {
  BigInt base = *this, r(1);
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

unsigned long long BigInt::mod_u64(unsigned long long m) const {
  if (m == 0) throw std::domain_error("BigInt: mod 0");
  unsigned __int128 r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) r = (r * kBase + limbs_[i]) % m;
  unsigned long long rr = static_cast<unsigned long long>(r);
  if (sign_ < 0 && rr != 0) rr = m - rr;
  return rr;
}

bool BigInt::fits_i64() const {
  static const BigInt kMin = BigInt::from_string("-9223372036854775808");
  static const BigInt kMax = BigInt::from_string("9223372036854775807");
  return *this >= kMin && *this <= kMax;
}

long long BigInt::to_i64() const {
  if (!fits_i64()) throw std::overflow_error("BigInt: does not fit int64");
  long long v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return sign_ < 0 ? -v : v;
}

bool BigInt::fits_u128_abs() const {
  // 2^128-1 has 39 decimal digits = 5 limbs of 9 digits; compare exactly.
  static const BigInt kMax = BigInt::from_string("340282366920938463463374607431768211455");
  return cmp_mag(*this, kMax) <= 0;
}

unsigned __int128 BigInt::to_u128_abs() const {
  if (!fits_u128_abs()) throw std::overflow_error("BigInt: does not fit uint128");
  unsigned __int128 v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

BigInt BigInt::from_u128(unsigned __int128 v, int sign) {
  BigInt r;
  while (v > 0) {
    r.limbs_.push_back(static_cast<uint32_t>(v % kBase));
    v /= kBase;
  }
  if (!r.limbs_.empty()) r.sign_ = sign < 0 ? -1 : 1;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.to_string();
}

}  // namespace seltwist
