#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seltwist {

// Signed arbitrary-precision integer, sign-magnitude with base-10^9 limbs.
// Values in this project are small (a few hundred bits at most); clarity and
// exactness matter more than speed here.  Hot loops use int64 paths instead.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

  BigInt abs() const;
  BigInt negated() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division: quotient rounds toward zero, remainder has the
  // dividend's sign.  Divisor must be nonzero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt pow(unsigned e) const;
  static BigInt gcd(BigInt a, BigInt b);

  // Nonnegative residue of the signed value modulo m (m > 0).
  unsigned long long mod_u64(unsigned long long m) const;

  bool fits_i64() const;
  long long to_i64() const;  // throws std::overflow_error if out of range
  bool fits_u128_abs() const;
  unsigned __int128 to_u128_abs() const;  // |value|; throws if too large
  static BigInt from_u128(unsigned __int128 v, int sign);

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
  static constexpr uint32_t kBase = 1000000000u;
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // little-endian base 10^9; empty iff zero

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
};

}  // namespace seltwist
