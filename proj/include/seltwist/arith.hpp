#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seltwist/bigint.hpp"
#include "seltwist/errors.hpp"

namespace seltwist {

using u128 = unsigned __int128;

// -------------------------------------------------------------------------
// modular arithmetic on up to 128-bit operands
// -------------------------------------------------------------------------
u128 mulmod_u128(u128 a, u128 b, u128 m);
u128 powmod_u128(u128 base, u128 exp, u128 m);

// Deterministic Miller-Rabin on the 13 smallest prime bases (covers all
// n < 3.3e24) with a strong Lucas test on top for larger inputs.
bool is_prime_u128(u128 n);
bool is_prime(const BigInt& n);

// -------------------------------------------------------------------------
// factorization
// -------------------------------------------------------------------------
struct Factorization {
  int sign = 1;                                    // +1 or -1
  std::vector<std::pair<BigInt, int>> factors;     // primes strictly increasing
  BigInt reconstruct() const;
  int exponent_of(const BigInt& p) const;          // 0 if p absent
};

// Complete factorization of n != 0.  Guaranteed for |n| <= 2^96; loudly
// refuses larger inputs instead of risking a wrong answer.
Factorization factorize(const BigInt& n);
Factorization factorize_i64(long long n);

// Largest k with p^k | n (n != 0, p prime).
int valuation(const BigInt& n, const BigInt& p);
int valuation_i64(long long n, long long p);

// The unique k-th-power-free d0 with d/d0 a k-th power of a positive rational.
BigInt power_free_rep(const BigInt& d, int k);

// -------------------------------------------------------------------------
// twist classes d in Q^x / Q^x6
// -------------------------------------------------------------------------
class TwistClass {
public:
  explicit TwistClass(const BigInt& d);      // normalizes to sixth-power-free
  explicit TwistClass(long long d) : TwistClass(BigInt(d)) {}

  const BigInt& value() const { return d_; }
  BigInt height() const { return d_.abs(); }
  int sign() const { return d_.sign(); }
  const Factorization& factorization() const { return fac_; }

private:
  BigInt d_;
  Factorization fac_;
};

// -------------------------------------------------------------------------
// p-adic unit-class predicates (closed-form residue tests, no Hensel loops)
// -------------------------------------------------------------------------
// d is a square in Q_p: v_p(d) even and (p odd: unit a QR mod p;
// p = 2: unit = 1 mod 8).
bool is_square_in_qp(const BigInt& d, const BigInt& p);
// d is a cube in Q_p: v_p(d) = 0 mod 3 and (p = 1 mod 3: unit^((p-1)/3) = 1;
// p = 2 mod 3 or p = 2: nothing; p = 3: unit = +-1 mod 9).
bool is_cube_in_qp(const BigInt& d, const BigInt& p);
bool is_sixth_power_in_qp(const BigInt& d, const BigInt& p);

// Unit-part helpers shared with the congruence machinery.
bool unit_is_square_mod_p(unsigned long long u_mod, unsigned long long p);  // odd p
bool unit_is_cube_mod_p(unsigned long long u_mod, unsigned long long p);    // p = 1 mod 3

// int64 fast paths (same semantics), used by enumeration kernels
bool is_square_in_qp_i64(long long d, long long p);
bool is_cube_in_qp_i64(long long d, long long p);

// primes <= bound, simple sieve
const std::vector<uint32_t>& small_primes();  // primes below 100000

}  // namespace seltwist
