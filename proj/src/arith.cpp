#include "seltwist/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace seltwist {

u128 mulmod_u128(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  if (m <= 0xFFFFFFFFFFFFFFFFull) return (a * b) % m;
  // Double-and-add; operands above 64 bits are rare enough that the simple
  // O(128) loop is fine.
  u128 r = 0;
  while (b > 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

u128 powmod_u128(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  u128 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u128(r, base, m);
    base = mulmod_u128(base, base, m);
    exp >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin_witness(u128 n, u128 a, u128 d, int s) {
  u128 x = powmod_u128(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u128(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

int jacobi_symbol(__int128 a, u128 n) {
  // n odd positive
  a %= static_cast<__int128>(n);
  if (a < 0) a += static_cast<__int128>(n);
  u128 ua = static_cast<u128>(a);
  int result = 1;
  while (ua != 0) {
    while ((ua & 1) == 0) {
      ua >>= 1;
      u128 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(ua, n);
    if ((ua & 3) == 3 && (n & 3) == 3) result = -result;
    ua %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_prp(u128 n) {
  // find D = 5, -7, 9, -11, ... with jacobi(D, n) = -1
  __int128 D = 5;
  while (true) {
    int j = jacobi_symbol(D, n);
    if (j == 0) return false;  // shares a factor with n
    if (j == -1) break;
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  // P = 1, Q = (1 - D) / 4
  __int128 Qi = (1 - D) / 4;
  u128 Q = Qi >= 0 ? static_cast<u128>(Qi) % n
                   : n - (static_cast<u128>(-Qi) % n);
  u128 Dmod = D >= 0 ? static_cast<u128>(D) % n : n - (static_cast<u128>(-D) % n);

  u128 d = n + 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  // Lucas sequences U_d, V_d via binary chain.
  u128 U = 1, V = 1;  // U_1, V_1 (P = 1)
  u128 Qk = Q;
  int bits = 0;
  u128 tmp = d;
  while (tmp > 1) {
    tmp >>= 1;
    ++bits;
  }
  u128 inv2 = (n + 1) >> 1;  // inverse of 2 mod odd n
  for (int i = bits - 1; i >= 0; --i) {
    // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
    U = mulmod_u128(U, V, n);
    V = mulmod_u128(V, V, n);
    V = (V + n - mulmod_u128(2, Qk, n) % n) % n;
    Qk = mulmod_u128(Qk, Qk, n);
    if ((d >> i) & 1) {
      // increment: U_{k+1} = (U + V)/2, V_{k+1} = (D U + V)/2
      u128 U2 = mulmod_u128((U + V) % n, inv2, n);
      u128 V2 = mulmod_u128((mulmod_u128(Dmod, U, n) + V) % n, inv2, n);
      U = U2;
      V = V2;
      Qk = mulmod_u128(Qk, Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (int i = 1; i < s; ++i) {
    V = mulmod_u128(V, V, n);
    V = (V + n - mulmod_u128(2, Qk, n) % n) % n;
    Qk = mulmod_u128(Qk, Qk, n);
    if (V == 0) return true;
  }
  return false;
}

constexpr u128 kMrDeterministicBound =
    (u128)3317044064ull * 1000000000000000ull;  // ~3.3e24, 13-base MR limit

}  // namespace

bool is_prime_u128(u128 n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (n % p == 0) return n == p;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases)
    if (miller_rabin_witness(n, a, d, s)) return false;
  if (n < kMrDeterministicBound) return true;
  return strong_lucas_prp(n);
}

bool is_prime(const BigInt& n) {
  if (n.sign() <= 0) return false;
  if (!n.fits_u128_abs()) throw FactorizationIncompleteError("primality test input exceeds supported range");
  return is_prime_u128(n.to_u128_abs());
}

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t bound = 100000;
    std::vector<bool> comp(bound + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= bound; ++i) {
      if (!comp[i]) {
        out.push_back(i);
        for (uint64_t j = static_cast<uint64_t>(i) * i; j <= bound; j += i) comp[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

namespace {

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of the rho method; deterministic retry schedule so the
// whole pipeline is reproducible.
u128 brent_rho(u128 n) {
  for (u128 c = 1;; ++c) {
    u128 x = 2, y = 2, d = 1;
    u128 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = (mulmod_u128(y, y, n) + c) % n;
      ++lam;
      u128 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = gcd_u128(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_u128_into(u128 n, std::map<u128, int>& out) {
  if (n == 1) return;
  if (is_prime_u128(n)) {
    out[n] += 1;
    return;
  }
  u128 d = brent_rho(n);
  factor_u128_into(d, out);
  factor_u128_into(n / d, out);
}

const u128 kFactorBound = u128(1) << 96;

}  // namespace

BigInt Factorization::reconstruct() const {
  BigInt r(sign);
  for (const auto& [p, e] : factors) r *= p.pow(static_cast<unsigned>(e));
  return r;
}

int Factorization::exponent_of(const BigInt& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Factorization factorize(const BigInt& n) {
  if (n.is_zero()) throw ZeroInputError();
  if (!n.fits_u128_abs() || n.to_u128_abs() > kFactorBound)
    throw FactorizationIncompleteError("factorization input exceeds the guaranteed 2^96 range");
  Factorization f;
  f.sign = n.sign();
  u128 m = n.to_u128_abs();
  std::map<u128, int> acc;
  if (m <= 0xFFFFFFFFFFFFFFFFull) {
    uint64_t m64 = static_cast<uint64_t>(m);
    for (uint32_t p : small_primes()) {
      if (static_cast<uint64_t>(p) * p > m64) break;
      while (m64 % p == 0) {
        acc[p] += 1;
        m64 /= p;
      }
    }
    m = m64;
  } else {
    for (uint32_t p : small_primes()) {
      if (static_cast<u128>(p) * p > m) break;
      while (m % p == 0) {
        acc[p] += 1;
        m /= p;
      }
    }
  }
  // The sieve runs to 10^5, so anything left below 10^10 is already prime.
  if (m > 1) {
    if (m < static_cast<u128>(10000000000ull))
      acc[m] += 1;
    else
      factor_u128_into(m, acc);
  }
  for (const auto& [p, e] : acc) f.factors.emplace_back(BigInt::from_u128(p, 1), e);
  return f;
}

Factorization factorize_i64(long long n) {
  if (n == 0) throw ZeroInputError();
  return factorize(BigInt(n));
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n.is_zero()) throw ZeroInputError();
  int v = 0;
  BigInt m = n;
  while (true) {
    auto [q, r] = BigInt::divmod(m, p);
    if (!r.is_zero()) break;
    m = q;
    ++v;
  }
  return v;
}

int valuation_i64(long long n, long long p) {
  if (n == 0) throw ZeroInputError();
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt power_free_rep(const BigInt& d, int k) {
  if (d.is_zero()) throw ZeroInputError();
  if (k <= 0) throw DomainError("power_free_rep: k must be positive");
  Factorization f = factorize(d);
  BigInt r(f.sign);
  for (const auto& [p, e] : f.factors) {
    int rem = e % k;
    if (rem > 0) r *= p.pow(static_cast<unsigned>(rem));
  }
  return r;
}

TwistClass::TwistClass(const BigInt& d) : d_(power_free_rep(d, 6)), fac_(factorize(d_)) {}

bool unit_is_square_mod_p(unsigned long long u_mod, unsigned long long p) {
  return powmod_u128(u_mod, (p - 1) / 2, p) == 1;
}

bool unit_is_cube_mod_p(unsigned long long u_mod, unsigned long long p) {
  return powmod_u128(u_mod, (p - 1) / 3, p) == 1;
}

namespace {

struct UnitPart {
  int v;
  unsigned long long u_mod;  // unit part of d reduced mod the given modulus
};

UnitPart unit_part_mod(const BigInt& d, const BigInt& p, unsigned long long modulus) {
  int v = valuation(d, p);
  BigInt unit = d;
  for (int i = 0; i < v; ++i) unit = unit / p;
  return {v, unit.mod_u64(modulus)};
}

}  // namespace

namespace {

unsigned long long prime_as_u64(const BigInt& p) {
  if (!p.fits_u128_abs() || p.to_u128_abs() > 0xFFFFFFFFFFFFFFFFull)
    throw DomainError("residue tests support primes below 2^64 only");
  return static_cast<unsigned long long>(p.to_u128_abs());
}

}  // namespace

bool is_square_in_qp(const BigInt& d, const BigInt& p) {
  if (d.is_zero()) throw ZeroInputError();
  if (p == BigInt(2)) {
    auto [v, u] = unit_part_mod(d, p, 8);
    return v % 2 == 0 && u == 1;
  }
  unsigned long long pp = prime_as_u64(p);
  auto [v, u] = unit_part_mod(d, p, pp);
  if (v % 2 != 0) return false;
  return unit_is_square_mod_p(u, pp);
}

bool is_cube_in_qp(const BigInt& d, const BigInt& p) {
  if (d.is_zero()) throw ZeroInputError();
  if (p == BigInt(3)) {
    auto [v, u] = unit_part_mod(d, p, 9);
    return v % 3 == 0 && (u == 1 || u == 8);
  }
  unsigned long long pp = prime_as_u64(p);
  auto [v, u] = unit_part_mod(d, p, pp);
  if (v % 3 != 0) return false;
  if (pp % 3 != 1) return true;  // p = 2 mod 3 and p = 2: every unit is a cube
  return unit_is_cube_mod_p(u, pp);
}

bool is_sixth_power_in_qp(const BigInt& d, const BigInt& p) {
  return is_square_in_qp(d, p) && is_cube_in_qp(d, p);
}

bool is_square_in_qp_i64(long long d, long long p) {
  if (d == 0) throw ZeroInputError();
  int v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) {
    long long u = ((d % 8) + 8) % 8;
    return u == 1;
  }
  unsigned long long u = static_cast<unsigned long long>(((d % p) + p) % p);
  return unit_is_square_mod_p(u, static_cast<unsigned long long>(p));
}

bool is_cube_in_qp_i64(long long d, long long p) {
  if (d == 0) throw ZeroInputError();
  int v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  if (v % 3 != 0) return false;
  if (p == 3) {
    long long u = ((d % 9) + 9) % 9;
    return u == 1 || u == 8;
  }
  if (p % 3 != 1) return true;
  unsigned long long u = static_cast<unsigned long long>(((d % p) + p) % p);
  return unit_is_cube_mod_p(u, static_cast<unsigned long long>(p));
}

}  // namespace seltwist
