#pragma once

#include <array>
#include <vector>

#include "seltwist/arith.hpp"
#include "seltwist/rational.hpp"

namespace seltwist {

enum class ReductionKind { Good, SplitMultiplicative, NonsplitMultiplicative };

// The curve y^2 + a*x*y + b*y = x^3 with (0,0) a rational 3-torsion point.
// Validated on construction: gcd(a,b) = 1, 3 does not divide ab, and the
// discriminant b^3(a^3 - 27b) is nonzero.  The model is minimal away from 3
// (it is semistable there), so v_p(Delta) = -v_p(j) at every bad prime.
// Immutable after construction; the bad-prime set is computed up front so
// concurrent use needs no synchronization.
class CurveEab {
public:
  CurveEab(BigInt a, BigInt b);
  CurveEab(long long a, long long b) : CurveEab(BigInt(a), BigInt(b)) {}

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  BigInt a_cubed_minus_27b() const { return a_.pow(3) - BigInt(27) * b_; }
  BigInt discriminant() const { return b_.pow(3) * a_cubed_minus_27b(); }
  BigInt c4() const { return a_ * (a_.pow(3) - BigInt(24) * b_); }
  BigInt c6() const { return a_.pow(6).negated() + BigInt(36) * a_.pow(3) * b_ - BigInt(216) * b_ * b_; }

  // (j(E), j(E')) for the 3-isogenous pair, as exact rationals.
  std::pair<Rational, Rational> j_invariants() const;

  // Primes dividing b(a^3 - 27b); never contains 3.  Sorted ascending.
  const std::vector<BigInt>& bad_primes() const;

  ReductionKind reduction_type(const BigInt& p) const;
  // Reduction of the quadratic twist E_d at p.  Defined only when the twist
  // character is unramified at p (then it preserves or swaps the
  // split/nonsplit kind); rejects p | d, and at p = 2 the classes 3,7 mod 8,
  // where the twist turns multiplicative reduction additive.
  ReductionKind twisted_reduction_type(const BigInt& p, const TwistClass& d) const;

  bool divides_b(const BigInt& p) const;
  bool divides_a3m27b(const BigInt& p) const;

private:
  BigInt a_, b_;
  std::vector<BigInt> bad_primes_;
};

// Data of the genus-2 companion y^2 = x^6 + alpha*x^3 + 1 and its two
// symmetric elliptic quotients y^2 = x^3 + (3x + 2 +- alpha)^2.
struct Genus2Model {
  Rational alpha;                       // 108 b / a^3 - 2
  std::array<Rational, 4> e_plus_rhs;   // coefficients c0..c3 of the plus cubic
  std::array<Rational, 4> e_minus_rhs;  // same with alpha -> -alpha
};
Genus2Model genus2_model(const CurveEab& c);

// j-invariant of y^2 = x^3 + a2 x^2 + a4 x + a6 (test oracle for the
// symmetric models).
Rational j_of_cubic(const Rational& a2, const Rational& a4, const Rational& a6);

struct HypothesisCase {
  enum class Kind { Case1, Case2, None };
  Kind kind = Kind::None;
  BigInt q;        // Case1 witness, q = 2 mod 3, q | a^3-27b
  BigInt q1, q2;   // Case2 witnesses, q1 = 1 mod 3 | a^3-27b, q2 = 2 mod 3 | b
  bool holds() const { return kind != Kind::None; }
};
HypothesisCase hypothesis_case(const CurveEab& c);

// Tamagawa number of the d-twist at a multiplicative prime p (p not dividing
// 3d): split -> v_p of the minimal discriminant = -v_p(j); nonsplit -> 2 if
// v_p(j) is even, else 1.  eprime selects the isogenous curve's j.
BigInt tamagawa_number(const CurveEab& c, const BigInt& p, const TwistClass& d, bool eprime);

// v_p of an exact rational (v_p(num) - v_p(den)).
int valuation_rat(const Rational& x, const BigInt& p);

// Whether the quadratic character of d is unramified at p: p does not divide
// d, and at p = 2 additionally d = 1 or 5 mod 8.
bool twist_unramified_at(const BigInt& p, const TwistClass& d);

}  // namespace seltwist
