#include "seltwist/curve.hpp"

#include <algorithm>

namespace seltwist {

CurveEab::CurveEab(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (BigInt::gcd(a_, b_) != BigInt(1))
    throw CurveError(CurveError::Reason::GcdNotOne, "a and b must be coprime");
  if ((a_ * b_).mod_u64(3) == 0)
    throw CurveError(CurveError::Reason::DivisibleByThree, "3 must not divide ab");
  if (discriminant().is_zero())
    throw CurveError(CurveError::Reason::SingularModel, "discriminant b^3(a^3-27b) vanishes");
  for (const BigInt& n : {b_, a_cubed_minus_27b()}) {
    if (n.abs().is_one()) continue;
    for (const auto& [p, e] : factorize(n).factors) bad_primes_.push_back(p);
  }
  std::sort(bad_primes_.begin(), bad_primes_.end());
  bad_primes_.erase(std::unique(bad_primes_.begin(), bad_primes_.end()), bad_primes_.end());
}

std::pair<Rational, Rational> CurveEab::j_invariants() const {
  BigInt a3 = a_.pow(3);
  Rational j_e(a3 * (a3 - BigInt(24) * b_).pow(3), discriminant());
  Rational j_ep(a3 * (a3 + BigInt(216) * b_).pow(3), b_ * a_cubed_minus_27b().pow(3));
  return {j_e, j_ep};
}

const std::vector<BigInt>& CurveEab::bad_primes() const { return bad_primes_; }

bool CurveEab::divides_b(const BigInt& p) const { return (b_ % p).is_zero(); }
bool CurveEab::divides_a3m27b(const BigInt& p) const { return (a_cubed_minus_27b() % p).is_zero(); }

ReductionKind CurveEab::reduction_type(const BigInt& p) const {
  bool in_b = divides_b(p);
  bool in_a = divides_a3m27b(p);
  if (!in_b && !in_a) return ReductionKind::Good;
  if (in_b && in_a)
    throw DomainError("internal: a prime divides both b and a^3-27b despite gcd(a,b)=1");
  if (p == BigInt(2)) {
    // split iff -c4/c6 = 1 mod 8; for odd x, 1/x = x mod 8
    unsigned long long r = ((8 - c4().mod_u64(8)) * c6().mod_u64(8)) % 8;
    return r == 1 ? ReductionKind::SplitMultiplicative : ReductionKind::NonsplitMultiplicative;
  }
  if (in_b) return ReductionKind::SplitMultiplicative;
  // p | a^3-27b: the node's slopes live in Q_p(sqrt(-3))
  return p.mod_u64(3) == 1 ? ReductionKind::SplitMultiplicative
                           : ReductionKind::NonsplitMultiplicative;
}

bool twist_unramified_at(const BigInt& p, const TwistClass& d) {
  if ((d.value() % p).is_zero()) return false;
  if (p == BigInt(2)) {
    unsigned long long r = d.value().mod_u64(8);
    return r == 1 || r == 5;
  }
  return true;
}

ReductionKind CurveEab::twisted_reduction_type(const BigInt& p, const TwistClass& d) const {
  if (!twist_unramified_at(p, d))
    throw DomainError("twisted reduction rule needs an unramified twist at p");
  ReductionKind base = reduction_type(p);
  if (base == ReductionKind::Good || is_square_in_qp(d.value(), p)) return base;
  return base == ReductionKind::SplitMultiplicative ? ReductionKind::NonsplitMultiplicative
                                                    : ReductionKind::SplitMultiplicative;
}

Genus2Model genus2_model(const CurveEab& c) {
  Genus2Model m;
  m.alpha = Rational(BigInt(108) * c.b(), c.a().pow(3)) - Rational(2);
  auto rhs = [](const Rational& al) {
    // x^3 + (3x + 2 + al)^2 = x^3 + 9x^2 + 6(2+al)x + (2+al)^2
    Rational t = Rational(2) + al;
    return std::array<Rational, 4>{t * t, Rational(6) * t, Rational(9), Rational(1)};
  };
  m.e_plus_rhs = rhs(m.alpha);
  m.e_minus_rhs = rhs(m.alpha.negated());
  return m;
}

Rational j_of_cubic(const Rational& a2, const Rational& a4, const Rational& a6) {
  Rational b2 = Rational(4) * a2;
  Rational b4 = Rational(2) * a4;
  Rational b6 = Rational(4) * a6;
  Rational b8 = Rational(4) * a2 * a6 - a4 * a4;
  Rational c4 = b2 * b2 - Rational(24) * b4;
  Rational disc = Rational(-1) * b2 * b2 * b8 - Rational(8) * b4.pow(3) -
                  Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
  if (disc.is_zero()) throw DomainError("singular cubic");
  return c4.pow(3) / disc;
}

HypothesisCase hypothesis_case(const CurveEab& c) {
  HypothesisCase h;
  Factorization fa = factorize(c.a_cubed_minus_27b());
  for (const auto& [p, e] : fa.factors) {
    if (p.mod_u64(3) == 2) {
      h.kind = HypothesisCase::Kind::Case1;
      h.q = p;
      return h;
    }
  }
  BigInt q1, q2;
  for (const auto& [p, e] : fa.factors) {
    if (p.mod_u64(3) == 1) {
      q1 = p;
      break;
    }
  }
  if (!q1.is_zero() && !c.b().abs().is_one()) {
    for (const auto& [p, e] : factorize(c.b()).factors) {
      if (p.mod_u64(3) == 2) {
        q2 = p;
        break;
      }
    }
  }
  if (!q1.is_zero() && !q2.is_zero()) {
    h.kind = HypothesisCase::Kind::Case2;
    h.q1 = q1;
    h.q2 = q2;
  }
  return h;
}

int valuation_rat(const Rational& x, const BigInt& p) {
  if (x.is_zero()) throw ZeroInputError();
  return valuation(x.num(), p) - valuation(x.den(), p);
}

BigInt tamagawa_number(const CurveEab& c, const BigInt& p, const TwistClass& d, bool eprime) {
  if (p == BigInt(3) || (d.value() % p).is_zero())
    throw DomainError("tamagawa_number covers only p not dividing 3d");
  if (!twist_unramified_at(p, d))
    throw DomainError("tamagawa_number needs the twist unramified at p (multiplicative twist)");
  if (c.reduction_type(p) == ReductionKind::Good)
    throw DomainError("tamagawa_number needs multiplicative reduction at p");
  auto [j_e, j_ep] = c.j_invariants();
  int vj = valuation_rat(eprime ? j_ep : j_e, p);
  // split/nonsplit is an isogeny invariant, so the twist of E decides for E' too
  ReductionKind kind = c.twisted_reduction_type(p, d);
  if (kind == ReductionKind::SplitMultiplicative) return BigInt(-vj);
  return BigInt(vj % 2 == 0 ? 2 : 1);
}

}  // namespace seltwist
