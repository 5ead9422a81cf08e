#pragma once

#include <string>
#include <vector>

#include "seltwist/congruence.hpp"
#include "seltwist/curve.hpp"

namespace seltwist {

// An exact power of 3: local and global ratios live in 3^Z and are only ever
// manipulated through the exponent.
struct SelmerRatio {
  int exponent = 0;
  Rational as_rational() const { return pow3(exponent); }
  std::string to_string() const { return as_rational().to_string(); }
  friend bool operator==(const SelmerRatio& a, const SelmerRatio& b) {
    return a.exponent == b.exponent;
  }
};

// Arrows of the 3-isogeny diagram.  The composite pi factors three ways:
// PhiPrime after Phi, PsiPrime after Psi, EtaPrime after Eta.
enum class IsogenyId {
  Phi,
  PhiPrime,
  Psi,
  PsiPrime,
  Eta,
  EtaPrime,
  Pi,
  Theta,
  ThetaHatMinus3,
};
std::string isogeny_name(IsogenyId iso);

// A place of Q: a finite prime or the archimedean place.
struct Place {
  bool infinite = false;
  BigInt p;
  static Place at_infinity() { return {true, BigInt()}; }
  static Place finite(BigInt q) { return {false, std::move(q)}; }
  std::string to_string() const { return infinite ? "inf" : p.to_string(); }
};

// Local ratio of one of the four surface isogenies at a finite prime,
// for twist classes in the admissible set of the curve.  Dispatch:
//   p = 3            -> exponent 0 for Phi/PsiPrime, 1 for PhiPrime/Psi
//   p | d, p != 3    -> 0 (ramified quadratic character kills both sides);
//                       this branch wins when p divides both d and the
//                       conductor, where the table does not apply
//   p | conductor,
//   p not | 3d       -> the bad-reduction table (split/nonsplit after twist)
//   otherwise        -> 0
// Psi and PsiPrime are answered through the diagram symmetry
// c_p(psi) = c_p(phi'), c_p(psi') = c_p(phi).
SelmerRatio local_ratio(const CurveEab& c, IsogenyId iso, const TwistClass& d, const BigInt& p);

// Archimedean ratio: 1/3 for positive twists, 1 for negative (all five
// non-composite arrows).
SelmerRatio local_ratio_infty(IsogenyId iso, const TwistClass& d);

// Product over infinity, 3, conductor primes and primes dividing d.
SelmerRatio global_ratio(const CurveEab& c, IsogenyId iso, const TwistClass& d);

// The elliptic-curve route: c_p(theta_d) from the twisted reduction type and
// j-invariant valuations, with no reference to the table above.  dual=true
// returns the exponent of c_p(theta-hat at twist -3d) = -c_p(theta_{-3d}).
// Requires p | conductor, p not dividing 3d.
SelmerRatio theta_local_ratio(const CurveEab& c, const TwistClass& d, const BigInt& p, bool dual);

// Smallest m certified by the local kernel bounds with c(eta_d) >= 3^{-m}:
// counts the places in {3, infinity} union the conductor support where d is
// a local square.
int eta_exponent_bound(const CurveEab& c, const TwistClass& d);

enum class Parity { Even, Odd };
// Parity of the exponent of the global theta ratio (equals the phi ratio
// place by place on the admissible set); computed along the theta route.
Parity parity_of_theta(const CurveEab& c, const TwistClass& d);

// Places that can carry a nonzero local exponent for the given (c, d).
std::vector<Place> support_places(const CurveEab& c, const TwistClass& d);

// Membership guard shared by the operations above.
void require_in_sigma(const CurveEab& c, const TwistClass& d);

}  // namespace seltwist
