#pragma once

#include <string>
#include <vector>

#include "seltwist/arith.hpp"
#include "seltwist/curve.hpp"
#include "seltwist/rational.hpp"

namespace seltwist {

enum class Ambient { Squarefree, SixthPowerFree };
enum class SignScope { All, Pos, Neg };

// One local constraint at a prime.  Each kind is a self-contained predicate
// on a sixth-power-free twist class d and carries its own exact local measure,
// so membership, density and the worst-case square analysis all read off the
// same data.
enum class CondKind {
  Vals,                // v_p(d) in a given subset of {0..5}
  Units,               // p does not divide d and d mod M(p) in a residue set
  DivOrUnits,          // p | d, or d mod M(p) in a residue set
  Div,                 // p | d (yes) / p does not divide d (no)
  Square,              // d in Q_p^x2  (yes/no)
  SquareM3,            // -3d in Q_p^x2  (yes/no)
  Cube,                // d in Q_p^x3  (yes/no)
  Sixth,               // d in Q_p^x6  (yes/no)
  NonsquarePair,       // d and -3d both outside Q_p^x2
  CubeOrDiv,           // p | d, or the unit d is a cube in Z_p
  CubeNonsquareOrDiv,  // p | d, or the unit d is a cube and a non-square
};

struct LocalCondition {
  BigInt prime;
  CondKind kind = CondKind::Vals;
  SignScope scope = SignScope::All;
  std::vector<int> vals = {};            // Vals only
  std::vector<long long> residues = {};  // Units / DivOrUnits, sorted, mod modulus()
  bool yes = true;                       // Div / Square / SquareM3 / Cube / Sixth

  // Canonical residue modulus: 8 at p=2, 27 at p=3, p otherwise.
  long long modulus() const;
  long long unit_count() const;  // units modulo modulus()

  bool matches(const TwistClass& d) const;  // predicate only; scope is the caller's job

  // Exact local measure of {condition and v_p in g} under P(v_p = j) = (1-1/p)/p^j.
  Rational measure(const std::vector<int>& g) const;
  // Whether some admissible cell makes d a p-adic square (drives the
  // worst-case eta analysis).
  bool square_achievable(const std::vector<int>& g) const;

  std::string serialize() const;
  static LocalCondition parse_line(const std::string& line);
};

struct CongruenceSet {
  Ambient ambient = Ambient::SixthPowerFree;
  std::vector<int> global_vals = {0, 1, 2, 3, 4, 5};  // valuation set imposed at every prime
  std::vector<LocalCondition> conditions;             // sorted by (prime, scope)

  std::vector<int> effective_vals() const;  // global_vals clipped by the ambient

  bool contains(const TwistClass& d) const;
  bool contains(const BigInt& d) const;  // normalizes to the twist class first

  void canonicalize();  // sort; reject duplicate (prime, branch) constraints

  std::string serialize() const;
  static CongruenceSet parse(const std::string& text);
};

// The admissible twist classes for a curve: valuations in {0,1,3,5}
// everywhere, d a cube in Q_3, and at each bad prime either p | d or the
// unit is a p-adic cube.
CongruenceSet sigma_set(const CurveEab& c);

// The congruence-defined subset of sigma on which all four global ratios are
// 1, built from the curve's hypothesis case.  Throws HypothesisNoneError.
CongruenceSet t_prime_set(const CurveEab& c);

// The explicit squarefree benchmark set for the conductor-35 curve (2,-1):
// d = +-1, +-8, +-10 mod 27; d = -1 or 0 mod 7; d = +-1 mod 5 when d < 0 and
// +-2 mod 5 when d > 0.
CongruenceSet conductor35_explicit_t();

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------
struct Density {
  Rational relative;  // exact rational factor relative to the ambient below
  Ambient ambient = Ambient::SixthPowerFree;
  std::vector<int> global_vals;
  // Numeric value of the ambient density (6/pi^2 for unrestricted squarefree,
  // 1/zeta(6) for sixth-power-free, truncated Euler product when global_vals
  // restricts every prime).
  double ambient_constant() const;
  double approx() const;
};
Density density(const CongruenceSet& s);

// ---------------------------------------------------------------------------
// enumeration (the parallel kernel; *_serial are the reference loops)
// ---------------------------------------------------------------------------
// All members with height <= bound, ordered by (height, negative before
// positive).  bound must stay below the sieve limit (20 million).
std::vector<long long> enumerate_members(const CongruenceSet& s, long long bound);
std::vector<long long> enumerate_members_serial(const CongruenceSet& s, long long bound);
long long count_members(const CongruenceSet& s, long long bound);
long long count_members_serial(const CongruenceSet& s, long long bound);

// Condition applying at p for twists of the given sign, nullptr if none.
const LocalCondition* condition_at(const CongruenceSet& s, const BigInt& p, bool positive);
// Whether the sign branch has positive measure at every constrained prime.
bool branch_satisfiable(const CongruenceSet& s, bool positive);

}  // namespace seltwist
