#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seltwist/congruence.hpp"
#include "seltwist/correlation.hpp"
#include "seltwist/selmer.hpp"

namespace seltwist {

// Twist family of Prym surfaces attached to y^3 = (x^2 - d a^2)(x^2 - d b^2),
// a > b > 0.  The bad-prime set defaults to the primes dividing
// 6ab(a-b)(a+b), an over-approximation of the true conductor support; an
// over-approximation only shrinks the admissible set and keeps every local
// claim valid.
struct PrymFamily {
  BigInt a, b;
  std::vector<BigInt> bad_primes;  // sorted, includes 2 and 3
  bool bad_primes_default = true;

  PrymFamily(BigInt a_in, BigInt b_in);
  PrymFamily(BigInt a_in, BigInt b_in, std::vector<BigInt> bad);
};

// Squarefree d with d and -3d both non-squares in Q_p at 3 and at every bad
// prime.
CongruenceSet prym_sigma(const PrymFamily& f);

// Exponent quadruple of (c_3(phi_d), c_3(phi'_d), c_3(phi_{-27d}),
// c_3(phi'_{-27d})); each entry 0 or 1 and the sum is exactly 2, because the
// four ratios are integers multiplying to 9.
struct C3Scenario {
  std::array<int, 4> e;
  int sum() const { return e[0] + e[1] + e[2] + e[3]; }
};
std::vector<C3Scenario> enumerate_scenarios();  // the 6 admissible quadruples

// Local ratio for the surface isogenies: 0 at every finite p != 3, the sign
// rule at infinity, and unknown at 3 (only the quadruple constraint is
// available there).  nullopt = unknown.
std::optional<SelmerRatio> prym_local_ratio(const PrymFamily& f, IsogenyId iso,
                                            const TwistClass& d, const Place& v);

// d -> scenario table, parsed from "d,e1,e2,e3,e4" lines.
using ScenarioOracle = std::map<long long, C3Scenario>;
ScenarioOracle parse_scenario_table(const std::string& text);  // throws ScenarioFileError

struct PrymBranchA {
  Rational half;            // vanishing proportion input for the small arrow
  Rational five_sixths;     // dimension <= 1 proportion input for the other
  Rational proportion;      // 5/6 + 1/2 - 1 = 1/3
};

struct PrymBranchB {
  // all-equal pattern with c_3 = 3 on both arrows: flip to d > 0, m = 1
  CorrelationCertificate positive_case;
  // all-equal pattern with c_3 = 1: d < 0, m = 0
  CorrelationCertificate negative_case;
  BigInt sign_flip_k;  // negative, a square unit at 3 and every bad prime
};

struct PrymCertificate {
  PrymFamily family;
  CongruenceSet sigma;
  Density sigma_density;
  std::vector<C3Scenario> scenarios;
  PrymBranchA branch_a;
  PrymBranchB branch_b;
  bool conditional = true;  // both branches emitted when no oracle decides
  std::vector<std::pair<long long, std::string>> oracle_resolution;  // d -> branch tag
  std::vector<std::pair<std::string, std::string>> narrative;
};

// The two-branch certificate; when an oracle is supplied, each listed twist
// is resolved to its branch.  Malformed quadruples throw ScenarioFileError.
PrymCertificate scenario_analysis(const PrymFamily& f,
                                  const std::optional<ScenarioOracle>& oracle);

// The sign-flip multiplier used by branch B: k < 0, k a square unit at 3 and
// at every bad prime of the family.
BigInt sign_flip_multiplier(const PrymFamily& f);

}  // namespace seltwist
