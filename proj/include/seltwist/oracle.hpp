#pragma once

#include <set>
#include <string>
#include <vector>

#include "seltwist/congruence.hpp"
#include "seltwist/selmer.hpp"

namespace seltwist {

// Brute-force cross-checks, kept independent of the code paths they verify.

enum class PowerClass { Square, Cube, Sixth };

// Exhaustive image {u^e mod p^k : u a unit}; p^k <= 10^6.
std::set<long long> residue_class_oracle(long long p, int k, PowerClass e);

// Local ratio of theta at p computed purely from j-valuations and the twisted
// reduction type (no table): 0 if the twisted reduction is nonsplit, else the
// exponent of v_p(j(E'))/v_p(j(E)).  Requires p | conductor, p not | 3d.
SelmerRatio tamagawa_ratio_oracle(const CurveEab& c, const BigInt& p, const TwistClass& d);

// Exact membership count / (2X), the symmetric empirical density.  X <= 10^7.
Rational density_oracle(const CongruenceSet& s, long long X);

struct OracleMismatch {
  std::string input;
  std::string expected;
  std::string got;
};

struct OracleReport {
  long long checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Enumerated unit powers vs the closed-form predicates, all p <= p_bound with
// p^k <= pk_bound.
OracleReport run_residue_class_checks(long long p_bound, long long pk_bound);

// Table route vs theta route on random admissible (curve, p, d) triples.
OracleReport run_ratio_cross_checks(int trials, unsigned seed);

// Formula density vs enumeration for a few reference sets.
OracleReport run_density_checks(long long X, double tolerance);

// Deterministic pool of small valid curves for sampling.
std::vector<CurveEab> sample_curve_pool(int box);

// Random admissible twist for the curve within |d| <= height_bound, or 0.
long long sample_sigma_member(const CurveEab& c, long long height_bound, unsigned seed);

}  // namespace seltwist
