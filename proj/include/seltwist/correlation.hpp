#pragma once

#include <string>
#include <vector>

#include "seltwist/congruence.hpp"
#include "seltwist/selmer.hpp"

namespace seltwist {

// The min/max exchange bound: from avg #Sel(eta) >= 1 + 3^-m over the twist
// set, the proportion s0 of twists where both Selmer groups vanish satisfies
// s0 + 3(1 - s0) <= 3 - 3^-m, i.e. s0 >= 3^-m / 2.
struct CorrelationCertificate {
  int m = 0;
  Rational avg_min_lb;  // 1 + 3^-m
  Rational avg_max_ub;  // 3 - 3^-m
  Rational s0_lb;       // 3^-m / 2
};
CorrelationCertificate correlation_bound(int m);

struct SampleCheck {
  long long d;
  int phi, phi_prime, psi, psi_prime;  // global exponents, all 0 on the twist set
};

struct AnalysisReport {
  BigInt a, b;
  HypothesisCase hypothesis;
  CongruenceSet t_prime;
  int eta_exponent = 0;        // m, the certified worst case over the set
  bool eta_exponent_exact = true;  // closed form over the congruence data
  int eta_exponent_sampled = 0;    // max over the verified samples
  CorrelationCertificate certificate;
  Rational relative_proportion_lb;  // = s0_lb, relative to the twist set
  Density t_prime_density;
  Rational absolute_lb_relative;  // s0_lb * density.relative (same ambient scaling)
  long long sample_height = 0;
  long long samples_checked = 0;
  std::vector<SampleCheck> sample_verification;  // a capped prefix, for the report
  std::vector<std::pair<std::string, std::string>> narrative;  // (claim, basis)
};

// End-to-end pipeline: hypothesis case, twist-set construction, ratio
// verification on every member up to sample_height, worst-case eta exponent,
// and the proportion certificate.  Throws HypothesisNoneError or
// RatioNotOneError.
AnalysisReport analyze(const CurveEab& c, long long sample_height);

// Worst case of eta_exponent_bound over a congruence set, from its local
// data (per sign branch, summing the achievable square indicators).
int eta_exponent_sup(const CurveEab& c, const CongruenceSet& s);

struct ParityReport {
  Parity parity;
  std::vector<std::pair<std::string, std::string>> narrative;
};
ParityReport parity_report(const CurveEab& c, const TwistClass& d);

}  // namespace seltwist
