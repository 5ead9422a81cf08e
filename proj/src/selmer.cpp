#include "seltwist/selmer.hpp"

#include <algorithm>

namespace seltwist {

std::string isogeny_name(IsogenyId iso) {
  switch (iso) {
    case IsogenyId::Phi: return "phi";
    case IsogenyId::PhiPrime: return "phi_prime";
    case IsogenyId::Psi: return "psi";
    case IsogenyId::PsiPrime: return "psi_prime";
    case IsogenyId::Eta: return "eta";
    case IsogenyId::EtaPrime: return "eta_prime";
    case IsogenyId::Pi: return "pi";
    case IsogenyId::Theta: return "theta";
    case IsogenyId::ThetaHatMinus3: return "theta_hat_minus3";
  }
  return "?";
}

void require_in_sigma(const CurveEab& c, const TwistClass& d) {
  CongruenceSet sigma = sigma_set(c);
  if (sigma.contains(d)) return;
  // name the violated condition for the caller
  std::vector<int> g = sigma.effective_vals();
  for (const auto& [p, e] : d.factorization().factors) {
    if (std::find(g.begin(), g.end(), e) == g.end())
      throw SigmaMembershipError("valuation " + std::to_string(e) + " at " + p.to_string() +
                                 " outside {0,1,3,5}");
  }
  for (const auto& cond : sigma.conditions) {
    if (!cond.matches(d))
      throw SigmaMembershipError(cond.serialize());
  }
  throw SigmaMembershipError("unknown");
}

namespace {

// Exponent table for the bad-reduction primes (p | conductor, p not dividing
// 3d).  Rows select on p and the square classes of d and -3d; columns on
// whether p divides a^3-27b or b.  Values are log_3 of the local ratio.
struct TableEntry {
  int phi;
  int phi_prime;
};

TableEntry table_entry(const CurveEab& c, const BigInt& p, const TwistClass& d) {
  bool col_a = c.divides_a3m27b(p);
  bool col_b = c.divides_b(p);
  if (col_a == col_b)
    throw DomainError("internal: table column is not unique at p=" + p.to_string());

  auto pick = [&](TableEntry a_col, TableEntry b_col) { return col_a ? a_col : b_col; };

  if (p == BigInt(2)) {
    bool dsq = is_square_in_qp(d.value(), p);
    bool m3dsq = is_square_in_qp(BigInt(-3) * d.value(), p);
    if (dsq && m3dsq) throw DomainError("internal: d and -3d cannot both be squares at 2");
    if (dsq) return pick({0, -1}, {-1, 0});
    if (m3dsq) return pick({1, 0}, {0, 1});
    return pick({0, 0}, {0, 0});
  }
  bool dsq = is_square_in_qp(d.value(), p);
  if (p.mod_u64(3) == 1) {
    if (dsq) return pick({1, -1}, {-1, 1});
    return pick({0, 0}, {0, 0});
  }
  // p = 2 mod 3
  if (dsq) return pick({0, -1}, {-1, 0});
  return pick({1, 0}, {0, 1});
}

bool is_bad_prime(const CurveEab& c, const BigInt& p) {
  const auto& bad = c.bad_primes();
  return std::binary_search(bad.begin(), bad.end(), p);
}

}  // namespace

SelmerRatio local_ratio(const CurveEab& c, IsogenyId iso, const TwistClass& d, const BigInt& p) {
  if (iso != IsogenyId::Phi && iso != IsogenyId::PhiPrime && iso != IsogenyId::Psi &&
      iso != IsogenyId::PsiPrime)
    throw DomainError("local_ratio covers phi, phi', psi, psi' only");
  require_in_sigma(c, d);

  // diagram symmetry: psi' matches phi and psi matches phi'
  bool want_phi = iso == IsogenyId::Phi || iso == IsogenyId::PsiPrime;

  if (p == BigInt(3)) return {want_phi ? 0 : 1};
  if ((d.value() % p).is_zero()) return {0};
  if (is_bad_prime(c, p)) {
    TableEntry e = table_entry(c, p, d);
    return {want_phi ? e.phi : e.phi_prime};
  }
  return {0};
}

SelmerRatio local_ratio_infty(IsogenyId iso, const TwistClass& d) {
  switch (iso) {
    case IsogenyId::Phi:
    case IsogenyId::PhiPrime:
    case IsogenyId::Psi:
    case IsogenyId::PsiPrime:
    case IsogenyId::Eta:
      return {d.sign() > 0 ? -1 : 0};
    default:
      throw DomainError("archimedean ratio covers the five single arrows only");
  }
}

std::vector<Place> support_places(const CurveEab& c, const TwistClass& d) {
  std::vector<Place> places;
  places.push_back(Place::at_infinity());
  std::vector<BigInt> primes = c.bad_primes();
  primes.push_back(BigInt(3));
  for (const auto& [p, e] : d.factorization().factors) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto& p : primes) places.push_back(Place::finite(p));
  return places;
}

SelmerRatio global_ratio(const CurveEab& c, IsogenyId iso, const TwistClass& d) {
  if (iso != IsogenyId::Phi && iso != IsogenyId::PhiPrime && iso != IsogenyId::Psi &&
      iso != IsogenyId::PsiPrime)
    throw DomainError("global_ratio covers phi, phi', psi, psi' only");
  int total = 0;
  for (const Place& v : support_places(c, d)) {
    if (v.infinite)
      total += local_ratio_infty(iso, d).exponent;
    else
      total += local_ratio(c, iso, d, v.p).exponent;
  }
  return {total};
}

SelmerRatio theta_local_ratio(const CurveEab& c, const TwistClass& d, const BigInt& p, bool dual) {
  if (!is_bad_prime(c, p)) throw DomainError("theta ratio defined at conductor primes only");
  if (p == BigInt(3) || (d.value() % p).is_zero())
    throw DomainError("theta ratio needs p not dividing 3d");

  BigInt twist_val = dual ? BigInt(-3) * d.value() : d.value();
  TwistClass twisted(twist_val);

  // A ramified unit twist (only the classes 3,7 mod 8 at p = 2) makes the
  // reduction additive; both Tamagawa numbers are then at most 4, so a ratio
  // lying in 3^Z must be 1.
  if (!twist_unramified_at(p, twisted)) return {0};

  int exponent = 0;
  if (c.twisted_reduction_type(p, twisted) == ReductionKind::SplitMultiplicative) {
    auto [j_e, j_ep] = c.j_invariants();
    int ve = valuation_rat(j_e, p);
    int vep = valuation_rat(j_ep, p);
    if (vep == 3 * ve)
      exponent = 1;
    else if (ve == 3 * vep)
      exponent = -1;
    else
      throw DomainError("internal: j-valuations are not in ratio 3 at p=" + p.to_string());
  }
  return {dual ? -exponent : exponent};
}

int eta_exponent_bound(const CurveEab& c, const TwistClass& d) {
  require_in_sigma(c, d);
  int m = d.sign() > 0 ? 1 : 0;
  if (is_square_in_qp(d.value(), BigInt(3))) ++m;
  for (const BigInt& p : c.bad_primes())
    if (is_square_in_qp(d.value(), p)) ++m;
  return m;
}

Parity parity_of_theta(const CurveEab& c, const TwistClass& d) {
  require_in_sigma(c, d);
  int total = d.sign() > 0 ? -1 : 0;  // archimedean, as for phi
  for (const BigInt& p : c.bad_primes()) {
    if ((d.value() % p).is_zero()) continue;  // ramified twist: ratio is 1
    total += theta_local_ratio(c, d, p, false).exponent;
  }
  // contributions at 3 and at p | d are exactly 0
  return total % 2 == 0 ? Parity::Even : Parity::Odd;
}

}  // namespace seltwist
