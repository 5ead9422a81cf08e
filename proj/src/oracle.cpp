#include "seltwist/oracle.hpp"

#include <cmath>
#include <random>

namespace seltwist {

namespace {

std::vector<char> residue_class_bitmap(long long p, int k, PowerClass e) {
  long long pk = 1;
  for (int i = 0; i < k; ++i) {
    pk *= p;
    if (pk > 1000000) throw DomainError("residue oracle supports p^k <= 10^6");
  }
  int exp = e == PowerClass::Square ? 2 : e == PowerClass::Cube ? 3 : 6;
  std::vector<char> image(pk, 0);
  for (long long u = 1; u < pk; ++u) {
    if (u % p == 0) continue;
    // operands stay below 10^6, so plain 64-bit products suffice
    long long acc = 1;
    for (int i = 0; i < exp; ++i) acc = (acc * u) % pk;
    image[acc] = 1;
  }
  return image;
}

}  // namespace

std::set<long long> residue_class_oracle(long long p, int k, PowerClass e) {
  std::vector<char> bm = residue_class_bitmap(p, k, e);
  std::set<long long> image;
  for (long long r = 0; r < static_cast<long long>(bm.size()); ++r)
    if (bm[r]) image.insert(r);
  return image;
}

SelmerRatio tamagawa_ratio_oracle(const CurveEab& c, const BigInt& p, const TwistClass& d) {
  const auto& bad = c.bad_primes();
  if (!std::binary_search(bad.begin(), bad.end(), p))
    throw DomainError("oracle defined at conductor primes only");
  if (p == BigInt(3) || (d.value() % p).is_zero())
    throw DomainError("oracle needs p not dividing 3d");
  // ramified twist: additive reduction, Tamagawa numbers at most 4, ratio 1
  if (!twist_unramified_at(p, d)) return {0};
  if (c.twisted_reduction_type(p, d) == ReductionKind::NonsplitMultiplicative) return {0};
  auto [j_e, j_ep] = c.j_invariants();
  int ve = valuation_rat(j_e, p);
  int vep = valuation_rat(j_ep, p);
  if (vep == 3 * ve) return {1};
  if (ve == 3 * vep) return {-1};
  throw DomainError("internal: unexpected j-valuation ratio");
}

Rational density_oracle(const CongruenceSet& s, long long X) {
  if (X <= 0 || X > 10000000) throw DomainError("density oracle supports 0 < X <= 10^7");
  return Rational(count_members(s, X), 2 * X);
}

OracleReport run_residue_class_checks(long long p_bound, long long pk_bound) {
  OracleReport rep;
  for (uint32_t p : small_primes()) {
    if (p > p_bound) break;
    // The predicates only read u modulo a small modulus; tabulate them there
    // so the sweep is a lookup per unit.
    long long table_mod = p == 2 ? 8 : p == 3 ? 9 : p;
    std::vector<char> sq_tab(table_mod, 0), cube_tab(table_mod, 0);
    for (long long u = 1; u < table_mod; ++u) {
      if (u % p == 0) continue;
      sq_tab[u] = is_square_in_qp_i64(u, p);
      cube_tab[u] = is_cube_in_qp_i64(u, p);
    }
    long long pk = p;
    for (int k = 1; pk <= pk_bound; ++k, pk *= p) {
      for (PowerClass pc : {PowerClass::Square, PowerClass::Cube, PowerClass::Sixth}) {
        // A residue mod p^k decides the Z_p class except for cube classes
        // mod 3 (those need mod 9) and square classes mod 2 and 4.
        bool decisive = !(p == 3 && k == 1 && pc != PowerClass::Square) &&
                        !(p == 2 && k < 3 && pc != PowerClass::Cube);
        if (!decisive) continue;
        std::vector<char> image = residue_class_bitmap(p, k, pc);
        for (long long u = 1; u < pk; ++u) {
          if (u % p == 0) continue;
          long long um = u % table_mod;
          bool pred = false;
          switch (pc) {
            case PowerClass::Square: pred = sq_tab[um]; break;
            case PowerClass::Cube: pred = cube_tab[um]; break;
            case PowerClass::Sixth: pred = sq_tab[um] && cube_tab[um]; break;
          }
          bool enumerated = image[u] != 0;
          ++rep.checked;
          if (pred != enumerated) {
            rep.mismatches.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                          " u=" + std::to_string(u) +
                                          " class=" + std::to_string(static_cast<int>(pc)),
                                      enumerated ? "power" : "non-power",
                                      pred ? "power" : "non-power"});
          }
        }
      }
    }
  }
  return rep;
}

std::vector<CurveEab> sample_curve_pool(int box) {
  std::vector<CurveEab> pool;
  for (int a = -box; a <= box; ++a) {
    for (int b = -box; b <= box; ++b) {
      if (b == 0) continue;
      try {
        pool.emplace_back(BigInt(a), BigInt(b));
      } catch (const CurveError&) {
        continue;
      }
    }
  }
  return pool;
}

long long sample_sigma_member(const CurveEab& c, long long height_bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  CongruenceSet sigma = sigma_set(c);
  std::uniform_int_distribution<long long> dist(1, height_bound);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    long long h = dist(rng);
    long long d = (rng() & 1) ? h : -h;
    try {
      TwistClass t{BigInt(d)};
      if (t.value() != BigInt(d)) continue;  // stay on canonical representatives
      if (sigma.contains(t)) return d;
    } catch (const Error&) {
      continue;
    }
  }
  return 0;
}

OracleReport run_ratio_cross_checks(int trials, unsigned seed) {
  OracleReport rep;
  std::mt19937_64 rng(seed);
  std::vector<CurveEab> pool = sample_curve_pool(15);
  int done = 0;
  int guard = 0;
  while (done < trials && guard < trials * 100) {
    ++guard;
    const CurveEab& c = pool[rng() % pool.size()];
    long long d = sample_sigma_member(c, 50000, static_cast<unsigned>(rng()));
    if (d == 0) continue;
    TwistClass t{BigInt(d)};
    // conductor primes not dividing 3d
    std::vector<BigInt> eligible;
    for (const BigInt& p : c.bad_primes())
      if (!(t.value() % p).is_zero()) eligible.push_back(p);
    if (eligible.empty()) continue;
    const BigInt& p = eligible[rng() % eligible.size()];
    SelmerRatio table = local_ratio(c, IsogenyId::Phi, t, p);
    SelmerRatio oracle = tamagawa_ratio_oracle(c, p, t);
    ++rep.checked;
    ++done;
    if (!(table == oracle)) {
      rep.mismatches.push_back({"a=" + c.a().to_string() + " b=" + c.b().to_string() +
                                    " d=" + std::to_string(d) + " p=" + p.to_string(),
                                oracle.to_string(), table.to_string()});
    }
  }
  return rep;
}

OracleReport run_density_checks(long long X, double tolerance) {
  OracleReport rep;
  auto check = [&](const std::string& name, const CongruenceSet& s, double expected,
                   double tol) {
    Rational emp = density_oracle(s, X);
    ++rep.checked;
    double rel = std::fabs(emp.to_double() - expected) / expected;
    if (rel > tol)
      rep.mismatches.push_back({name, std::to_string(expected), emp.to_double() == 0.0
                                                                    ? "0"
                                                                    : std::to_string(emp.to_double())});
  };

  const double pi = 3.14159265358979323846;
  CongruenceSet squarefree;
  squarefree.ambient = Ambient::Squarefree;
  check("squarefree ambient", squarefree, 6.0 / (pi * pi), 0.005);

  CongruenceSet spf;
  spf.ambient = Ambient::SixthPowerFree;
  double zeta6 = std::pow(pi, 6) / 945.0;
  check("sixth-power-free ambient", spf, 1.0 / zeta6, 0.005);

  CongruenceSet t = conductor35_explicit_t();
  check("conductor-35 benchmark set", t, density(t).approx(), tolerance);
  return rep;
}

}  // namespace seltwist
