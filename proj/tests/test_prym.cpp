#include <doctest.h>

#include <cmath>
#include <random>

#include "seltwist/prym.hpp"

using namespace seltwist;

TEST_CASE("prym family validation and default bad primes") {
  PrymFamily f{BigInt(2), BigInt(1)};
  CHECK(f.bad_primes == std::vector<BigInt>{BigInt(2), BigInt(3)});
  CHECK(f.bad_primes_default);

  PrymFamily g{BigInt(5), BigInt(2)};  // 6*5*2*3*7 = 2 3 5 7
  CHECK(g.bad_primes == std::vector<BigInt>{BigInt(2), BigInt(3), BigInt(5), BigInt(7)});

  CHECK_THROWS_AS(PrymFamily(BigInt(1), BigInt(2)), DomainError);
  CHECK_THROWS_AS(PrymFamily(BigInt(2), BigInt(0)), DomainError);
  CHECK_THROWS_AS(PrymFamily(BigInt(3), BigInt(1), {BigInt(4)}), DomainError);
}

TEST_CASE("prym admissible set") {
  PrymFamily f{BigInt(2), BigInt(1)};
  CongruenceSet sigma = prym_sigma(f);
  CHECK(sigma.ambient == Ambient::Squarefree);
  REQUIRE(sigma.conditions.size() == 2);  // at 2 and at 3

  // membership agrees with the defining double non-square condition
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    long long d = static_cast<long long>(rng() % 4000) + 1;
    if (rng() & 1) d = -d;
    TwistClass t{BigInt(d)};
    if (t.value() != BigInt(d)) continue;
    bool squarefree = true;
    for (const auto& [p, e] : t.factorization().factors)
      if (e > 1) squarefree = false;
    bool expected = squarefree;
    for (long long p : {2, 3}) {
      expected = expected && !is_square_in_qp(BigInt(d), BigInt(p)) &&
                 !is_square_in_qp(BigInt(-3) * BigInt(d), BigInt(p));
    }
    CHECK(sigma.contains(BigInt(d)) == expected);
  }

  // a square unit at 2 is excluded
  CHECK_FALSE(sigma.contains(BigInt(17)));  // 17 = 1 mod 8
  CHECK(density(sigma).relative > Rational(0));

  // density matches enumeration
  Density dens = density(sigma);
  long long X = 100000;
  long long count = count_members(sigma, X);
  double empirical = static_cast<double>(count) / (2.0 * X);
  CHECK(std::fabs(empirical - dens.approx()) / dens.approx() < 0.05);
}

TEST_CASE("scenario enumeration") {
  std::vector<C3Scenario> sc = enumerate_scenarios();
  CHECK(sc.size() == 6);
  for (const C3Scenario& s : sc) CHECK(s.sum() == 2);
  // all distinct
  for (size_t i = 0; i < sc.size(); ++i)
    for (size_t j = i + 1; j < sc.size(); ++j) CHECK(sc[i].e != sc[j].e);
}

TEST_CASE("prym local ratios") {
  PrymFamily f{BigInt(2), BigInt(1)};
  CongruenceSet sigma = prym_sigma(f);
  std::vector<long long> members = enumerate_members(sigma, 500);
  REQUIRE(!members.empty());
  bool saw_pos = false, saw_neg = false;
  for (long long d : members) {
    TwistClass t{BigInt(d)};
    for (long long p : {7, 11, 13, 5}) {
      auto r = prym_local_ratio(f, IsogenyId::Phi, t, Place::finite(BigInt(p)));
      REQUIRE(r.has_value());
      CHECK(r->exponent == 0);
    }
    auto at3 = prym_local_ratio(f, IsogenyId::Phi, t, Place::finite(BigInt(3)));
    CHECK_FALSE(at3.has_value());  // unknown at 3
    auto inf = prym_local_ratio(f, IsogenyId::PhiPrime, t, Place::at_infinity());
    REQUIRE(inf.has_value());
    CHECK(inf->exponent == (d > 0 ? -1 : 0));
    (d > 0 ? saw_pos : saw_neg) = true;
  }
  CHECK(saw_pos);
  CHECK(saw_neg);

  CHECK_THROWS_AS(prym_local_ratio(f, IsogenyId::Phi, TwistClass(17), Place::finite(BigInt(7))),
                  SigmaMembershipError);
  CHECK_THROWS_AS(
      prym_local_ratio(f, IsogenyId::Eta, TwistClass(members[0]), Place::finite(BigInt(7))),
      DomainError);
}

TEST_CASE("scenario table parsing") {
  ScenarioOracle ok = parse_scenario_table("5,1,1,0,0\n-7,1,0,1,0\n# comment\n\n11,0,0,1,1\n");
  CHECK(ok.size() == 3);
  CHECK(ok.at(5).e == std::array<int, 4>{1, 1, 0, 0});

  CHECK_THROWS_AS(parse_scenario_table("5,1,1,1,0\n"), ScenarioFileError);   // sum 3
  CHECK_THROWS_AS(parse_scenario_table("5,1,1\n"), ScenarioFileError);       // short row
  CHECK_THROWS_AS(parse_scenario_table("5,1,x,0,0\n"), ScenarioFileError);   // not an integer
  CHECK_THROWS_AS(parse_scenario_table("5,2,0,0,0\n"), ScenarioFileError);   // exponent not 0/1
}

TEST_CASE("two-branch certificate") {
  PrymFamily f{BigInt(2), BigInt(1)};
  PrymCertificate cert = scenario_analysis(f, std::nullopt);
  CHECK(cert.conditional);
  CHECK(cert.branch_a.proportion == Rational(1, 3));
  CHECK(cert.branch_a.half + cert.branch_a.five_sixths - Rational(1) == Rational(1, 3));
  CHECK(cert.branch_b.positive_case.s0_lb == Rational(1, 6));
  CHECK(cert.branch_b.negative_case.s0_lb == Rational(1, 2));
  CHECK(cert.scenarios.size() == 6);
  CHECK(cert.sigma_density.relative > Rational(0));

  // the sign flip is negative and a square unit at every relevant prime
  BigInt k = cert.branch_b.sign_flip_k;
  CHECK(k.sign() < 0);
  CHECK(k == BigInt(-71));  // 1 - 72 for bad primes {2, 3}
  for (long long p : {2, 3}) {
    CHECK(is_square_in_qp(k, BigInt(p)));
  }

  // flipping preserves the defining non-square conditions and changes sign
  CongruenceSet sigma = prym_sigma(f);
  for (long long d : enumerate_members(sigma, 300)) {
    BigInt flipped = BigInt(d) * k;
    CHECK(flipped.sign() == -BigInt(d).sign());
    for (long long p : {2, 3}) {
      CHECK(is_square_in_qp(flipped, BigInt(p)) == is_square_in_qp(BigInt(d), BigInt(p)));
      CHECK(is_square_in_qp(BigInt(-3) * flipped, BigInt(p)) ==
            is_square_in_qp(BigInt(-3) * BigInt(d), BigInt(p)));
    }
  }
}

TEST_CASE("certificate with a scenario oracle resolves branches") {
  PrymFamily f{BigInt(2), BigInt(1)};
  ScenarioOracle oracle = parse_scenario_table("5,1,0,0,1\n-7,1,1,0,0\n11,0,0,1,1\n");
  PrymCertificate cert = scenario_analysis(f, oracle);
  CHECK_FALSE(cert.conditional);
  REQUIRE(cert.oracle_resolution.size() == 3);
  // resolutions are keyed in twist order: -7, 5, 11
  CHECK(cert.oracle_resolution[0].first == -7);
  CHECK(cert.oracle_resolution[0].second.find("branch B") != std::string::npos);
  CHECK(cert.oracle_resolution[1].second.find("branch A") != std::string::npos);
  CHECK(cert.oracle_resolution[2].second.find("d < 0") != std::string::npos);
}

TEST_CASE("larger family with custom bad primes") {
  PrymFamily f{BigInt(7), BigInt(2), {BigInt(2), BigInt(3), BigInt(5), BigInt(7)}};
  CHECK_FALSE(f.bad_primes_default);
  CongruenceSet sigma = prym_sigma(f);
  REQUIRE(sigma.conditions.size() == 4);
  // at p = 3 mod 3 ... the 5-condition forces 5 | d since -3 is a non-square mod 5
  const LocalCondition* at5 = condition_at(sigma, BigInt(5), true);
  REQUIRE(at5 != nullptr);
  for (long long d : enumerate_members(sigma, 2000)) CHECK(d % 5 == 0);
  BigInt k = sign_flip_multiplier(f);
  CHECK(k == BigInt(1) - BigInt(72) * BigInt(5) * BigInt(7));
}
