#include <doctest.h>

#include <random>

#include "seltwist/oracle.hpp"
#include "seltwist/selmer.hpp"

using namespace seltwist;

TEST_CASE("local ratios at the dispatch boundaries") {
  CurveEab c(2, -1);

  // -1 = 4 mod 5 is a square unit, so at the 5-column of a^3-27b with
  // 5 = 2 mod 3 the table gives exponent 0 for phi and -1 for phi'
  CHECK(local_ratio(c, IsogenyId::Phi, TwistClass(-1), BigInt(5)).exponent == 0);
  CHECK(local_ratio(c, IsogenyId::PhiPrime, TwistClass(-1), BigInt(5)).exponent == -1);

  // at 3: always 0 for phi/psi' and 1 for phi'/psi
  for (long long d : {-1, 62, 27, -91}) {
    TwistClass t{BigInt(d)};
    CHECK(local_ratio(c, IsogenyId::Phi, t, BigInt(3)).exponent == 0);
    CHECK(local_ratio(c, IsogenyId::PsiPrime, t, BigInt(3)).exponent == 0);
    CHECK(local_ratio(c, IsogenyId::PhiPrime, t, BigInt(3)).exponent == 1);
    CHECK(local_ratio(c, IsogenyId::Psi, t, BigInt(3)).exponent == 1);
  }

  // good primes away from the twist contribute nothing
  CHECK(local_ratio(c, IsogenyId::Phi, TwistClass(-1), BigInt(11)).exponent == 0);
  CHECK(local_ratio(c, IsogenyId::PhiPrime, TwistClass(-1), BigInt(13)).exponent == 0);

  // primes dividing the twist contribute nothing
  CHECK(local_ratio(c, IsogenyId::Phi, TwistClass(35), BigInt(5)).exponent == 0);
  CHECK(local_ratio(c, IsogenyId::PhiPrime, TwistClass(35), BigInt(7)).exponent == 0);

  // outside the admissible set the rules are not proven; hard failure
  CHECK_THROWS_AS(local_ratio(c, IsogenyId::Phi, TwistClass(2), BigInt(5)),
                  SigmaMembershipError);
  CHECK_THROWS_AS(local_ratio(c, IsogenyId::Eta, TwistClass(-1), BigInt(5)), DomainError);
}

TEST_CASE("archimedean ratios") {
  CHECK(local_ratio_infty(IsogenyId::Phi, TwistClass(5)).exponent == -1);
  CHECK(local_ratio_infty(IsogenyId::Eta, TwistClass(-5)).exponent == 0);
  CHECK(local_ratio_infty(IsogenyId::Psi, TwistClass(7)).exponent == -1);
  CHECK(local_ratio_infty(IsogenyId::PhiPrime, TwistClass(-2)).exponent == 0);
  CHECK(local_ratio_infty(IsogenyId::Phi, TwistClass(5)).to_string() == "1/3");
  CHECK_THROWS_AS(local_ratio_infty(IsogenyId::Pi, TwistClass(5)), DomainError);
}

TEST_CASE("global ratios vanish on the twist set") {
  CurveEab c(2, -1);
  CongruenceSet tp = t_prime_set(c);
  for (long long d : enumerate_members(tp, 400)) {
    TwistClass t{BigInt(d)};
    CHECK(global_ratio(c, IsogenyId::Phi, t).exponent == 0);
    CHECK(global_ratio(c, IsogenyId::PhiPrime, t).exponent == 0);
    CHECK(global_ratio(c, IsogenyId::Psi, t).exponent == 0);
    CHECK(global_ratio(c, IsogenyId::PsiPrime, t).exponent == 0);
  }
  CHECK_THROWS_AS(global_ratio(c, IsogenyId::Eta, TwistClass(-1)), DomainError);
}

TEST_CASE("global ratios vanish when the sign witness is the prime 2") {
  // curves whose balancing prime is 2 exercise the mod-8 table rows and the
  // sign-scoped square conditions at 2
  for (auto [a, b] : {std::pair<long long, long long>{1, 1}, {5, -1}, {-11, 1}}) {
    CurveEab c(a, b);
    HypothesisCase h = hypothesis_case(c);
    REQUIRE(h.kind == HypothesisCase::Kind::Case1);
    REQUIRE(h.q == BigInt(2));
    CongruenceSet tp = t_prime_set(c);
    std::vector<long long> members = enumerate_members(tp, 4000);
    CHECK(!members.empty());
    for (long long d : members) {
      TwistClass t{BigInt(d)};
      for (IsogenyId iso :
           {IsogenyId::Phi, IsogenyId::PhiPrime, IsogenyId::Psi, IsogenyId::PsiPrime}) {
        REQUIRE(global_ratio(c, iso, t).exponent == 0);
      }
    }
  }

  // second hypothesis case with the even witness on the b side
  CurveEab c(13, 2);
  HypothesisCase h = hypothesis_case(c);
  REQUIRE(h.kind == HypothesisCase::Kind::Case2);
  REQUIRE(h.q1 == BigInt(2143));
  REQUIRE(h.q2 == BigInt(2));
  CongruenceSet tp = t_prime_set(c);
  std::vector<long long> members = enumerate_members(tp, 300000);
  CHECK(!members.empty());
  for (long long d : members) {
    TwistClass t{BigInt(d)};
    for (IsogenyId iso :
         {IsogenyId::Phi, IsogenyId::PhiPrime, IsogenyId::Psi, IsogenyId::PsiPrime}) {
      REQUIRE(global_ratio(c, iso, t).exponent == 0);
    }
  }
}

TEST_CASE("the four global ratios multiply consistently") {
  // c(phi) c(phi') = c(psi) c(psi'): both equal the composite arrow
  CurveEab c(2, -1);
  CongruenceSet sigma = sigma_set(c);
  for (long long d : enumerate_members(sigma, 300)) {
    TwistClass t{BigInt(d)};
    int lhs = global_ratio(c, IsogenyId::Phi, t).exponent +
              global_ratio(c, IsogenyId::PhiPrime, t).exponent;
    int rhs = global_ratio(c, IsogenyId::Psi, t).exponent +
              global_ratio(c, IsogenyId::PsiPrime, t).exponent;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("diagram symmetry at every place, sampled") {
  std::mt19937_64 rng(31);
  std::vector<CurveEab> pool = sample_curve_pool(12);
  int done = 0;
  while (done < 250) {
    const CurveEab& c = pool[rng() % pool.size()];
    long long d = sample_sigma_member(c, 20000, static_cast<unsigned>(rng()));
    if (d == 0) continue;
    TwistClass t{BigInt(d)};
    for (const Place& v : support_places(c, t)) {
      SelmerRatio phi, phip, psi, psip;
      if (v.infinite) {
        phi = local_ratio_infty(IsogenyId::Phi, t);
        phip = local_ratio_infty(IsogenyId::PhiPrime, t);
        psi = local_ratio_infty(IsogenyId::Psi, t);
        psip = local_ratio_infty(IsogenyId::PsiPrime, t);
      } else {
        phi = local_ratio(c, IsogenyId::Phi, t, v.p);
        phip = local_ratio(c, IsogenyId::PhiPrime, t, v.p);
        psi = local_ratio(c, IsogenyId::Psi, t, v.p);
        psip = local_ratio(c, IsogenyId::PsiPrime, t, v.p);
      }
      REQUIRE(phi == psip);
      REQUIRE(phip == psi);
    }
    ++done;
  }
}

TEST_CASE("theta route agrees with the table and with its dual form") {
  std::mt19937_64 rng(37);
  std::vector<CurveEab> pool = sample_curve_pool(10);
  int done = 0;
  while (done < 300) {
    const CurveEab& c = pool[rng() % pool.size()];
    long long d = sample_sigma_member(c, 20000, static_cast<unsigned>(rng()));
    if (d == 0) continue;
    TwistClass t{BigInt(d)};
    for (const BigInt& p : c.bad_primes()) {
      if ((t.value() % p).is_zero()) continue;
      SelmerRatio via_table = local_ratio(c, IsogenyId::Phi, t, p);
      SelmerRatio via_theta = theta_local_ratio(c, t, p, false);
      REQUIRE(via_table == via_theta);
      SelmerRatio via_table_dual = local_ratio(c, IsogenyId::PhiPrime, t, p);
      SelmerRatio via_theta_dual = theta_local_ratio(c, t, p, true);
      REQUIRE(via_table_dual == via_theta_dual);
      REQUIRE(via_theta == tamagawa_ratio_oracle(c, p, t));
    }
    ++done;
  }
  CurveEab c(2, -1);
  CHECK_THROWS_AS(theta_local_ratio(c, TwistClass(-1), BigInt(11), false), DomainError);
  CHECK_THROWS_AS(theta_local_ratio(c, TwistClass(35), BigInt(5), false), DomainError);
}

TEST_CASE("adding places away from everything changes no global ratio") {
  CurveEab c(2, -1);
  TwistClass t{BigInt(-1)};
  int base = global_ratio(c, IsogenyId::Phi, t).exponent;
  int padded = base;
  for (long long p : {11, 13, 17, 19, 101}) {
    padded += local_ratio(c, IsogenyId::Phi, t, BigInt(p)).exponent;
  }
  CHECK(base == padded);
}

TEST_CASE("eta exponent bound") {
  CurveEab c(2, -1);
  // d = -1: square at 3 (=8 mod 9? no: -1 = 2 mod 3 is a non-residue), at 5 yes, infinity no
  // compute expected by the definition
  auto expected = [&](long long d) {
    TwistClass t{BigInt(d)};
    int m = d > 0 ? 1 : 0;
    if (is_square_in_qp(BigInt(d), BigInt(3))) ++m;
    for (long long p : {5, 7})
      if (is_square_in_qp(BigInt(d), BigInt(p))) ++m;
    return m;
  };
  CongruenceSet tp = t_prime_set(c);
  int max_seen = 0;
  for (long long d : enumerate_members(tp, 2000)) {
    int m = eta_exponent_bound(c, TwistClass(BigInt(d)));
    CHECK(m == expected(d));
    CHECK(m <= 2);
    max_seen = std::max(max_seen, m);
  }
  CHECK(max_seen == 2);

  // members with no square place at all exist in the ambient set
  CongruenceSet sigma = sigma_set(c);
  bool found_zero = false;
  for (long long d : enumerate_members(sigma, 2000)) {
    if (eta_exponent_bound(c, TwistClass(BigInt(d))) == 0) {
      found_zero = true;
      CHECK(d < 0);
    }
  }
  CHECK(found_zero);
}

TEST_CASE("theta parity matches the table-route global exponent mod 2") {
  CurveEab c(2, -1);
  CongruenceSet sigma = sigma_set(c);
  bool saw_even = false, saw_odd = false;
  for (long long d : enumerate_members(sigma, 800)) {
    TwistClass t{BigInt(d)};
    int table_exp = global_ratio(c, IsogenyId::Phi, t).exponent;
    Parity p = parity_of_theta(c, t);
    CHECK(p == (table_exp % 2 == 0 ? Parity::Even : Parity::Odd));
    (p == Parity::Even ? saw_even : saw_odd) = true;
  }
  CHECK(saw_even);
  CHECK(saw_odd);
}

TEST_CASE("parity is even across the benchmark twist set") {
  CurveEab c(2, -1);
  CongruenceSet t = conductor35_explicit_t();
  for (long long d : enumerate_members(t, 1500)) {
    CHECK(parity_of_theta(c, TwistClass(BigInt(d))) == Parity::Even);
  }
}

TEST_CASE("selmer ratio formatting") {
  CHECK(SelmerRatio{0}.to_string() == "1");
  CHECK(SelmerRatio{1}.to_string() == "3");
  CHECK(SelmerRatio{-2}.to_string() == "1/9");
  CHECK(SelmerRatio{2}.as_rational() == Rational(9));
}
