#include "doctest.h"
#include "radx/engine_odd.hpp"
#include "radx/errors.hpp"
#include "support/brute.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
}  // namespace

TEST_CASE("odd prime-power degrees") {
  CHECK(degree_odd_prime_power(over_q({RadicalQ::zeta(9)})) == 6);
  CHECK(degree_odd_prime_power(RadicalGroupSpec::roots_of_unity(BaseField::finite(8), 27)) == 6);
  CHECK(degree_odd_prime_power(over_q({canonicalize(2, 3)})) == 3);
  CHECK(degree_odd_prime_power(over_q({canonicalize(2, 9)})) == 9);
  // Q(zeta_9, 3^{1/3}) has degree 18 and the index is 27.
  auto g = over_q({RadicalQ::zeta(9), canonicalize(3, 3)});
  CHECK(degree_odd_prime_power(g) == 18);
  CHECK(ratio_odd_prime_power(g) == Rat(2, 3));
  // zeta_3 in K: Kummer case.
  auto k3 = RadicalGroupSpec::radicals(BaseField::cyclotomic(3), {RadicalQ::zeta(27)});
  CHECK(degree_odd_prime_power(k3) == 9);
  CHECK(ratio_odd_prime_power(k3) == 1);
}

TEST_CASE("odd prime-power ratios") {
  CHECK(ratio_odd_prime_power(over_q({RadicalQ::zeta(3)})) == Rat(2, 3));
  CHECK(ratio_odd_prime_power(RadicalGroupSpec::roots_of_unity(BaseField::finite(8), 27)) == Rat(2, 9));
  CHECK(ratio_odd_prime_power(over_q({canonicalize(2, 3)})) == 1);
  auto p = odd_profile(RadicalGroupSpec::roots_of_unity(BaseField::finite(8), 27), 3);
  CHECK(p.m == 3);
  CHECK(p.m0.value == 2);
  CHECK(p.d_p == 2);
  CHECK(p.index == 27);
}

TEST_CASE("m0") {
  CHECK(m0(BaseField::finite(2), 3).value == 1);
  CHECK(m0(BaseField::finite(8), 3).value == 2);
  CHECK(m0(BaseField::rationals(), 7).value == 1);
  CHECK_THROWS_AS(m0(BaseField::finite(7), 3), PreconditionError);
}

TEST_CASE("non prime-power exponents are rejected") {
  CHECK_THROWS_AS(degree_odd_prime_power(over_q({RadicalQ::zeta(15)})), PreconditionError);
  CHECK_THROWS_AS(degree_odd_prime_power(over_q({canonicalize(2, 4)})), PreconditionError);
}

TEST_CASE("finite fields agree with direct order computation") {
  for (u64 q = 2; q <= 200; ++q) {
    auto pp = prime_power(q);
    if (!pp) continue;
    BaseField f = BaseField::finite(q);
    for (u64 p : {3, 5, 7, 11}) {
      if (pp->first == p) continue;
      for (u64 pk = p; pk <= 2000; pk *= p) {
        for (u64 d : divisors(q - 1)) {
          u64 D = pk * d;
          if (D > 5000) continue;
          auto g = RadicalGroupSpec::roots_of_unity(f, D);
          if (g.exponent() == 1 || g.exponent() % p != 0) continue;
          OddProfile prof = odd_profile(g, p);
          REQUIRE(prof.degree == brute::finite_degree(q, D));
          REQUIRE(prof.ratio * Rat(prof.index) == Rat(prof.degree));
          REQUIRE(prof.ratio > 0);
          REQUIRE(prof.ratio <= 1);
          if (prof.zeta_p_in_K || !prof.zeta_p_in_GK) REQUIRE(prof.degree == prof.index);
        }
      }
    }
  }
}
