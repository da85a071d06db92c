#include "doctest.h"
#include "radx/engine_main.hpp"
#include "radx/errors.hpp"
#include "support/brute.hpp"
#include "support/instances.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
RadicalGroupSpec mu(u64 q, u64 d) { return RadicalGroupSpec::roots_of_unity(BaseField::finite(q), d); }
}  // namespace

TEST_CASE("z") {
  CHECK(compute_z(over_q({RadicalQ::zeta(3)})) == 3);
  CHECK(compute_z(over_q({canonicalize(2, 3)})) == 1);
  CHECK(compute_z(mu(2, 9)) == 3);
  CHECK(compute_z(over_q({RadicalQ::zeta(3), RadicalQ::zeta(5)})) == 15);
}

TEST_CASE("Kneser conditions") {
  auto k = kneser_applies(over_q({canonicalize(2, 3), canonicalize(5, 7)}));
  CHECK(k.applies);
  k = kneser_applies(over_q({RadicalQ::zeta(3)}));
  CHECK_FALSE(k.applies);
  CHECK(k.prime == 3);
  k = kneser_applies(over_q({one_plus_zeta4()}));
  CHECK_FALSE(k.applies);
  CHECK(k.one_plus_zeta4);
  // 1 - zeta_4 = zeta_8^{-1} sqrt2 is detected as well.
  CHECK_FALSE(kneser_applies(over_q({RadicalQ(Rat(7, 8), {{2, Rat(1, 2)}})})).applies);
}

TEST_CASE("Kummer degrees") {
  CHECK(kummer_degree(mu(13, 12)) == 1);
  CHECK(kummer_degree(mu(13, 36)) == 3);
  CHECK(kummer_degree(over_q({canonicalize(4, 2)})) == 1);
  CHECK_THROWS_AS(kummer_degree(over_q({RadicalQ::zeta(3)})), PreconditionError);
}

TEST_CASE("main ratio and degree") {
  CHECK(ratio_main(over_q({RadicalQ::zeta(3)})) == Rat(2, 3));
  auto r = analyze(over_q({one_plus_zeta4()}));
  CHECK(r.ratio == Rat(1, 2));
  CHECK(r.Delta == 1);
  CHECK(r.intersections.odd_order == 1);
  CHECK(r.intersections.even_order == 1);
  CHECK(ratio_main(mu(8, 27)) == Rat(2, 9));
  CHECK(degree_main(over_q({RadicalQ::zeta(9)})) == 6);
  CHECK(degree_main(over_q({RadicalQ::zeta(3), RadicalQ::zeta(5)})) == 8);
  CHECK(ratio_main(over_q({RadicalQ::zeta(3), RadicalQ::zeta(5)})) == Rat(8, 15));
  CHECK(degree_main(over_q({one_plus_zeta4(), canonicalize(2, 8)})) == 16);
}

TEST_CASE("divisibility") {
  CHECK(divisibility_check(analyze(over_q({RadicalQ::zeta(9)}))));
  CHECK(divisibility_check(analyze(over_q({canonicalize(2, 3)}))));
  CHECK(divisibility_check(analyze(mu(8, 27))));
}

TEST_CASE("necessity scan") {
  CHECK(necessity_scan({over_q({RadicalQ::zeta(3)})}));
  CHECK(necessity_scan({over_q({one_plus_zeta4()})}));
  CHECK(necessity_scan({over_q({canonicalize(2, 3)})}));
}

TEST_CASE("curated characteristic 0 degrees") {
  for (const auto& c : curated::char0_known()) {
    INFO(c.g.describe());
    AnalysisReport r = analyze(c.g);
    CHECK(r.index == c.index);
    CHECK(r.degree == c.degree);
    CHECK(r.ratio * Rat(r.index) == Rat(r.degree));
  }
}

TEST_CASE("n = 1 short circuit") {
  auto r = analyze(over_q({RadicalQ::rational(-2)}));
  CHECK(r.ctx.n == 1);
  CHECK(r.degree == 1);
  CHECK(r.relations.empty());
}

TEST_CASE("finite fields against direct order computation") {
  for (u64 q = 2; q <= 64; ++q) {
    auto pp = prime_power(q);
    if (!pp) continue;
    for (u64 d = 1; d <= 400; ++d) {
      if (d % pp->first == 0) continue;
      AnalysisReport r = analyze(mu(q, d));
      REQUIRE(r.degree == brute::finite_degree(q, d));
      REQUIRE(divisibility_check(r));
    }
  }
}

TEST_CASE("full intersections over finite fields") {
  // mu_63 over F_4: zeta_3 in K, and K(zeta_7) = F_64 also holds zeta_9.
  auto r = analyze(mu(4, 63));
  CHECK(r.degree == 3);
  CHECK(r.intersections.odd_order == 21);
  CHECK(r.intersections.formula_odd_order == 7);
  // mu_320 over F_17: zeta_16 in K, and K(zeta_5) = F_{17^4} holds zeta_64.
  r = analyze(mu(17, 320));
  CHECK(r.degree == 4);
  CHECK(r.intersections.even_order == 4);
  CHECK(r.intersections.formula_even_order == 2);
}

TEST_CASE("characteristic dividing n is unsupported") {
  CHECK_THROWS_AS(mu(9, 6), UnsupportedInstance);
}
