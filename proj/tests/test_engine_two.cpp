#include "doctest.h"
#include "radx/engine_two.hpp"
#include "radx/errors.hpp"
#include "support/brute.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
RadicalQ sqrt2() { return RadicalQ(Rat(0), {{2, Rat(1, 2)}}); }
}  // namespace

TEST_CASE("Schinzel's element") {
  auto a = schinzel_a(BaseField::rationals(), 2);
  CHECK(a.kind == SchinzelCase::MinusXi);
  CHECK(*a.value == -4);
  a = schinzel_a(BaseField::rationals(), 3);
  CHECK(a.kind == SchinzelCase::PlusXi);
  CHECK(*a.value == 16);
  a = schinzel_a(BaseField::finite(7), 2);
  CHECK(a.kind == SchinzelCase::MinusOne);
  CHECK(*a.value == -1);
  CHECK_THROWS_AS(schinzel_a(BaseField::finite(5), 2), PreconditionError);
}

TEST_CASE("nontriviality of a") {
  CHECK(a_nontrivial(BaseField::rationals(), 3));
  CHECK(a_nontrivial(BaseField::finite(7), 2));
  CHECK_FALSE(a_nontrivial(BaseField::finite(7), 4));
  // Direct check over F_7: xi_8 = zeta_8 + zeta_8^{-1} satisfies xi^2 = 2, so
  // xi_8 in {3, 4}; a = (xi_8 + 2)^8 must be a 16th power.
  for (u64 xi : {3, 4}) {
    u64 a = 1;
    for (int i = 0; i < 8; ++i) a = a * (xi + 2) % 7;
    bool found = false;
    for (u64 x = 1; x < 7; ++x) {
      u64 y = 1;
      for (int i = 0; i < 16; ++i) y = y * x % 7;
      found = found || y == a;
    }
    CHECK(found);
  }
}

TEST_CASE("Rybowicz delta") {
  CHECK(rybowicz_delta(over_q({one_plus_zeta4()})) == Rat(1, 2));
  CHECK(rybowicz_delta(over_q({canonicalize(2, 4)})) == 1);
  CHECK(rybowicz_delta(over_q({one_plus_zeta4(), canonicalize(2, 8)})) == Rat(1, 2));
  CHECK(rybowicz_delta(over_q({canonicalize(2, 8)})) == 1);
  CHECK_THROWS_AS(rybowicz_delta(over_q({sqrt2()})), PreconditionError);
}

TEST_CASE("substitute group H") {
  auto h = substitute_H(over_q({one_plus_zeta4()}));
  CHECK(h.generators().size() == 2);
  CHECK(h.generators()[0] == one_plus_zeta4());
  CHECK(h.generators()[1] == RadicalQ::zeta(4));
  auto hf = substitute_H(RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24));
  CHECK(hf.group_order() == 8);
  auto h2 = substitute_H(over_q({canonicalize(2, 4)}));
  CHECK(mu_order(h2, 64) == 2);
  // (1 + zeta_4)^2 = zeta_4 (2 + xi_4) with xi_4 = 0.
  CHECK(one_plus_zeta4().pow(2) == RadicalQ::zeta(4) * RadicalQ::rational(2));
}

TEST_CASE("two-adic ratios") {
  CHECK(ratio_two(RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24)) == Rat(1, 2));
  CHECK(ratio_two(over_q({one_plus_zeta4()})) == Rat(1, 2));
  auto p = two_adic_profile(over_q({one_plus_zeta4(), canonicalize(2, 8)}));
  CHECK(p.ratio == Rat(1, 2));
  CHECK(p.degree == 16);
  CHECK(p.index == 32);
  CHECK(p.table_row == 4);
  // zeta_8 = (1+i)/2^{1/2} lies in G Q^x, so m_bar = m = 3.
  CHECK(p.m_bar == 3);
  CHECK(p.m == 3);
}

TEST_CASE("known degrees over Q and Q(zeta_3)") {
  struct Case {
    std::vector<RadicalQ> gens;
    u64 z;
    int degree;
    int index;
  };
  std::vector<Case> cases = {
      {{canonicalize(2, 4)}, 1, 4, 4},     {{RadicalQ::zeta(8)}, 1, 4, 4},  {{RadicalQ::zeta(16)}, 1, 8, 8},
      {{one_plus_zeta4()}, 1, 2, 4},       {{canonicalize(-2, 4)}, 1, 4, 4}, {{canonicalize(-4, 8)}, 1, 4, 8},
      {{canonicalize(2, 8)}, 1, 8, 8},     {{one_plus_zeta4()}, 3, 2, 4},   {{RadicalQ::zeta(8)}, 3, 4, 4},
      {{canonicalize(3, 4)}, 3, 4, 4},
  };
  for (const auto& c : cases) {
    auto g = RadicalGroupSpec::radicals(BaseField::cyclotomic(c.z), c.gens);
    auto p = two_adic_profile(g);
    INFO(g.describe());
    CHECK(p.degree == c.degree);
    CHECK(p.index == c.index);
  }
}

TEST_CASE("capital Delta") {
  CHECK(capital_delta(over_q({one_plus_zeta4()}), 1) == 1);
  CHECK(capital_delta(over_q({canonicalize(2, 4)}), 1) == 0);
  CHECK(capital_delta(over_q({RadicalQ::zeta(3), sqrt2()}), 3) == 0);
  CHECK(capital_delta(RadicalGroupSpec::roots_of_unity(BaseField::finite(9), 16), 1) == 0);
  std::optional<TwoAdicProfile> prof;
  CHECK(capital_delta(over_q({one_plus_zeta4()}), 1, &prof) == 1);
  REQUIRE(prof);
  CHECK(prof->table_row == 2);
}

TEST_CASE("finite fields agree with direct order computation") {
  int checked = 0;
  for (u64 q = 3; q <= 200; q += 2) {
    if (!prime_power(q) || q % 4 != 3) continue;
    BaseField f = BaseField::finite(q);
    for (u64 pk = 4; pk <= 4096; pk *= 2) {
      for (u64 d : divisors(q - 1)) {
        u64 D = pk * d;
        if (D > 5000) continue;
        auto g = RadicalGroupSpec::roots_of_unity(f, D);
        u64 n = g.exponent();
        if (n < 4 || (n & (n - 1)) != 0) continue;
        TwoAdicProfile p = two_adic_profile(g);
        REQUIRE(p.degree == brute::finite_degree(q, D));
        REQUIRE(p.ratio.get_num() == 1);
        REQUIRE(p.ratio <= 1);
        REQUIRE((p.delta == 1 || p.delta == Rat(1, 2)));
        REQUIRE(mu_order(g, p.h->group_order()) == p.h->group_order());
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
