#include <random>

#include "doctest.h"
#include "radx/errors.hpp"
#include "radx/model.hpp"
#include "support/brute.hpp"

using namespace radx;

namespace {

BaseField Q = BaseField::rationals();

RadicalQ rad(const Rat& twist, std::map<u64, Rat> exps) { return RadicalQ(twist, exps); }

brute::QClass to_class(const RadicalQ& a) {
  std::map<std::uint64_t, mpq_class> e(a.exps().begin(), a.exps().end());
  return brute::normalize(a.twist(), e);
}

}  // namespace

TEST_CASE("canonicalize examples") {
  RadicalQ a = canonicalize(2, 8);
  CHECK(a.twist() == 0);
  CHECK(a.exp(2) == Rat(1, 8));
  RadicalQ b = canonicalize(-5, 4);
  CHECK(b.twist() == Rat(1, 8));
  CHECK(b.exp(5) == Rat(1, 4));
  RadicalQ c = canonicalize(-27, 3);
  CHECK(c.twist() == Rat(1, 6));
  CHECK(c.exp(3) == 1);
  // cube of the principal root gives back -27
  CHECK(c.pow(3).as_rational() == Rat(-27));
  CHECK_THROWS_AS(canonicalize(0, 3), PreconditionError);
}

TEST_CASE("canonicalize round trip") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 60);
  std::uniform_int_distribution<unsigned> deg(1, 12);
  for (int i = 0; i < 500; ++i) {
    long a = num(rng);
    if (a == 0) continue;
    Rat v(a, den(rng));
    v.canonicalize();
    u64 d = deg(rng);
    RadicalQ r = canonicalize(v, d);
    REQUIRE(r.pow(static_cast<long long>(d)).as_rational() == v);
  }
}

TEST_CASE("minimal exponent and index examples") {
  CHECK(minimal_exponent(RadicalGroupSpec::radicals(Q, {RadicalQ::zeta(3)})) == 3);
  CHECK(minimal_exponent(RadicalGroupSpec::radicals(Q, {one_plus_zeta4()})) == 4);
  auto mu24 = RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24);
  CHECK(minimal_exponent(mu24) == 4);
  CHECK(index_GK_over_K(mu24) == 4);
  CHECK(index_GK_over_K(RadicalGroupSpec::radicals(Q, {RadicalQ::zeta(3)})) == 3);
  auto g = RadicalGroupSpec::radicals(Q, {one_plus_zeta4(), canonicalize(2, 8)});
  CHECK(index_GK_over_K(g) == 32);
  // brute force over exponent pairs (a, b) with trivial class
  int trivial = 0;
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b) {
      RadicalQ x = one_plus_zeta4().pow(a) * canonicalize(2, 8).pow(b);
      if (x.as_rational()) ++trivial;
    }
  CHECK(64 * 64 / trivial == 32);
}

TEST_CASE("mu subgroup examples") {
  CHECK(mu_order(RadicalGroupSpec::radicals(Q, {one_plus_zeta4()}), 8) == 4);
  CHECK(mu_order(RadicalGroupSpec::radicals(Q, {canonicalize(2, 3)}), 3) == 1);
  CHECK(mu_order(RadicalGroupSpec::roots_of_unity(BaseField::finite(2), 9), 9) == 9);
}

TEST_CASE("sqrt intersection examples") {
  auto s = sqrt_K_intersection(RadicalGroupSpec::radicals(Q, {one_plus_zeta4()}));
  CHECK(s.index == 2);
  REQUIRE(s.generators.size() == 1);
  CHECK(to_class(s.generators[0].element).twist == Rat(1, 4));
  CHECK(sqrt_K_intersection(RadicalGroupSpec::radicals(Q, {canonicalize(2, 3)})).index == 1);
  auto f = sqrt_K_intersection(RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24));
  CHECK(f.index == 2);
  CHECK(f.text == "mu_12");
}

TEST_CASE("power part examples") {
  auto g = power_part(RadicalGroupSpec::radicals(Q, {RadicalQ::zeta(12)}), 3);
  // n = 6 here (zeta_12^6 = -1), so G_3 = <zeta_6>, equal to <zeta_3> modulo Q^x.
  CHECK(contains(g, RadicalQ::zeta(3)));
  CHECK(index_GK_over_K(g) == 3);
  CHECK(g.exponent() == 3);
  auto h = power_part(RadicalGroupSpec::radicals(Q, {canonicalize(6, 12)}), 2);
  CHECK(h.generators()[0] == canonicalize(6, 4));
  auto m = power_part(RadicalGroupSpec::roots_of_unity(BaseField::finite(2), 45), 5);
  CHECK(m.exponent() == 5);
  CHECK_THROWS_AS(power_part(h, 3), PreconditionError);
}

TEST_CASE("lattice model agrees with brute-force class closure over Q") {
  std::mt19937_64 rng(5);
  const u64 primes[] = {2, 3, 5, 7};
  const long dens[] = {1, 2, 3, 4, 6, 8, 12};
  std::uniform_int_distribution<int> pick_den(0, 6), pick_prime(0, 3), ngen(1, 3), coin(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<RadicalQ> gens;
    int k = ngen(rng);
    for (int i = 0; i < k; ++i) {
      long td = dens[pick_den(rng)];
      std::uniform_int_distribution<long> tn(0, td - 1);
      std::map<u64, Rat> e;
      if (coin(rng)) {
        long ed = dens[pick_den(rng)];
        std::uniform_int_distribution<long> en(-ed, ed);
        e[primes[pick_prime(rng)]] = Rat(en(rng), ed);
      }
      gens.push_back(rad(Rat(tn(rng), td), e));
    }
    auto g = RadicalGroupSpec::radicals(Q, gens);
    std::vector<brute::QClass> cls;
    for (const auto& a : gens) cls.push_back(to_class(a));
    auto closure = brute::closure(cls);
    REQUIRE(index_GK_over_K(g) == Int(static_cast<long>(closure.size())));
    long roots = 0, halves = 0;
    for (const auto& c : closure) {
      if (c.exps.empty()) ++roots;
      brute::QClass d = brute::add(c, c);
      if (d.twist == 0 && d.exps.empty()) ++halves;
    }
    u64 mu_all = static_cast<u64>(2 * roots);
    u64 n = g.exponent();
    REQUIRE(mu_order(g, mu_all * 4) == mu_all);
    REQUIRE(sqrt_K_intersection(g).index == halves);
    // exact sequence: index = |G^n K^n : K^n| * |mu_n(GK) : mu_n(K)|
    REQUIRE(index_GK_over_K(g) == index_nth_powers(g) * Int(static_cast<long>(mu_order(g, n) / gcd(n, 2))));
    // exponent is the exponent of the closure
    u64 e = 1;
    for (const auto& c : closure) {
      u64 o = c.twist.get_den().get_ui();
      o = o / gcd(o, 2);
      for (const auto& [p, v] : c.exps) o = lcm(o, v.get_den().get_ui());
      e = lcm(e, o);
    }
    REQUIRE(n == e);
    for (u64 p : prime_divisors(n)) {
      REQUIRE(power_part(g, p).exponent() == ipow(p, valuation(n, p)));
    }
    Int prod = 1;
    for (u64 p : prime_divisors(n)) prod *= index_GK_over_K(power_part(g, p));
    REQUIRE(prod == index_GK_over_K(g));
  }
}

TEST_CASE("finite-field model by enumeration") {
  for (u64 q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    BaseField f = BaseField::finite(q);
    for (u64 d = 1; d <= 120; ++d) {
      if (d % f.characteristic() == 0) continue;
      auto g = RadicalGroupSpec::roots_of_unity(f, d);
      u64 e = lcm(d, q - 1);
      REQUIRE(index_GK_over_K(g) == Int(static_cast<long>(e / (q - 1))));
      // G^n K^n / K^n inside the cyclic group of order e, by counting
      u64 n = g.exponent();
      u64 a = d / gcd(d, n), b = (q - 1) / gcd(q - 1, n);
      REQUIRE(index_nth_powers(g) == Int(static_cast<long>(lcm(a, b) / b)));
      u64 sq = gcd(e, 2 * (q - 1)) / (q - 1);
      REQUIRE(sqrt_K_intersection(g).index == Int(static_cast<long>(sq)));
      for (u64 m : {2, 3, 4, 8, 9, 16}) {
        if (m % f.characteristic() == 0) continue;
        REQUIRE(mu_order(g, m) == gcd(m, e));
      }
    }
  }
}
