#include <algorithm>
#include <random>

#include "doctest.h"
#include "radx/errors.hpp"
#include "radx/oracle.hpp"
#include "support/brute.hpp"
#include "support/instances.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
}  // namespace

TEST_CASE("finite-field oracle") {
  CHECK(oracle_degree_fq(7, 18) == 3);
  CHECK(oracle_degree_fq(2, 9) == 6);
  CHECK(oracle_degree_fq(13, 12) == 1);
  CHECK(oracle_degree_fq(13, 4) == 1);
  CHECK_THROWS_AS(oracle_degree_fq(9, 6), UnsupportedInstance);
  // Independent route: the least k with D | q^k - 1, computed naively.
  for (u64 q : {2u, 3u, 4u, 5u, 8u, 9u, 25u, 27u, 49u})
    for (u64 d = 1; d <= 120; ++d) {
      if (brute::gcd_u(d, q) != 1) continue;
      u64 k = 1, power = q % d;
      while (power != 1 % d) {
        power = power * q % d;
        ++k;
      }
      CHECK(oracle_degree_fq(q, d) == k);
    }
}

TEST_CASE("oracle examples over Q") {
  CHECK(oracle_degree_q(over_q({RadicalQ::zeta(3)})).degree == 2);
  CHECK(oracle_degree_q(over_q({canonicalize(2, 3)})).degree == 3);
  CHECK(oracle_degree_q(over_q({one_plus_zeta4(), canonicalize(2, 8)})).degree == 16);
  CHECK(oracle_degree_q(over_q({RadicalQ::rational(5)})).degree == 1);
}

TEST_CASE("oracle on pure cyclotomic groups") {
  OracleOptions opt;
  opt.max_dim = 64;
  for (u64 m = 1; m <= 100; ++m) {
    if (euler_phi(m) > opt.max_dim) continue;
    CHECK_MESSAGE(oracle_degree_q(over_q({RadicalQ::zeta(m)}), opt).degree == euler_phi(m), "m = " << m);
  }
}

TEST_CASE("oracle on the curated suite") {
  for (const auto& k : curated::char0_known()) {
    auto r = oracle_degree_q(k.g);
    CHECK_MESSAGE(r.degree == k.degree, k.g.describe());
  }
}

TEST_CASE("property: oracle is invariant under permutation and regeneration") {
  std::mt19937_64 rng(5);
  const std::vector<u64> primes = {2, 3, 5, 7};
  OracleOptions opt;
  opt.max_dim = 96;
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    std::vector<RadicalQ> gens;
    for (int i = 0; i < 2; ++i) {
      std::map<u64, Rat> ex;
      ex[primes[rng() % primes.size()]] = Rat(static_cast<long>(rng() % 4 + 1), static_cast<long>(rng() % 4 + 1));
      gens.emplace_back(Rat(static_cast<long>(rng() % 6), 6), ex);
    }
    auto g = over_q(gens);
    if (oracle_dimension(g) > opt.max_dim) continue;
    ++checked;
    Int d = oracle_degree_q(g, opt).degree;
    std::vector<RadicalQ> rev(gens.rbegin(), gens.rend());
    opt.seed = 99;
    CHECK(oracle_degree_q(over_q(rev), opt).degree == d);
    // {a, b} and {a, a b} generate the same group.
    CHECK(oracle_degree_q(over_q({gens[0], gens[0] * gens[1]}), opt).degree == d);
    opt.seed = 1;
  }
  CHECK(checked >= 5);
}

TEST_CASE("oracle over cyclotomic bases") {
  auto g = RadicalGroupSpec::radicals(BaseField::cyclotomic(3), {RadicalQ::zeta(9)});
  CHECK(oracle_degree_q(g).degree == 3);
  auto h = RadicalGroupSpec::radicals(BaseField::cyclotomic(15), {canonicalize(5, 2)});
  CHECK(oracle_degree_q(h).degree == 1);
}

// The minimal polynomials here have 16 local factors of degree 12 with small
// traces and constant terms, which defeats single-trace recombination filters.
TEST_CASE("oracle on a structured degree-192 instance") {
  auto g = over_q({RadicalQ(Rat(0), {{2, Rat(3, 4)}, {5, Rat(4, 3)}}), RadicalQ(Rat(2, 3), {{3, Rat(5, 8)}})});
  OracleOptions opt;
  opt.max_dim = 256;
  Verdict v = compare(g, opt);
  CHECK(v.kind == VerdictKind::Match);
  CHECK(v.oracle == 192);
}

TEST_CASE("dimension cap") {
  OracleOptions opt;
  opt.max_dim = 8;
  CHECK_THROWS_AS(oracle_degree_q(over_q({canonicalize(2, 16)}), opt), CapacityExceeded);
  CHECK(oracle_dimension(over_q({RadicalQ::zeta(8), canonicalize(3, 4)})) == 16);
}

TEST_CASE("compare verdicts") {
  CHECK(compare(over_q({RadicalQ::zeta(3)})).kind == VerdictKind::Match);
  CHECK(compare(RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24)).kind == VerdictKind::Match);
  CHECK(compare(RadicalGroupSpec::roots_of_unity(BaseField::finite(7), 24)).oracle == 2);
  auto v = compare(over_q({RadicalQ::zeta(3), RadicalQ::zeta(5)}));
  CHECK(v.kind == VerdictKind::Match);
  CHECK(v.oracle == 8);
  OracleOptions tiny;
  tiny.max_dim = 2;
  CHECK(compare(over_q({canonicalize(2, 3)}), tiny).kind == VerdictKind::Skipped);
}
