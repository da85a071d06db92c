#include "doctest.h"
#include "radx/relations.hpp"
#include "support/instances.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
RadicalGroupSpec mu(u64 q, u64 d) { return RadicalGroupSpec::roots_of_unity(BaseField::finite(q), d); }

void check_all_verify(const AnalysisReport& r) {
  for (const auto& rel : r.relations) {
    INFO(rel.statement);
    RelationVerdict v = verify_relation(rel, r.ctx.g.base());
    CHECK(v.ok);
    if (r.ctx.g.base().is_char0()) CHECK(v.residual < 1e-30);
  }
}
}  // namespace

TEST_CASE("relations for zeta_3") {
  auto r = analyze(over_q({RadicalQ::zeta(3)}));
  REQUIRE(r.relations.size() == 1);
  CHECK(r.relations[0].kind == RelationKind::CyclotomicMinPoly);
  CHECK(r.relations[0].statement == "1 + zeta_3 + zeta_3^2 = 0");
  CHECK(r.relations[0].loss == Rat(2, 3));
  CHECK(explained_ratio(r.relations) == Rat(2, 3));
  auto v = verify_relation(r.relations[0], BaseField::rationals());
  CHECK(v.ok);
  CHECK(v.residual < 1e-30);
  // zeta_3^2 = -1 - zeta_3
  REQUIRE(v.coefficients.size() == 2);
  CHECK(v.coefficients[0] == -1);
  CHECK(v.coefficients[1] == -1);
}

TEST_CASE("relation statements") {
  auto r5 = analyze(over_q({RadicalQ::zeta(5)}));
  REQUIRE(r5.relations.size() == 1);
  CHECK(r5.relations[0].statement == "1 + zeta_5 + ... + zeta_5^4 = 0");
  auto f8 = analyze(RadicalGroupSpec::roots_of_unity(BaseField::finite(8), 27));
  REQUIRE(f8.relations.size() == 2);
  CHECK(f8.relations[0].statement == "zeta_3^2 in 1K + zeta_3K");
  CHECK(f8.relations[1].statement == "zeta_9 in 1K + zeta_3K");
}

TEST_CASE("relations for 1 + i") {
  auto r = analyze(over_q({one_plus_zeta4()}));
  REQUIRE(r.relations.size() == 1);
  CHECK(r.relations[0].kind == RelationKind::SpecialOnePlusZeta);
  CHECK(explained_ratio(r.relations) == Rat(1, 2));
  auto v = verify_relation(r.relations[0], BaseField::rationals());
  CHECK(v.ok);
  REQUIRE(v.coefficients.size() == 2);
  CHECK(v.coefficients[0] == 1);
  CHECK(v.coefficients[1] == 1);
}

TEST_CASE("no relations without entanglement") {
  auto r = analyze(over_q({canonicalize(2, 3)}));
  CHECK(r.relations.empty());
  CHECK(explained_ratio(r.relations) == 1);
}

TEST_CASE("finite field two-power relation") {
  // zeta_8 lies in F_49 = F_7(zeta_4).
  RelationRecord rel;
  rel.kind = RelationKind::TwoPowerInQi;
  rel.p = 3;
  rel.element = RadicalQ::zeta(8);
  rel.root_order = 8;
  rel.basis_order = 4;
  rel.span_dim = 2;
  auto v = verify_relation(rel, BaseField::finite(7));
  CHECK(v.ok);
  CHECK(v.exact);
  rel.root_order = 32;
  CHECK_FALSE(verify_relation(rel, BaseField::finite(7)).ok);
}

TEST_CASE("completeness on curated instances") {
  for (const auto& c : curated::char0_known()) {
    INFO(c.g.describe());
    AnalysisReport r = analyze(c.g);
    CHECK(explained_ratio(r.relations) == r.ratio);
    check_all_verify(r);
  }
}

TEST_CASE("completeness over finite fields") {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 19, 23, 27, 31, 43, 47, 49}) {
    auto pp = prime_power(q);
    for (u64 d = 1; d <= 300; ++d) {
      if (d % pp->first == 0) continue;
      AnalysisReport r = analyze(mu(q, d));
      INFO(r.ctx.g.describe());
      REQUIRE(explained_ratio(r.relations) == r.ratio);
      for (const auto& rel : r.relations) REQUIRE(verify_relation(rel, r.ctx.g.base()).ok);
    }
  }
}
