#include "doctest.h"
#include "radx/report.hpp"

using namespace radx;

namespace {
RadicalGroupSpec over_q(std::vector<RadicalQ> gens) { return RadicalGroupSpec::radicals(BaseField::rationals(), gens); }
}  // namespace

TEST_CASE("report schema") {
  auto r = analyze(over_q({one_plus_zeta4(), canonicalize(2, 8)}));
  Json j = report_json(r);
  for (const char* key : {"base", "n", "n_prime", "f", "z", "index", "degree", "ratio", "kneser", "odd_profiles",
                          "two_adic", "intersections", "relations"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK_FALSE(j.contains("timings"));
  CHECK(j["ratio"] == "1/2");
  CHECK(j["degree"] == "16");
  CHECK(j["kneser"]["applies"] == false);
  CHECK(j["two_adic"]["Delta"] == 1);
  CHECK(j["two_adic"]["delta"] == "1/2");
  CHECK(j["two_adic"]["m"] == 3);
  CHECK(j["relations"].size() == 1);
  // Keys keep insertion order.
  CHECK(j.begin().key() == "instance");
}

TEST_CASE("reports are deterministic") {
  auto g = over_q({RadicalQ::zeta(3), canonicalize(2, 3)});
  CHECK(report_json(analyze(g)).dump() == report_json(analyze(g)).dump());
  Timings t{{"analyze", 0.5}};
  CHECK(report_json(analyze(g), &t)["timings"]["analyze"] == 0.5);
}

TEST_CASE("ratio strings are reduced") {
  auto r = analyze(over_q({RadicalQ::zeta(3)}));
  CHECK(report_json(r)["ratio"] == "2/3");
  auto k = analyze(over_q({canonicalize(2, 3)}));
  CHECK(report_json(k)["ratio"] == "1/1");
}

TEST_CASE("verdict json") {
  Verdict v = compare(over_q({RadicalQ::zeta(3)}));
  Json j = verdict_json(v);
  CHECK(j["verdict"] == "match");
  CHECK(j["engine"] == "2");
  CHECK(j["oracle"] == "2");
  CHECK_FALSE(j.contains("report"));
}
