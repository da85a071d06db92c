#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radx/engine_odd.hpp"
#include "radx/engine_two.hpp"
#include "radx/model.hpp"
#include "radx/relation.hpp"

namespace radx {

struct AnalysisContext {
  RadicalGroupSpec g;
  u64 n = 1;
  u64 n_prime = 1;
  unsigned f = 0;
  u64 z = 1;
  std::vector<std::pair<u64, RadicalGroupSpec>> split;  // (p, G_p) for p | n
};

struct KneserResult {
  bool applies = true;
  u64 prime = 0;        // violating odd prime, if any
  bool one_plus_zeta4 = false;
  std::string witness;  // empty when the conditions hold
};

// Part of mu_{n'}(G K^x) cap K(zeta_z)^x : mu_{n'}(K^x) at one odd prime.
struct OddIntersectionPart {
  u64 p = 0;
  unsigned excess = 0;   // v_p of the index
  unsigned base_v = 0;   // v_p |mu_{p^infty}(K^x) cap mu_{n'}|
  bool in_z = false;
};

// The orders used by the ratio are |G_p K^x cap K(zeta_z)^x : K^x| multiplied
// over the primes of n.  The formula_* fields hold the groups of the closed
// formula (mu_{n'}(G K^x) cap K(zeta_z)^x and the 2-power group); over finite
// fields with zeta_p in K they can be strictly smaller.
struct Intersections {
  Int odd_order = 1;
  Int even_order = 1;
  Int formula_odd_order = 1;
  Int formula_even_order = 1;
  std::vector<OddIntersectionPart> odd_parts;
  SubgroupDescription even;
};

struct SplitComponent {
  u64 p = 0;
  Int index;              // |G_p K^x : K^x|
  Int index_over_kz;      // |G_p K(zeta_z)^x : K(zeta_z)^x|
  Int degree_over_kz;     // [K(zeta_z, G_p) : K(zeta_z)]
};

struct AnalysisReport {
  AnalysisContext ctx;
  Int index = 1;
  Int degree = 1;
  Rat ratio = 1;
  Int cyclotomic_degree_z = 1;  // [K(zeta_z) : K]
  Int index_nth = 1;            // |G^n K^{xn} : K^{xn}|
  u64 mu_n = 1;                 // |mu_n(G K^x)|
  bool zeta_n_in_K = false;
  KneserResult kneser;
  std::vector<OddProfile> odd_profiles;
  std::optional<TwoAdicProfile> two_adic;  // G^{n'} over K(zeta_z), when Delta is nontrivially defined
  unsigned Delta = 0;
  Intersections intersections;
  std::vector<SplitComponent> split;
  std::vector<RelationRecord> relations;
};

AnalysisContext make_context(const RadicalGroupSpec& g);
u64 compute_z(const RadicalGroupSpec& g);
KneserResult kneser_applies(const RadicalGroupSpec& g);
// Requires zeta_n in K; checks degree = |G K^x:K^x| = |G^n K^{xn}:K^{xn}|.
Int kummer_degree(const RadicalGroupSpec& g);
Rat ratio_main(const RadicalGroupSpec& g);
Int degree_main(const RadicalGroupSpec& g);
bool divisibility_check(const AnalysisReport& r);
// True iff every instance failing the Kneser conditions has ratio < 1.
bool necessity_scan(const std::vector<RadicalGroupSpec>& corpus);

// Full analysis with all internal cross-checks; `with_relations` also
// generates the relation inventory.
AnalysisReport analyze(const RadicalGroupSpec& g, bool with_relations = true);

}  // namespace radx
