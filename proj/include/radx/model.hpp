#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radx/abgroup.hpp"
#include "radx/backend.hpp"
#include "radx/radical.hpp"

namespace radx {

// A group G of radicals over a base field, presented by generators
// (characteristic 0) or by its order D, G = mu_D (finite fields).
class RadicalGroupSpec {
 public:
  static RadicalGroupSpec radicals(const BaseField& base, std::vector<RadicalQ> generators);
  static RadicalGroupSpec roots_of_unity(const BaseField& base, u64 order);

  const BaseField& base() const { return base_; }
  const std::vector<RadicalQ>& generators() const { return generators_; }
  u64 group_order() const { return group_order_; }
  // n: exponent of G K^x / K^x.
  u64 exponent() const { return exponent_; }

  RadicalGroupSpec power(u64 k) const;               // G^k
  RadicalGroupSpec over(const BaseField& larger) const;  // same G, larger base
  std::string describe() const;

 private:
  RadicalGroupSpec(const BaseField& base, std::vector<RadicalQ> generators, u64 group_order);

  BaseField base_;
  std::vector<RadicalQ> generators_;
  u64 group_order_ = 0;
  u64 exponent_ = 1;
};

u64 minimal_exponent(const RadicalGroupSpec& g);
// |G K^x : K^x|.
Int index_GK_over_K(const RadicalGroupSpec& g);
// |G^n K^{x n} : K^{x n}|.
Int index_nth_powers(const RadicalGroupSpec& g);

struct MuSubgroup {
  u64 order = 1;
  RadicalQ generator;  // zeta_order (characteristic 0)
};
// mu_m(G K^x).
MuSubgroup mu_subgroup(const RadicalGroupSpec& g, u64 m);
u64 mu_order(const RadicalGroupSpec& g, u64 m);

struct ClassGenerator {
  RadicalQ element;  // characteristic 0 representative
  u64 root_order = 0;  // finite fields: the element is a root of unity of this order
  Int order;         // order of the class modulo K^x
};

struct SubgroupDescription {
  Int index;  // order of the subgroup modulo K^x
  std::vector<ClassGenerator> generators;
  std::string text;
};
// (G K^x cap sqrt(K^x)) / K^x.
SubgroupDescription sqrt_K_intersection(const RadicalGroupSpec& g);
// (mu_{2^{f+1}}(G K^x) (G K^x cap sqrt(K^x)) cap K(zeta_z)^x) / K^x.
SubgroupDescription even_intersection(const RadicalGroupSpec& g, unsigned f, u64 z);

// G_p = G^{n / n_p}.
RadicalGroupSpec power_part(const RadicalGroupSpec& g, u64 p);

// alpha in G K^x (characteristic 0).
bool contains(const RadicalGroupSpec& g, const RadicalQ& alpha);
// alpha in G K^x mu_m (characteristic 0).
bool contains_mod_roots(const RadicalGroupSpec& g, const RadicalQ& alpha, u64 m);
// 1 + zeta_4 in G K^x (equivalently 1 - zeta_4); requires zeta_4 not in K.
bool one_plus_zeta4_in(const RadicalGroupSpec& g);

// 1 + zeta_4 as a radical: zeta_8 * 2^{1/2}.
RadicalQ one_plus_zeta4();

}  // namespace radx
