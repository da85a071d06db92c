#pragma once

#include <string>
#include <vector>

#include "radx/arith.hpp"
#include "radx/radical.hpp"

namespace radx {

enum class RelationKind { CyclotomicMinPoly, PrimePowerDescent, OddIntersection, TwoIntersection, TwoPowerInQi,
                          SpecialOnePlusZeta };

const char* to_string(RelationKind k);

// "element lies in the K'-span of 1, basis, basis^2, ..., basis^{span_dim-1}"
// where K' = K(zeta_layer).  Elements are radicals (characteristic 0) or
// roots of unity of order root_order (finite fields).
struct RelationRecord {
  RelationKind kind = RelationKind::CyclotomicMinPoly;
  u64 p = 0;        // prime (odd kinds), or t / w for the two-power kinds
  u64 step = 0;     // descent step or intersection order, when relevant
  RadicalQ element; // characteristic 0 participant
  u64 root_order = 0;  // order of the participating root of unity (0: not a root of unity)
  u64 basis_order = 1; // the span uses powers of zeta_{basis_order}
  u64 span_dim = 1;
  u64 layer = 1;       // coefficients live in K(zeta_layer)
  std::string statement;
  Rat loss = 1;
};

}  // namespace radx
