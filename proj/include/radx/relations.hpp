#pragma once

#include <string>
#include <vector>

#include "radx/engine_main.hpp"
#include "radx/relation.hpp"

namespace radx {

std::vector<RelationRecord> generate_relations(const AnalysisReport& report);

struct RelationVerdict {
  bool ok = false;
  bool exact = false;     // decided exactly (finite fields)
  double residual = 0;    // characteristic 0: max residual of the solved system
  std::vector<Rat> coefficients;  // characteristic 0: rational coefficients of the last checked member
  std::string detail;
};

RelationVerdict verify_relation(const RelationRecord& rel, const BaseField& base, unsigned precision_bits = 256);

Rat explained_ratio(const std::vector<RelationRecord>& rels);

}  // namespace radx
