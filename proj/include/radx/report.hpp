#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "radx/engine_main.hpp"
#include "radx/fuzz.hpp"
#include "radx/growth.hpp"
#include "radx/oracle.hpp"
#include "radx/relations.hpp"

namespace radx {

using Json = nlohmann::ordered_json;

// Wall-clock phases in seconds; reported only when requested, so reports
// stay byte-identical across runs by default.
using Timings = std::vector<std::pair<std::string, double>>;

Json to_json(const RelationRecord& rel);
Json report_json(const AnalysisReport& r, const Timings* timings = nullptr);
Json verdict_json(const Verdict& v);
Json relation_verdict_json(const RelationRecord& rel, const RelationVerdict& v);
Json growth_json(const std::vector<GrowthRow>& rows);

// Plain-text renderings for the terminal.
std::string report_text(const AnalysisReport& r);
std::string verdict_text(const Verdict& v);
std::string fuzz_text(const FuzzSummary& s);
std::string growth_text(const std::vector<GrowthRow>& rows);

}  // namespace radx
