#include "radx/report.hpp"

#include <sstream>

namespace radx {

namespace {

std::string ext(const ExtendedInt& e) { return e.to_string(); }

Json two_adic_json(const AnalysisReport& r) {
  if (!r.two_adic) {
    if (r.Delta == 0) return nullptr;
    return Json{{"Delta", r.Delta}};
  }
  const TwoAdicProfile& t = *r.two_adic;
  Json j;
  j["f"] = t.f;
  j["w"] = ext(t.w);
  j["w_prime"] = ext(t.w_prime);
  j["a"] = t.a.text;
  j["a_in_powers"] = t.a_in_powers;
  j["delta"] = to_string(t.delta);
  j["m"] = t.m;
  j["m_bar"] = t.m_bar;
  j["m_prime"] = t.m_prime;
  j["H"] = t.h_text;
  j["table_row"] = t.table_row;
  j["ratio"] = to_string(t.ratio);
  j["Delta"] = r.Delta;
  return j;
}

}  // namespace

Json to_json(const RelationRecord& rel) {
  Json j;
  j["kind"] = to_string(rel.kind);
  j["p"] = rel.p;
  j["step"] = rel.step;
  j["statement"] = rel.statement;
  j["loss"] = to_string(rel.loss);
  return j;
}

Json report_json(const AnalysisReport& r, const Timings* timings) {
  Json j;
  j["instance"] = r.ctx.g.describe();
  j["base"] = r.ctx.g.base().name();
  j["n"] = r.ctx.n;
  j["n_prime"] = r.ctx.n_prime;
  j["f"] = r.ctx.f;
  j["z"] = r.ctx.z;
  j["index"] = to_string(r.index);
  j["degree"] = to_string(r.degree);
  j["ratio"] = to_string(r.ratio);
  j["kneser"] = {{"applies", r.kneser.applies}, {"witness", r.kneser.witness}};
  Json odd = Json::array();
  for (const auto& p : r.odd_profiles) {
    Json o;
    o["p"] = p.p;
    o["v_p"] = p.v_p;
    o["m"] = p.m;
    o["m0"] = p.m0_defined ? Json(ext(p.m0)) : Json(nullptr);
    o["d_p"] = p.d_p;
    o["zeta_p_in_K"] = p.zeta_p_in_K;
    o["zeta_p_in_GK"] = p.zeta_p_in_GK;
    o["index"] = to_string(p.index);
    o["degree"] = to_string(p.degree);
    o["ratio"] = to_string(p.ratio);
    odd.push_back(o);
  }
  j["odd_profiles"] = odd;
  j["two_adic"] = two_adic_json(r);
  j["intersections"] = {{"odd_order", to_string(r.intersections.odd_order)},
                        {"even_order", to_string(r.intersections.even_order)}};
  Json rels = Json::array();
  for (const auto& rel : r.relations) rels.push_back(to_json(rel));
  j["relations"] = rels;
  if (timings) {
    Json t = Json::object();
    for (const auto& [name, secs] : *timings) t[name] = secs;
    j["timings"] = t;
  }
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["engine"] = v.kind == VerdictKind::Skipped && v.engine == 0 ? Json(nullptr) : Json(to_string(v.engine));
  j["oracle"] = v.kind == VerdictKind::Skipped ? Json(nullptr) : Json(to_string(v.oracle));
  j["reason"] = v.reason;
  if (v.report) j["report"] = report_json(*v.report);
  return j;
}

Json relation_verdict_json(const RelationRecord& rel, const RelationVerdict& v) {
  Json j = to_json(rel);
  j["verified"] = v.ok;
  j["exact"] = v.exact;
  if (!v.exact) j["residual"] = v.residual;
  Json coeffs = Json::array();
  for (const auto& c : v.coefficients) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  j["detail"] = v.detail;
  return j;
}

Json growth_json(const std::vector<GrowthRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"N", r.N}, {"index", to_string(r.index)}, {"degree", to_string(r.degree)}, {"ratio", to_string(r.ratio)}});
  return a;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "instance  " << r.ctx.g.describe() << "\n";
  out << "n = " << r.ctx.n << ", n' = " << r.ctx.n_prime << ", f = " << r.ctx.f << ", z = " << r.ctx.z << "\n";
  out << "index     " << r.index << "\n";
  out << "degree    " << r.degree << "\n";
  out << "ratio     " << to_string(r.ratio) << "\n";
  out << "kneser    " << (r.kneser.applies ? "applies" : "fails (" + r.kneser.witness + ")") << "\n";
  for (const auto& p : r.odd_profiles)
    out << "odd p=" << p.p << "  m=" << p.m << " d_p=" << p.d_p << " ratio=" << to_string(p.ratio) << "\n";
  if (r.two_adic) {
    const auto& t = *r.two_adic;
    out << "two-adic  f=" << t.f << " w=" << ext(t.w) << " w'=" << ext(t.w_prime) << " delta=" << to_string(t.delta)
        << " m=" << t.m << " m_bar=" << t.m_bar << " H=" << t.h_text << "\n";
  }
  out << "Delta     " << r.Delta << "\n";
  out << "intersections odd=" << r.intersections.odd_order << " even=" << r.intersections.even_order << "\n";
  for (const auto& rel : r.relations)
    out << "relation  " << to_string(rel.kind) << ": " << rel.statement << "  (loss " << to_string(rel.loss) << ")\n";
  return out.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.kind);
  if (v.kind != VerdictKind::Skipped) out << " (engine " << v.engine << ", oracle " << v.oracle << ")";
  if (!v.reason.empty()) out << ": " << v.reason;
  out << "\n";
  return out.str();
}

std::string fuzz_text(const FuzzSummary& s) {
  std::ostringstream out;
  out << s.matches << " match, " << s.mismatches << " mismatch, " << s.skipped << " skipped\n";
  for (const auto& [reason, count] : s.skip_reasons) out << "  skipped " << count << ": " << reason << "\n";
  return out.str();
}

std::string growth_text(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "N\tindex\tdegree\tratio\n";
  for (const auto& r : rows) out << r.N << "\t" << r.index << "\t" << r.degree << "\t" << to_string(r.ratio) << "\n";
  return out.str();
}

}  // namespace radx
