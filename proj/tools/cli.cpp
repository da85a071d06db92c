#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "radx/errors.hpp"
#include "radx/fuzz.hpp"
#include "radx/growth.hpp"
#include "radx/instance.hpp"
#include "radx/oracle.hpp"
#include "radx/relations.hpp"
#include "radx/report.hpp"

namespace radx::cli {

namespace {

struct Options {
  std::string file;
  bool json = false;
  bool timings = false;
  bool verify = false;
  u64 max_dim = 4096;
  unsigned precision = 4096;
  u64 seed = 1;
  std::string field = "q";
  u64 max_q = 200;
  u64 max_d = 2000;
  u64 count = 100;
  unsigned threads = 0;
  std::string dump_dir = ".";
  std::vector<std::string> gamma;
  std::string family = "kummer";
  u64 nmax = 100;
  std::string cache;
};

// RADX_SEED overrides --seed.
u64 effective_seed(u64 seed) {
  const char* env = std::getenv("RADX_SEED");
  if (!env || !*env) return seed;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw ParseError("RADX_SEED must be a nonnegative integer");
  return std::stoull(s);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_analyze(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  RadicalGroupSpec g = load_instance(o.file);
  Timings timings{{"parse", seconds_since(t0)}};
  t0 = std::chrono::steady_clock::now();
  AnalysisReport r = analyze(g, true);
  timings.emplace_back("analyze", seconds_since(t0));
  if (o.json)
    out << report_json(r, o.timings ? &timings : nullptr).dump(2) << "\n";
  else
    out << report_text(r);
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  RadicalGroupSpec g = load_instance(o.file);
  OracleOptions opt;
  opt.max_dim = o.max_dim;
  opt.precision_max = o.precision;
  opt.precision_start = std::min<mpfr_prec_t>(opt.precision_start, o.precision);
  opt.seed = effective_seed(o.seed);
  Verdict v = compare(g, opt);
  if (o.json)
    out << verdict_json(v).dump(2) << "\n";
  else
    out << verdict_text(v);
  switch (v.kind) {
    case VerdictKind::Match:
      return kOk;
    case VerdictKind::Mismatch:
      return kMismatch;
    case VerdictKind::Skipped:
      return kUnsupported;
  }
  return kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
  FuzzConfig cfg;
  if (o.field != "q" && o.field != "fq") throw ParseError("--field must be q or fq");
  cfg.finite = o.field == "fq";
  cfg.max_q = o.max_q;
  cfg.max_D = o.max_d;
  cfg.count = o.count;
  cfg.seed = effective_seed(o.seed);
  cfg.threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  cfg.oracle.max_dim = o.max_dim;
  const std::filesystem::path dir(o.dump_dir);
  auto dump = [&](const FuzzCase& c) {
    std::filesystem::create_directories(dir);
    const auto path = dir / ("radx-repro-" + std::to_string(cfg.seed) + "-" + std::to_string(c.id) + ".toml");
    std::ofstream f(path);
    f << "# " << verdict_text(c.verdict) << format_instance(c.g);
    err << "mismatch on instance " << c.id << ": " << c.verdict.reason << "\n  reproducer: " << path.string() << "\n";
  };
  FuzzSummary s = run_fuzz(cfg, dump);
  if (o.json) {
    Json j{{"match", s.matches}, {"mismatch", s.mismatches}, {"skipped", s.skipped}};
    Json reasons = Json::object();
    for (const auto& [r, n] : s.skip_reasons) reasons[r] = n;
    j["skip_reasons"] = reasons;
    out << j.dump(2) << "\n";
  } else {
    out << fuzz_text(s);
  }
  return s.mismatches ? kMismatch : kOk;
}

int cmd_growth(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.gamma.empty()) throw ParseError("--gamma needs at least one rational");
  std::vector<Rat> values;
  for (const auto& s : o.gamma) values.push_back(parse_rational(s));
  if (o.family != "kummer" && o.family != "compatible") throw ParseError("--family must be kummer or compatible");
  const bool kummer = o.family == "kummer";
  GrowthFamily fam = kummer ? GrowthFamily::kummer(values) : GrowthFamily::compatible(values);
  std::optional<GrowthCache> cache;
  if (!o.cache.empty()) cache.emplace(o.cache, &err);
  GrowthCache* cp = cache ? &*cache : nullptr;
  auto rows = ratio_table(fam, o.nmax, cp);
  N0Result n0 = kummer ? find_N0_mama(fam, o.nmax, cp) : check_eventual(fam, o.nmax, cp);
  if (o.json) {
    out << Json{{"family", fam.key()}, {"table", growth_json(rows)}, {"N0", n0.n0}, {"verified_up_to", n0.verified_up_to}}
               .dump(2)
        << "\n";
  } else {
    out << growth_text(rows);
    out << "N0 = " << n0.n0 << " (verified ≤ " << n0.verified_up_to << ")\n";
  }
  return kOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  RadicalGroupSpec g = load_instance(o.file);
  AnalysisReport r = analyze(g, true);
  bool all_ok = true;
  Json arr = Json::array();
  for (const auto& rel : r.relations) {
    if (o.verify) {
      RelationVerdict v = verify_relation(rel, g.base(), o.precision ? std::min(o.precision, 4096u) : 256);
      all_ok = all_ok && v.ok;
      if (o.json) {
        arr.push_back(relation_verdict_json(rel, v));
      } else {
        out << (v.ok ? "ok    " : "FAIL  ") << to_string(rel.kind) << ": " << rel.statement << "  (loss "
            << to_string(rel.loss) << ")";
        if (!v.exact) out << "  residual " << v.residual;
        out << "\n";
      }
    } else if (o.json) {
      arr.push_back(to_json(rel));
    } else {
      out << to_string(rel.kind) << ": " << rel.statement << "  (loss " << to_string(rel.loss) << ")\n";
    }
  }
  const Rat explained = explained_ratio(r.relations);
  const bool complete = explained == r.ratio;
  if (o.json) {
    out << Json{{"relations", arr}, {"explained_ratio", to_string(explained)}, {"ratio", to_string(r.ratio)},
                {"complete", complete}}
               .dump(2)
        << "\n";
  } else {
    out << "explained ratio " << to_string(explained) << ", engine ratio " << to_string(r.ratio)
        << (complete ? " (complete)" : " (INCOMPLETE)") << "\n";
  }
  return all_ok && complete ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees, indices and entanglement of radical extensions", "radx"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an instance file");
  analyze_cmd->add_option("file", o.file, "Instance file")->required();
  analyze_cmd->add_flag("--json", o.json, "JSON report");
  analyze_cmd->add_flag("--timings", o.timings, "Include wall-clock timings in the JSON report");

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the engine degree with the brute-force oracle");
  oracle_cmd->add_option("file", o.file, "Instance file")->required();
  oracle_cmd->add_option("--max-dim", o.max_dim, "Algebra dimension cap")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--precision", o.precision, "Precision ceiling in bits")->check(CLI::Range(64u, 1u << 20));
  oracle_cmd->add_option("--seed", o.seed, "Seed for the random primitive elements");
  oracle_cmd->add_flag("--json", o.json, "JSON output");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random engine-versus-oracle campaign");
  fuzz_cmd->add_option("--field", o.field, "q (characteristic 0) or fq (finite fields)")->required();
  fuzz_cmd->add_option("--max-q", o.max_q, "Largest q for --field fq")->check(CLI::Range(u64{2}, u64{1} << 31));
  fuzz_cmd->add_option("--max-d", o.max_d, "Largest D for --field fq")->check(CLI::Range(u64{1}, u64{1} << 31));
  fuzz_cmd->add_option("--count", o.count, "Number of instances");
  fuzz_cmd->add_option("--seed", o.seed, "Campaign seed");
  fuzz_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  fuzz_cmd->add_option("--max-dim", o.max_dim, "Oracle dimension cap")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--dump-dir", o.dump_dir, "Directory for reproducer files");
  fuzz_cmd->add_flag("--json", o.json, "JSON summary");

  auto* growth_cmd = app.add_subcommand("growth", "Ratio table and stabilisation index for a family");
  growth_cmd->add_option("--gamma", o.gamma, "Generators of Gamma (rationals)")->required()->delimiter(',');
  growth_cmd->add_option("--nmax", o.nmax, "Largest N")->required()->check(CLI::Range(u64{1}, u64{100000}));
  growth_cmd->add_option("--cache", o.cache, "Cache file");
  growth_cmd->add_option("--family", o.family, "kummer (full N-th roots) or compatible (principal roots)");
  growth_cmd->add_flag("--json", o.json, "JSON output");

  auto* relations_cmd = app.add_subcommand("relations", "List and certify the entanglement relations");
  relations_cmd->add_option("file", o.file, "Instance file")->required();
  relations_cmd->add_flag("--verify", o.verify, "Certify every relation");
  relations_cmd->add_option("--precision", o.precision, "Precision in bits for characteristic 0");
  relations_cmd->add_flag("--json", o.json, "JSON output");

  // The fuzz default cap is smaller than the oracle's.
  fuzz_cmd->preparse_callback([&o](std::size_t) { o.max_dim = 256; });
  relations_cmd->preparse_callback([&o](std::size_t) { o.precision = 256; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*fuzz_cmd) return cmd_fuzz(o, out, err);
    if (*growth_cmd) return cmd_growth(o, out, err);
    if (*relations_cmd) return cmd_relations(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedInstance& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapacityExceeded& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InternalInconsistency& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace radx::cli
