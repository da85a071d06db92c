#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kData = RADX_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = radx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("radx_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", kData + "/zeta3.toml", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ratio"] == "2/3");
  CHECK_FALSE(j.contains("timings"));
  auto t = run({"analyze", kData + "/zeta3.toml", "--json", "--timings"});
  CHECK(nlohmann::json::parse(t.out).contains("timings"));
  CHECK(run({"analyze", kData + "/zeta3.toml"}).out.find("ratio     2/3") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"analyze"}).code == 1);
  CHECK(run({"analyze", "/nonexistent/file.toml"}).code == 1);
  CHECK(run({"analyze", write_temp("bad.toml", "[base]\ntype = \"Q\"\nextra = 1\n")}).code == 1);
  // The characteristic divides the group order.
  CHECK(run({"analyze", write_temp("char.toml", "[base]\ntype = \"Fq\"\nq = 3\n[fq]\ngroup_order = 6\n")}).code == 2);
  // Oracle capacity problems are reported as unsupported, never as a match.
  auto big = run({"oracle", kData + "/one_plus_i_eighth_root_2.toml", "--max-dim", "4"});
  CHECK(big.code == 2);
  CHECK(big.out.find("skipped") != std::string::npos);
  CHECK(run({"fuzz", "--field", "r"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", kData + "/one_plus_i_eighth_root_2.toml", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "match");
  CHECK(j["oracle"] == "16");
  CHECK(run({"oracle", kData + "/mu27_f8.toml"}).out.find("match (engine 6, oracle 6)") != std::string::npos);
}

TEST_CASE("fuzz") {
  auto r = run({"fuzz", "--field", "fq", "--max-q", "50", "--count", "1000", "--seed", "1", "--threads", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1000 match, 0 mismatch") != std::string::npos);
  auto q = run({"fuzz", "--field", "q", "--count", "20", "--seed", "4", "--threads", "2", "--json"});
  CHECK(q.code == 0);
  auto j = nlohmann::json::parse(q.out);
  CHECK(j["mismatch"] == 0);
  CHECK(j["match"].get<int>() + j["skipped"].get<int>() == 20);
}

TEST_CASE("seed from the environment") {
  ::setenv("RADX_SEED", "7", 1);
  auto a = run({"fuzz", "--field", "q", "--count", "5", "--seed", "1", "--threads", "1", "--json"});
  ::setenv("RADX_SEED", "bad", 1);
  CHECK(run({"fuzz", "--field", "q", "--count", "1"}).code == 1);
  ::unsetenv("RADX_SEED");
  auto b = run({"fuzz", "--field", "q", "--count", "5", "--seed", "7", "--threads", "1", "--json"});
  CHECK(a.out == b.out);
}

TEST_CASE("growth") {
  auto r = run({"growth", "--gamma", "2", "--nmax", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N0 = 8 (verified ≤ 100)") != std::string::npos);
  CHECK(r.out.find("24\t288\t96\t1/3") != std::string::npos);
  auto cache = write_temp("growth.cache", "not a record\n");
  auto c = run({"growth", "--gamma", "3", "--nmax", "30", "--cache", cache, "--json"});
  CHECK(c.code == 0);
  CHECK(c.err.find("corrupt") != std::string::npos);
  auto again = run({"growth", "--gamma", "3", "--nmax", "30", "--cache", cache, "--json"});
  CHECK(again.out == c.out);
  auto fam = run({"growth", "--gamma", "-27", "--nmax", "60", "--family", "compatible"});
  CHECK(fam.code == 0);
  CHECK(fam.out.find("N0 = 6") != std::string::npos);
  CHECK(run({"growth", "--gamma", "0", "--nmax", "5"}).code == 1);
}

TEST_CASE("relations") {
  auto r = run({"relations", kData + "/zeta3.toml", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(complete)") != std::string::npos);
  auto f = run({"relations", kData + "/mu27_f8.toml", "--verify", "--json"});
  CHECK(f.code == 0);
  auto j = nlohmann::json::parse(f.out);
  CHECK(j["complete"] == true);
  CHECK(j["relations"].size() == 2);
  CHECK(j["relations"][0]["exact"] == true);
}
