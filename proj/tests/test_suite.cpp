#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rsverify/sampling.hpp"
#include "rsverify/suite.hpp"

using namespace rsv;
using namespace rsv::suite;
using nlohmann::json;

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(RS_VERIFY_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json strip_elapsed(json j) {
  for (auto& c : j["checks"]) c.erase("elapsedMs");
  return j;
}

SuiteConfig quick(std::vector<std::string> checks) {
  SuiteConfig cfg;
  cfg.checks = std::move(checks);
  cfg.degree = 4;
  cfg.trials = 3;
  return cfg;
}

}  // namespace

TEST_CASE("SplitMix64 reference stream") {
  // first outputs for seed 0 as published with the generator
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(g.next() == 0x06c45d188009454fULL);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("sampler ranges") {
  Sampler rng(99);
  for (int i = 0; i < 500; ++i) {
    CHECK(rng.below(7) < 7);
    const long v = rng.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    const Rat r = rng.nonzero_rat(5);
    CHECK(r != 0);
    CHECK(abs(r.get_num()) <= 5);
    const Rat q = rng.unit_interval(6);
    CHECK(q > 0);
    CHECK(q < 1);
    CHECK(q.get_den() <= 6);
  }
  CHECK(rng.a3_point(5, true).pairwise_distinct());
  CHECK(rng.c2_point(5, true).weyl_regular());
  CHECK(rng.invertible_matrix(4, 1).determinant() != 0);
  Sampler a = Sampler::for_check(1, "x"), b = Sampler::for_check(1, "x"), c = Sampler::for_check(1, "y");
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
}

TEST_CASE("catalog") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 14);
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](const CatalogEntry& x, const CatalogEntry& y) { return x.name < y.name; }));
  for (const auto& e : cat) {
    CHECK(!e.anchor.empty());
    CHECK(!e.uses.empty());
  }
  CHECK(list_checks() == list_checks());
  CHECK(list_checks().find("thm-2-1") != std::string::npos);
  CHECK(list_checks().find("gu4-cosets") != std::string::npos);
}

TEST_CASE("check name resolution") {
  CHECK(resolve_checks({"all"}).size() == catalog().size());
  CHECK(resolve_checks({"thm-2-1", "lemma-2-2", "thm-2-1"}) == std::vector<std::string>{"lemma-2-2", "thm-2-1"});
  CHECK_THROWS_AS(resolve_checks({"no-such-check"}), UsageError);
}

TEST_CASE("reports") {
  SuiteConfig cfg = quick({"prop-3-1", "inner-integrals"});
  const auto reports = run_checks(cfg);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "inner-integrals");
  CHECK(exit_code(reports) == kAllPass);
  const json j = to_json(cfg, reports);
  CHECK(j["version"] == kVersion);
  CHECK(j["seed"] == 42);
  CHECK(j["checks"][1]["status"] == "pass");
  CHECK(j["checks"][1]["params"]["points"].size() == 3);

  cfg.faults = {"prop-3-1"};
  const auto bad = run_checks(cfg);
  CHECK(exit_code(bad) == kSomeFail);
  REQUIRE(bad[1].discrepancy);
  const json jb = to_json(cfg, bad)["checks"][1];
  CHECK(jb["status"] == "fail");
  CHECK(jb["discrepancy"]["lhs"].is_string());
  CHECK(jb["discrepancy"]["location"].get<std::string>().find("trial 0") == 0);
  CHECK(to_text(cfg, bad).find("FAIL") != std::string::npos);
}

TEST_CASE("every check has a failing fault") {
  for (const auto& e : catalog()) {
    SuiteConfig cfg = quick({e.name});
    cfg.faults = {e.name};
    const CheckReport r = run_check(e.name, cfg);
    CHECK_MESSAGE(r.status == Status::Fail, e.name);
    CHECK_MESSAGE(r.discrepancy.has_value(), e.name);
  }
}

TEST_CASE("table self-check failure is an internal inconsistency") {
  SuiteConfig cfg = quick({"thm-2-1", "prop-3-1"});
  cfg.faults = {kTableFault};
  const auto reports = run_checks(cfg);
  CHECK(reports[1].status == Status::Error);
  CHECK(!reports[1].error.empty());
  CHECK(reports[0].status == Status::Pass);
  CHECK(exit_code(reports) == kInconsistent);
}

TEST_CASE("thread count") {
  CHECK(thread_count(3, 10) == 3);
  CHECK(thread_count(30, 2) == 2);
  CHECK(thread_count(0, 1) == 1);
}

TEST_CASE("determinism across seeds and thread counts") {
  SuiteConfig cfg = quick({"lemma-2-2", "bfg-identity", "thm-3-2-split"});
  cfg.threads = 1;
  const json a = strip_elapsed(to_json(cfg, run_checks(cfg)));
  cfg.threads = 3;
  const json b = strip_elapsed(to_json(cfg, run_checks(cfg)));
  CHECK(a.dump() == b.dump());
  cfg.seed = 43;
  const json c = strip_elapsed(to_json(cfg, run_checks(cfg)));
  CHECK(a["checks"][0]["params"]["points"] != c["checks"][0]["params"]["points"]);
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("check prop-3-1 --trials 3") == 0);
  CHECK(run_cli("check no-such-check") == 2);
  CHECK(run_cli("check") == 2);
  CHECK(run_cli("check prop-3-1 --format yaml") == 2);
  CHECK(run_cli("check prop-3-1 --trials 0") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("check prop-3-1 --trials 3 --inject-fault prop-3-1") == 1);
  CHECK(run_cli("check thm-2-1 --degree 2 --trials 1 --inject-fault substitution-table") == 3);
  std::string out;
  CHECK(run_cli("--version", &out) == 0);
  CHECK(out.find(kVersion) != std::string::npos);
  CHECK(run_cli("list", &out) == 0);
  CHECK(out.find("lemma-2-2") != std::string::npos);
}

TEST_CASE("command line JSON report is deterministic") {
  const std::string args = "check lgroup-structure inner-integrals --degree 4 --trials 4 --seed 9 --format json";
  std::string a, b;
  REQUIRE(run_cli(args, &a) == 0);
  REQUIRE(run_cli(args + " --threads 1", &b) == 0);
  CHECK(strip_elapsed(json::parse(a)).dump() == strip_elapsed(json::parse(b)).dump());

  const std::string path = "rs_verify_report_test.json";
  REQUIRE(run_cli(args + " -o " + path) == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(strip_elapsed(json::parse(file.str())).dump() == strip_elapsed(json::parse(a)).dump());
  std::remove(path.c_str());
}
