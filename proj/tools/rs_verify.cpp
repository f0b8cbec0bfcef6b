#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsverify/suite.hpp"

int main(int argc, char** argv) {
  using namespace rsv::suite;

  CLI::App app{"rs-verify: exact verification of unramified Rankin-Selberg local identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SuiteConfig cfg;
  std::vector<std::string> faults;
  std::string format = "text";

  CLI::App* check = app.add_subcommand("check", "run checks by name, or all of them");
  check->add_option("checks", cfg.checks, "check names, or 'all'")->required();
  check->add_option("--degree", cfg.degree, "truncation degree")->capture_default_str();
  check->add_option("--trials", cfg.trials, "sampled points per check")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  check->add_option("--q-bound", cfg.q_bound, "largest denominator of a sampled |p|")
      ->check(CLI::Range(2u, 1000000u))
      ->capture_default_str();
  check->add_option("--sample-bound", cfg.sample_bound, "bound on sampled numerators and denominators")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  check->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  check->add_option("-o,--output", cfg.output, "report path (default: standard output)");
  check->add_option("--threads", cfg.threads, "worker threads (default: RS_VERIFY_THREADS or all cores)");
  check->add_option("--inject-fault", faults, "force the failure path of the named checks")->group("");

  app.add_subcommand("list", "print the check catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (app.got_subcommand("list")) {
    std::cout << list_checks();
    return kAllPass;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;
  cfg.faults = std::set<std::string>(faults.begin(), faults.end());
  return run_suite(cfg, std::cerr);
}
