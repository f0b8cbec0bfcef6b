#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsverify/identities.hpp"

namespace rsv::suite {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of run_suite.
enum ExitCode : int { kAllPass = 0, kSomeFail = 1, kUsage = 2, kInconsistent = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pseudo fault name: the substitution-table self-check of every check that
/// uses one is given a wrong expectation (exit code kInconsistent).
inline constexpr const char* kTableFault = "substitution-table";

enum class Format { Text, Json };

struct SuiteConfig {
  std::vector<std::string> checks{"all"};
  unsigned degree = 8;
  unsigned trials = 20;
  std::uint64_t seed = 42;
  unsigned q_bound = 20;       // denominators of sampled |p|
  unsigned sample_bound = 20;  // numerators and denominators of sampled coordinates
  Format format = Format::Text;
  std::string output;  // empty or "-" for standard output
  std::set<std::string> faults;  // checks forced down their failure path
  unsigned threads = 0;          // 0: RS_VERIFY_THREADS, else hardware concurrency
};

enum class Status { Pass, Fail, Error };

struct CheckReport {
  std::string name;
  nlohmann::json params;
  Status status = Status::Pass;
  std::optional<verify::Discrepancy> discrepancy;
  std::string error;  // set for Status::Error
  double elapsed_ms = 0;
};

struct CatalogEntry {
  std::string name;
  std::string anchor;  // the statement the check certifies
  std::string uses;    // how degree and trials are interpreted
};

const std::vector<CatalogEntry>& catalog();

/// Expands "all" and validates names; throws UsageError for an unknown name.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

/// Runs one check with its own sampler stream. ConfigurationError is
/// reported as Status::Error; other exceptions as Status::Fail.
CheckReport run_check(const std::string& name, const SuiteConfig& cfg);

/// All selected checks, possibly in parallel, ordered by name.
std::vector<CheckReport> run_checks(const SuiteConfig& cfg);

/// Thread count: requested, else RS_VERIFY_THREADS, else hardware; never above `jobs`.
unsigned thread_count(unsigned requested, std::size_t jobs);

nlohmann::json to_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
std::string to_text(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);

/// Error beats failure beats pass.
int exit_code(const std::vector<CheckReport>& reports);

/// Runs, writes the report, returns the exit code. Usage errors are printed
/// to `err` and give kUsage.
int run_suite(const SuiteConfig& cfg, std::ostream& err);

std::string list_checks();

}  // namespace rsv::suite
