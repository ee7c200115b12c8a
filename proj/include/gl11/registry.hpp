#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gl11/params.hpp"
#include "gl11/report.hpp"

namespace gl11 {

/// Bad command line, unknown check name or unreadable R-matrix file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::vector<CaseId> cases;            // empty: all
  std::vector<Framework> frameworks;    // empty: all
  std::vector<std::string> filters;     // globs over check ids; empty: all
  int max_degree = -1;                  // -1: the default of each check
  bool numeric = false;
  int trials = 3;
  std::uint64_t seed = 42;
  std::optional<std::string> rmatrix_json;
  int jobs = 0;                         // 0: hardware concurrency

  void validate() const;
};

struct CheckEntry {
  std::string id;
  std::string anchor;
  std::optional<CaseId> case_id;
  std::optional<Framework> framework;
  int default_degree = 0;
  /// Needs indeterminate q, r (limits); numeric runs fall back to symbolic.
  bool symbolic_only = false;
  std::function<CheckReport(const Params&, int max_degree, std::uint64_t seed)> run;
};

/// The named checks. With an R-matrix file the list gains "ybe.file".
std::vector<CheckEntry> check_registry(const SuiteConfig& config = {});

bool glob_match(std::string_view pattern, std::string_view text);

/// Entries selected by cases, frameworks and filters. A filter matching no
/// check raises ConfigError.
std::vector<CheckEntry> select_checks(const SuiteConfig& config);

/// One check: symbolic, or `trials` seeded numeric runs (poles resampled).
CheckReport run_check(const CheckEntry& entry, const SuiteConfig& config);

/// All selected checks on a pool of threads, reported in registry order.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// 0 when every report is PASS or OBSTRUCTION-CONFIRMED, 1 otherwise.
int suite_exit_code(const std::vector<CheckReport>& reports);

std::string suite_to_text(const std::vector<CheckReport>& reports, int max_residuals = 5);

}  // namespace gl11
