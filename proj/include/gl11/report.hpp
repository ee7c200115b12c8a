#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gl11 {

enum class Status { PASS, FAIL, OBSTRUCTION_CONFIRMED, POLE };

std::string_view to_string(Status s);
Status parse_status(std::string_view s);

struct Residual {
  std::string context;
  std::string value;  // canonical Scalar text, or an element in normal form

  bool operator==(const Residual&) const = default;
};

struct RunParams {
  int max_degree = 0;
  std::string mode = "symbolic";
  std::uint64_t seed = 0;
  int trials = 0;

  bool operator==(const RunParams&) const = default;
};

/// Outcome of one check. A FAIL always carries at least one residual; a PASS
/// may carry informational residuals (expected nonzero values of a negative
/// control or of a relation reported but not asserted).
struct CheckReport {
  std::string id;
  std::string case_name;
  std::string framework;
  Status status = Status::PASS;
  std::vector<Residual> residuals;
  double wall_seconds = 0.0;
  RunParams params;
  std::string anchor;
  std::string message;

  bool ok() const {
    return status == Status::PASS || status == Status::OBSTRUCTION_CONFIRMED;
  }
  bool operator==(const CheckReport&) const = default;
};

inline constexpr std::string_view kReportSchema = "gl11-verify-report/1";

std::string to_json(const CheckReport& r, int indent = -1);
CheckReport report_from_json(std::string_view text);
std::string suite_to_json(const std::vector<CheckReport>& reports, int indent = 2);
std::vector<CheckReport> suite_from_json(std::string_view text);

}  // namespace gl11
