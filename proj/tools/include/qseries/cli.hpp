#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qseries/catalog.hpp"
#include "qseries/engine.hpp"

namespace qseries::cli {

inline constexpr int kReportSchemaVersion = 1;

enum class ExitCode : int {
  pass = 0,
  failures = 1,
  config_error = 2,
  property_h_failed = 3,
};

enum class ReportFormat { json_lines, csv, text };

std::string to_string(ReportFormat format);
/// Throws Error(invalid_config) for an unknown name.
ReportFormat parse_format(const std::string& name);

struct RunConfig {
  std::vector<std::string> identities;
  bool all = false;
  /// "1" or "1,2" (every dimension ranges over the values), or
  /// "n=2,m=1" (named; unnamed dimensions are 1).
  std::string dims = "1";
  int samples = 10;
  std::uint64_t seed = 1;
  long precision = kDefaultPrecision;
  TruncationPolicy policy;
  double tolerance = 1e-18;
  ReportFormat format = ReportFormat::json_lines;
  std::string out;  // empty: standard output
  int jobs = 1;     // 0: one per hardware thread
  /// Block assignment for compose runs.
  std::optional<engine::BlockAssignment> assignment;

  /// Throws Error(invalid_config) on out-of-range fields.
  void validate() const;
};

/// JSON object with every field of the config.
std::string config_to_json(const RunConfig& config);
/// Overrides the fields present in `json_text`. Unknown keys are rejected.
void apply_config_json(RunConfig& config, const std::string& json_text);

/// Dimension assignments selected by `spec` for an identity.
std::vector<Dims> expand_dims(const std::string& spec, const std::vector<std::string>& dim_names);

struct SideRecord {
  std::string re, im;
  Diagnostics diagnostics;
};

/// A named scalar or vector as decimal (real, imaginary) strings.
struct ValueRecord {
  std::string name;
  bool is_vector = false;
  std::vector<std::pair<std::string, std::string>> components;
};

struct CaseRecord {
  std::string identity_id;
  std::string dims;
  int sample = 0;
  std::vector<ValueRecord> params;
  std::vector<ValueRecord> bases;  // q, h, t and block exponents
  SideRecord lhs, rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::string verdict;  // "pass", "fail" or "error"
  std::string status;   // "ok" or the error code name
  std::string message;
  double wall_ms = 0.0;
};

struct IdentitySummary {
  std::string identity_id;
  int passed = 0;
  int failed = 0;
  int errors = 0;
  double worst_rel_error = 0.0;
  double wall_ms = 0.0;
};

struct Report {
  std::string tool_version;
  std::string timestamp;
  std::string config_json;
  std::vector<CaseRecord> cases;
  std::vector<IdentitySummary> identities;
  /// "ok", "failed", "property-H-failed", "config-error" or "domain-empty".
  std::string status = "ok";
  std::string message;

  int passed() const;
  int failed() const;
  int errors() const;
  ExitCode exit_code() const;
};

/// Verifies the selected catalog identities. Throws Error(unknown_identity)
/// or Error(invalid_config) before any evaluation.
Report run_verify(const RunConfig& config);

/// Composes config.assignment and verifies it. A block failing Property H
/// gives status "property-H-failed" and no cases.
Report run_compose(const RunConfig& config);

/// Decimal digits printed for a precision in bits.
int decimal_digits(long precision);

void write_report(const Report& report, ReportFormat format, std::ostream& out);
/// Writes to config.out, or standard output when it is empty.
void write_report(const Report& report, const RunConfig& config);

}  // namespace qseries::cli
