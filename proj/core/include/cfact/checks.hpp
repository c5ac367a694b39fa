#pragma once

#include <string>
#include <vector>

namespace cfact {

inline const char* engine_version() { return "cfact 1.0.0"; }

struct CheckResult {
  std::string id;      // e.g. "thm5.1.b/Q8"
  std::string anchor;  // e.g. "thm5.1.b"
  std::string status;  // pass | fail | info | skip
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::string engine;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_passed() const;
  int failures() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"

/// Runs one suite ("all" runs every suite). Failures are report content,
/// not exceptions; checks run in a fixed order.
SuiteReport run_suite(const std::string& name);

/// JSON per the report schema:
/// {"suite", "engine", "checks": [{"id","anchor","status","expected","actual"}]}
std::string report_json(const SuiteReport& report);

/// Anchor coverage data for the meta-test: every numbered paper result is
/// either covered by at least one check or listed as out of scope.
const std::vector<std::string>& paper_result_anchors();
const std::vector<std::string>& out_of_scope_anchors();
std::vector<std::string> covered_anchors();

/// Directory with bundled .cay tables (settable; defaults to the build-time
/// data directory, overridable with the CFACT_DATA environment variable).
std::string data_dir();

}  // namespace cfact
