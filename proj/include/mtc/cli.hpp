#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mtc/qseries.hpp"
#include "mtc/serialize.hpp"

namespace mtc::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kConfig = 2, kConvergence = 3 };

struct RunConfig {
  std::string subcommand;   // verify, cusps, ords, numeric
  std::string suite;        // for verify: mtc, lemmas, remaining, weil, all
  QExponent bound{60};
  double tolerance = 1e-6;
  std::string json_path;    // empty: no JSON; "-": JSON on stdout
  bool force = false;
  bool timestamp = true;
  std::vector<std::string> inject_fault;
  std::vector<std::string> sample_points;  // numeric; empty means the standard set
  std::string group = "50,5";
  std::string match;        // cusps: comma-separated candidate list
};

/// Default bound: $MTC_DEFAULT_BOUND if set, otherwise 60.
QExponent default_bound();

struct CheckOutcome {
  int code = kPass;
  std::string message;
  Json detail;
};

struct Check {
  std::string id;
  bool numeric = false;
  std::function<CheckOutcome()> run;
};

struct CheckRecord {
  std::string id;
  CheckOutcome outcome;
};

/// Checks making up a verify suite, exact ones first.
std::vector<Check> suite_checks(const RunConfig& cfg);

/// Runs exact checks, then numeric ones; records come back sorted by id.
std::vector<CheckRecord> run_checks(const std::vector<Check>& checks);

/// Exit code of a whole run: configuration errors win, then convergence
/// failures, then mismatches.
int combine(const std::vector<CheckRecord>& records);

Json report_json(const RunConfig& cfg, const std::vector<CheckRecord>& records, int code);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cusps(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ords(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_numeric(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtc::cli
