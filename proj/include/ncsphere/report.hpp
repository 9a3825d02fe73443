#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncsphere/budget.hpp"
#include "ncsphere/freealg.hpp"
#include "ncsphere/sphere.hpp"

namespace ncs {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Bad flags, conflicting λ sources, unreadable configuration.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Check ids in report order.
const std::vector<std::string>& check_ids();

struct RunConfig {
  /// Exactly one of these is set once resolved.
  std::optional<std::string> lambda_json;
  std::optional<std::string> lambda_file;
  std::optional<std::string> pythagorean;
  std::optional<std::string> preset;

  int degree = 4;
  std::vector<std::string> checks;
  long budget_ms = 0;
  int workers = 1;
  std::optional<std::string> out;
  bool timings = false;

  /// Fills unset fields from a TOML file (keys: lambda, lambda_file,
  /// pythagorean, preset, degree, checks, budget_ms, workers, out).
  void merge_toml(const std::string& path);
  /// Throws UsageError on zero or several λ sources, degree < 2, unknown checks.
  void validate() const;
  ModuliParams moduli() const;
  /// Selected checks, defaulting to all, in report order.
  std::vector<std::string> selected_checks() const;
};

/// "p:q,p:q,p:q,p:q"; each entry is a Pythagorean pair or the literal 1 / -1.
ModuliParams parse_pythagorean(const std::string& list);

enum class CheckStatus { Pass, Fail, SkippedBudget, SkippedSpecial };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  /// The mathematical statement the check certifies.
  std::string anchor;
  CheckStatus status = CheckStatus::Fail;
  nlohmann::ordered_json certificate;
  long millis = 0;
};

/// Centrality of C and the Q_k plus any extra `candidates`. Failing
/// candidates are reported with the normal forms of their commutators.
CheckResult central_check(const ModuliParams& params, int degree, const Budget& budget,
                          const std::vector<std::pair<std::string, FreeElt>>& candidates = {});

CheckResult run_check(const std::string& id, const ModuliParams& params, int degree, long budget_ms);

struct VerifyOutcome {
  nlohmann::ordered_json report;
  /// 0 all pass, 1 a failure, 2 a skip.
  int exit_code = 0;
};

VerifyOutcome run_verify(const RunConfig& config);
nlohmann::ordered_json relations_report(const RunConfig& config);

/// Structural validation of a report; returns the list of problems.
std::vector<std::string> validate_report(const nlohmann::json& report);
/// Plain-text summary of a verify report.
std::string summarize(const nlohmann::json& report);
/// Exit code implied by a verify report.
int exit_code_of(const nlohmann::json& report);

}  // namespace ncs
