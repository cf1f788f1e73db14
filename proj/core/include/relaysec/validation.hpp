#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relaysec {

/// One invariant/oracle check: the measured quantity against the
/// tolerance it must meet (semantics of "measured" depend on the check
/// and are spelled out in its name/detail).
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

/// A group of checks timed together. Ids 1..8 are the release criteria;
/// ids >= 9 are supplementary invariant suites.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no budget
  std::vector<CheckResult> checks;
};

struct ValidationOptions {
  std::int64_t mc_trials = 100000;  // criteria 3-5 are specified at 1e5
  std::uint64_t master_seed = 1;
  double tolerance_scale = 1.0;  // multiplies error tolerances (not counts)
  int n_workers = 0;             // <= 0: auto
};

/// Release criteria 1..8.
std::vector<CriterionResult> run_acceptance(const ValidationOptions& opts);

/// Release criteria plus the supplementary invariant suites.
std::vector<CriterionResult> run_validation(const ValidationOptions& opts);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace relaysec
