#pragma once

#include <functional>
#include <string>
#include <vector>

#include "subcodes/gabidulin.hpp"

namespace subcodes {

/// Every lifted Gabidulin code over GF(2) with m <= 4, 1 <= k <= l <= m and
/// mk <= 8.
std::vector<GabidulinParams> small_gabidulin_grid();

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

/// One end-to-end property with its wall-clock budget.
struct Check {
  int id = 0;
  std::string name;
  double time_limit_seconds = 0;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;     // property held and finished within the time limit
  bool in_time = false;
  double seconds = 0;
  double time_limit_seconds = 0;
  std::string detail;

  /// "PASS  3 delta-rho-oracle (12.3s, limit 600s): ..."
  std::string summary() const;
};

/// The exhaustive and seeded checks behind the acceptance suite and the
/// `verify` command.
std::vector<Check> property_checks();

/// Runs a check, timing it and turning exceptions into failures.
CheckResult run_check(const Check& check);

}  // namespace subcodes
