#pragma once

// Executable acceptance criteria. Every tolerance and runtime budget is fixed
// here; a criterion passes only if both hold.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qreg::acceptance {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;  // measured values against tolerances
  double seconds;
  double budget_seconds;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::pair<bool, std::string>()> body;
};

const std::vector<Criterion>& criteria();

CriterionResult run(const Criterion& criterion);

/// "[PASS] #4 asymptotic fidelity/entropy (2.1 s / 30 s): ..."
std::string format(const CriterionResult& result);

/// Runs every criterion, printing one line each to `log` as it finishes.
std::vector<CriterionResult> check_all(std::ostream& log);

}  // namespace qreg::acceptance
