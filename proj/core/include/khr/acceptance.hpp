#pragma once

// The acceptance suite: each criterion recomputes its quantities with the
// engine and compares against closed-form anchors.

#include <string>
#include <vector>

namespace khr::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  ///< one line per check, failures first
  double seconds = 0.0;
};

int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// "PASS  3  gl(1) oracle  (0.12 s)" style line.
std::string summary_line(const CriterionResult& r);

}  // namespace khr::acceptance
