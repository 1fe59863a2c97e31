// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <iostream>

#include "khr/acceptance.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= khr::acceptance::criterion_count(); ++id) {
    auto r = khr::acceptance::run_criterion(id);
    std::cout << khr::acceptance::summary_line(r) << "\n";
    for (const auto& line : r.details) std::cout << "        " << line << "\n";
    std::cout.flush();
    if (!r.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
