#pragma once

#include <string>
#include <vector>

namespace cutpoint {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

// Suites: all, rotation, px, onestate, mcqfa.
std::vector<int> suite_checks(const std::string& suite);

// Runs one numbered check; passed requires the result and the time limit.
CheckResult run_check(int id);

std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace cutpoint
