#pragma once

// The acceptance criteria as runnable suites, shared by the acceptance
// binary and `tricomi selftest`. Every tolerance is fixed here.

#include <functional>
#include <string>
#include <vector>

namespace tricomi::suites {

struct SuiteResult {
  int id;
  std::string name;
  bool pass = false;
  std::string detail;  // the measured quantities behind the verdict
  double seconds = 0;
};

struct Suite {
  int id;
  std::string name;
  std::function<SuiteResult()> run;
};

/// Criteria 1..9 in order.
std::vector<Suite> acceptance_suites();

/// Runs one suite, timing it and turning exceptions into failures.
SuiteResult run_suite(const Suite& s);

/// "PASS  [1] Orthogonality (2.1 s): ..." / "FAIL  ...".
std::string format_line(const SuiteResult& r);

}  // namespace tricomi::suites
