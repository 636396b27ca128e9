// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (0 when all pass).

#include <cstdio>

#include "tricomi/suites.hpp"

int main() {
  int failed = 0;
  for (const auto& s : tricomi::suites::acceptance_suites()) {
    auto r = tricomi::suites::run_suite(s);
    std::printf("%s\n", tricomi::suites::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed;
}
