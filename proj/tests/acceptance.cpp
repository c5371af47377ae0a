#include <iostream>

#include "grassline/tools/selftest.hpp"

int main() {
  using namespace grassline::tools;
  int failed = 0;
  for (const auto& name : suite_names()) {
    SuiteResult res;
    try {
      res = run_suite(name);
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
      ++failed;
      continue;
    }
    std::cout << res.summary_line() << "\n";
    for (const auto& f : res.failures)
      std::cout << "    " << f.name << (f.witness ? ": " + *f.witness : std::string()) << "\n";
    if (!res.passed()) ++failed;
  }
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all criteria passed") << "\n";
  return failed ? 1 : 0;
}
