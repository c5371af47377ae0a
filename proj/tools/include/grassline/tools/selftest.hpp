#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grassline/adhm.hpp"
#include "grassline/transitions.hpp"

namespace grassline::tools {

struct SelftestOptions {
  std::uint64_t seed = 1;
  SplitOptions split;
  SampleOptions sample;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::size_t checks_run = 0;
  std::size_t cases = 0;
  std::vector<CheckResult> failures;

  bool passed() const { return checks_run > 0 && failures.empty(); }
  std::string summary_line() const;
};

// Suite names in criterion order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SelftestOptions& opts = {});

}  // namespace grassline::tools
