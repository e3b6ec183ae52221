#pragma once
// The acceptance suite: one report per criterion, thresholds pinned here.
// Quick mode uses 10x smaller sample sizes and 2x looser stochastic thresholds.

#include <string>
#include <vector>

#include "glc/report.hpp"

namespace glc {

struct SuiteResult {
  std::vector<TestReport> reports;
  double wall_ms = 0;
  uint64_t seed = 0;
  bool quick = false;
  bool pass() const {
    for (auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }
};

// criteria numbered 1..13; empty selection runs all
SuiteResult run_suite(uint64_t seed, bool quick, const std::vector<int>& selection = {});

std::string suite_result_json(const SuiteResult& r);
std::string report_json(const TestReport& r);

}  // namespace glc
