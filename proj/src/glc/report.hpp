#pragma once
// Seeded Monte Carlo comparison records: named statistics with pre-registered
// thresholds; a report passes iff every statistic is below its threshold.

#include <string>
#include <vector>

namespace glc {

struct TestReport {
  std::string name;
  uint64_t seed = 0;
  long n = 0;
  struct Stat {
    std::string key;
    double value;
    double threshold;  // pass requires value < threshold
    bool ok() const { return value < threshold; }
  };
  std::vector<Stat> stats;
  std::vector<std::pair<std::string, double>> info;  // extra diagnostics, no gate
  double wall_ms = 0;

  void add(const std::string& key, double value, double threshold) {
    stats.push_back({key, value, threshold});
  }
  void note(const std::string& key, double value) { info.emplace_back(key, value); }
  bool pass() const {
    for (auto& s : stats)
      if (!s.ok()) return false;
    return true;
  }
};

}  // namespace glc
