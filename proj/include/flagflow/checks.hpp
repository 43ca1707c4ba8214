#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagflow {

struct CheckResult {
  std::string id;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Suites: rootdata, jordan, pairing, period-identity, geometry, zeta, all.
std::vector<CheckResult> run_suite(const std::string& suite, uint64_t seed);
std::vector<std::string> suite_names();

// Deterministic plain-text report (no timestamps).
std::string format_report(const std::string& suite, uint64_t seed,
                          const std::vector<CheckResult>& results);

}  // namespace flagflow
