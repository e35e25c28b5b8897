#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uspecht {

struct VerifyConfig {
  int n_max = 5;
  std::vector<int> qs = {2, 3};
  uint64_t seed = 0;
  std::string inject_fault;  // "", "theta-sign"
  /// largest batch size exercised by the heavy per-orbit checks
  uint64_t orbit_batch_cap = 1024;
};

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  std::string detail;  // failing case, serialized for replay
  double seconds = 0;
};

/// Runs the whole invariant suite at the configured scale, in a fixed order.
std::vector<CheckResult> run_verify_suite(const VerifyConfig& cfg);

}  // namespace uspecht
