#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace frak::verify {

struct Options {
  std::uint64_t seed = 1;
  /// Test hook: subtracts this constant from every kernel value used by the
  /// kernel checks, so a correct suite must report failures.
  double kernel_perturbation = 0.0;
  unsigned threads = 1;
  int kernel_samples = 100000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::ordered_json detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

inline constexpr double kSweepAlphas[] = {3.01, 3.5, 4.0};
inline constexpr double kSweepSigmas[] = {0.1, 0.5, 0.9};

/// Runs every invariant check over the (alpha, sigma) sweep. Results are
/// listed in a fixed order and depend only on the options.
Report run_suite(const Options& options);

}  // namespace frak::verify
