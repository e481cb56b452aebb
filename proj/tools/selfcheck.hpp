#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monoreg::cli {

struct CheckResult {
  std::string name;
  double observed;
  double expected;
  double tolerance;

  bool passed() const;
};

// Each check draws its own random instances from a counter-based stream keyed by `seed`.
CheckResult check_isotonic_brute_force(int instances, std::uint64_t seed);
CheckResult check_isotonic_gcm(int instances, std::uint64_t seed);
CheckResult check_empirical_bayes_identity(int instances, std::uint64_t seed);
CheckResult check_slse_quadrature(int step_functions, std::uint64_t seed);
std::vector<CheckResult> check_kernel_moments();
CheckResult check_philox_known_answers();

std::vector<CheckResult> run_selfcheck();

}  // namespace monoreg::cli
