#ifndef ROTOR_OTTO_TOOLS_SELFTEST_HPP_
#define ROTOR_OTTO_TOOLS_SELFTEST_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rotor_otto::tools {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error < tolerance; }
};

/// Cross-checks of production routines against the brute-force oracles at
/// random points drawn from mt19937_64(seed). `tol` replaces every per-check
/// default tolerance when set.
std::vector<CheckResult> run_selftest(std::uint64_t seed,
                                      std::optional<double> tol);

void print_table(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace rotor_otto::tools

#endif  // ROTOR_OTTO_TOOLS_SELFTEST_HPP_
