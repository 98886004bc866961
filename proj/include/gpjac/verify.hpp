#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gpjac/int_matrix.hpp"
#include "gpjac/integer.hpp"

namespace gpjac {

/// The computation routes the sweep compares. Defaults are the library implementations;
/// tests substitute individual routes to check that a broken one is caught.
struct VerificationRoutes {
  std::function<Integer(long, long)> tau_kirchhoff;
  std::function<Integer(long, long)> tau_theorem1;
  std::function<AbelianGroup(long, long)> jacobian_laplacian;
  std::function<AbelianGroup(long, long)> jacobian_companion;
  std::function<Integer(long)> tau_prism;
  std::function<Integer(long)> tau_k2_quadratic;
  std::function<Integer(long)> tau_k2_recurrence;
  std::function<Integer(long)> tau_k3_recurrence;
  std::function<Integer(long)> tau_k4_recurrence;

  static VerificationRoutes library();
};

struct VerifyOptions {
  long n_max = 20;
  long k_max = 4;
  unsigned jobs = 1;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // observations that do not count as failures

  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  const PropertyResult* find(std::string_view name) const;
};

/// Cross-checks every route over 3 <= n <= n_max, 1 <= k <= min(n-1, k_max), plus the golden
/// table rows inside that grid.
VerifyReport run_verification(const VerifyOptions& options,
                              const VerificationRoutes& routes = VerificationRoutes::library());

}  // namespace gpjac
