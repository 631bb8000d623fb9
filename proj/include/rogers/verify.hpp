#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rogers {

/// A verification box: identities are checked for every cell with
/// k <= k_max and n <= n_max in l variables.
struct SweepSpec {
  int l = 2;
  int k_max = 4;
  int n_max = 4;
  std::vector<std::string> checks;
};

struct CheckReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// Inputs and both sides of the first failing cell.
  std::optional<std::string> counterexample;

  bool ok() const { return passed == total; }
};

/// Names accepted in SweepSpec::checks, in registration order.
const std::vector<std::string> &registered_checks();

/// Throws std::invalid_argument for bounds below the minimum (l < 2,
/// negative k_max or n_max) or an unregistered check name. An empty
/// check list means every registered check.
std::vector<CheckReport> run_sweep(const SweepSpec &spec);

} // namespace rogers
