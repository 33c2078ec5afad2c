#ifndef RECONKIT_ACCEPTANCE_HPP
#define RECONKIT_ACCEPTANCE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reconkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Caps the order of the reduction sweeps (default: 5 for c = 1, 4 for c = 2). Must be >= 3.
  std::optional<std::size_t> n_max;
};

/// Criterion names in id order.
const std::vector<std::string>& criterion_names();

/// Runs one criterion by name or decimal id. Throws InputError for an unknown name.
CriterionResult run_criterion(std::string_view name, const AcceptanceOptions& options = {});

/// Runs every criterion, calling `on_result` after each one.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace reconkit

#endif  // RECONKIT_ACCEPTANCE_HPP
