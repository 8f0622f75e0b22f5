#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpart {

/// Resource limits for the brute-force routes.
///
/// `enumeration` caps the number of partitions (or sequences) materialized by
/// an enumerator. `loop` caps the innermost-level steps of a literal nested
/// summation, and also the table length of the recurrence/series oracles.
struct Budgets {
  static constexpr std::uint64_t kDefaultEnumeration = 1'000'000;
  static constexpr std::uint64_t kDefaultLoop = 100'000'000;

  std::uint64_t enumeration = kDefaultEnumeration;
  std::uint64_t loop = kDefaultLoop;

  /// Defaults overridden by MPART_ENUM_BUDGET and MPART_LOOP_BUDGET.
  /// Throws std::invalid_argument on a malformed value.
  static Budgets from_environment();
};

/// Thrown when a brute-force route would exceed its budget. `fallback()`
/// names the method the caller should use instead.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::string fallback)
      : std::runtime_error(what), fallback_(std::move(fallback)) {}

  const std::string& fallback() const noexcept { return fallback_; }

 private:
  std::string fallback_;
};

}  // namespace mpart
