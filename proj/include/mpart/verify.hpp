#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpart/budget.hpp"

namespace mpart {

/// Inclusive range parsed from "A..B".
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  /// Throws std::invalid_argument on malformed text or lo > hi.
  static Range parse(const std::string& text);
};

struct FailureRecord {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::string method;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  // Method evaluations skipped because a brute-force route hit its budget.
  std::uint64_t skipped = 0;
  std::vector<FailureRecord> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct SuiteSpec {
  std::string suite;
  Range bases{2, 5};
  Range ns{1, 100};
  Range ks{1, 2};  // churchhouse only
  Budgets budgets;
};

const std::vector<std::string>& suite_names();

/// Runs one suite over bases x ns (ascending m, then n). Failures are listed
/// in that order. Throws std::invalid_argument for an unknown suite or an
/// out-of-domain grid, and BudgetExceeded when a suite that cannot skip
/// (bijection) runs out of enumeration budget.
VerifyReport run_suite(const SuiteSpec& spec);

/// {"m":..,"n":..,"suite":..,"method":..,"expected":"..","actual":".."}
std::string failure_json(const std::string& suite, const FailureRecord& f);

/// {"suite":..,"cases_run":..,"failures":..,"skipped":..,"status":"pass"|"fail"}
std::string summary_json(const VerifyReport& report);

}  // namespace mpart
