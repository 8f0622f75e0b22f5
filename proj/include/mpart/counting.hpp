#pragma once

#include <cstdint>
#include <vector>

#include "mpart/bigint.hpp"
#include "mpart/budget.hpp"
#include "mpart/radix.hpp"

namespace mpart {

/// Lower summation bounds of the gap-free formula: chi_i = 1 if alpha_{i-1} == 0,
/// else 0, for 1 <= i <= j.
struct ChiVector {
  std::vector<std::uint8_t> values;  // values[i - 1] is chi_i

  std::uint8_t chi(std::size_t i) const { return values[i - 1]; }
  std::size_t size() const noexcept { return values.size(); }
  bool operator==(const ChiVector&) const = default;
};

ChiVector chi_vector(const BaseRepr& r);

// b_m(n): the number of m-ary partitions of n. Every method gives b_m(0) = 1.

/// Direct nested loops k_j ... k_1 with k_t <= alpha_t + m k_{t+1}. The
/// innermost sum of ones over k_1 is taken as its range length; each such
/// range counts as one step against `loop_budget` (BudgetExceeded beyond it).
Count count_b_nested(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget = Budgets::kDefaultLoop);

/// The same j-fold sum, folded level by level as a binomial-basis polynomial.
/// Polynomial in j; no budget.
Count count_b_poly(std::uint64_t m, std::uint64_t n);

/// b(n) = b(n-1) + [m | n] b(n/m), b(0) = 1. Table length counts against the budget.
Count count_b_recurrence(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget = Budgets::kDefaultLoop);

/// b(0) .. b(N) by the same recurrence, as a flat table.
std::vector<Count> recurrence_table(std::uint64_t m, std::uint64_t N,
                                    std::uint64_t loop_budget = Budgets::kDefaultLoop);

/// Coefficients of prod_k 1/(1 - q^(m^k)) up to q^N: one strided prefix-sum
/// pass per factor with m^k <= N.
std::vector<Count> count_b_gf(std::uint64_t m, std::uint64_t N, std::uint64_t loop_budget = Budgets::kDefaultLoop);

// c_m(n): the number of gap-free m-ary partitions of n, c_m(0) = 1.

/// 1 + sum over strata r = 1..j of the literal nested sum with
/// k_r in [chi_r, floor(n/m^r) - 1] and k_t in [chi_t, alpha_t - 1 + m k_{t+1}].
/// Budget semantics as count_b_nested.
Count count_c_nested(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget = Budgets::kDefaultLoop);

/// Polynomial evaluation of the same strata. A stratum whose inner ranges could
/// fall below lo - 1 is summed literally instead (never happens for valid
/// digits, but checked).
Count count_c_poly(std::uint64_t m, std::uint64_t n);

}  // namespace mpart
