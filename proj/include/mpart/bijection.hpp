#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpart/budget.hpp"
#include "mpart/partition.hpp"
#include "mpart/radix.hpp"

namespace mpart {

/// A sequence (beta_j, ..., beta_1) attached to the integer n it encodes.
///
/// Stored by index ascending: betas()[t - 1] is beta_t. There is no beta_0,
/// so n < m gives the empty sequence.
class BetaSeq {
 public:
  BetaSeq(std::uint64_t base, std::uint64_t n, std::vector<std::uint64_t> by_index)
      : base_(base), n_(n), betas_(std::move(by_index)) {}

  /// Builds from the tuple (beta_j, ..., beta_1), highest index first.
  static BetaSeq from_msb_first(std::uint64_t base, std::uint64_t n, std::span<const std::uint64_t> msb_first);

  std::uint64_t base() const noexcept { return base_; }
  std::uint64_t n() const noexcept { return n_; }
  std::span<const std::uint64_t> betas() const noexcept { return betas_; }

  /// beta_t for 1 <= t <= size().
  std::uint64_t beta(std::size_t t) const noexcept { return betas_[t - 1]; }
  std::size_t size() const noexcept { return betas_.size(); }

  /// Lexicographic on (beta_j, ..., beta_1).
  friend bool operator<(const BetaSeq& a, const BetaSeq& b);
  bool operator==(const BetaSeq&) const = default;

 private:
  std::uint64_t base_;
  std::uint64_t n_;
  std::vector<std::uint64_t> betas_;
};

/// The subtraction r_m(n) - lambda. Throws std::invalid_argument when p is
/// not a partition of n.
BetaSeq phi(const MaryPartition& p, std::uint64_t n);

/// Inverse of phi; the result is canonical (high zero multiplicities removed).
/// Throws std::invalid_argument when b is not in S_m(n).
MaryPartition phi_inv(const BetaSeq& b);

/// Membership in S_m(n): exactly j entries, beta_j <= alpha_j and
/// beta_t <= alpha_t + m * beta_{t+1}.
bool is_member(const BetaSeq& b);

/// Every element of S_m(n) by bounded nested loops, ascending lexicographic
/// on (beta_j, ..., beta_1). Independent of phi. Throws BudgetExceeded past
/// `budget` sequences.
std::vector<BetaSeq> enumerate_sequences(std::uint64_t m, std::uint64_t n,
                                         std::uint64_t budget = Budgets::kDefaultEnumeration);

/// Rows (lambda, phi(lambda)) over all of B_m(n), sorted ascending by beta.
std::vector<std::pair<MaryPartition, BetaSeq>> correspondence_table(
    std::uint64_t m, std::uint64_t n, std::uint64_t budget = Budgets::kDefaultEnumeration);

/// "beta_j,...,beta_1"; empty for j = 0.
std::string format_msb_first(const BetaSeq& b);

}  // namespace mpart
