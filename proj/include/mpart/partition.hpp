#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpart/budget.hpp"

namespace mpart {

/// An m-ary partition as a multiplicity vector: mult(i) copies of the part m^i.
///
/// Stored least exponent first and canonical: the top multiplicity is nonzero,
/// so the empty vector is the (only) partition of zero.
class MaryPartition {
 public:
  /// Strips zero multiplicities above the largest part.
  static MaryPartition from_multiplicities(std::uint64_t base, std::vector<std::uint64_t> lsb_first);

  /// Tuple (a_l, ..., a_0), largest part first; leading zeros are allowed and stripped.
  static MaryPartition from_msb_first(std::uint64_t base, std::span<const std::uint64_t> msb_first);

  std::uint64_t base() const noexcept { return base_; }
  std::span<const std::uint64_t> multiplicities() const noexcept { return mults_; }
  std::uint64_t mult(std::size_t i) const noexcept { return i < mults_.size() ? mults_[i] : 0; }
  bool empty() const noexcept { return mults_.empty(); }

  /// l, the exponent of the largest part. Requires !empty().
  std::size_t largest_exponent() const noexcept { return mults_.size() - 1; }

  bool operator==(const MaryPartition&) const = default;

 private:
  MaryPartition(std::uint64_t base, std::vector<std::uint64_t> mults) : base_(base), mults_(std::move(mults)) {}

  std::uint64_t base_;
  std::vector<std::uint64_t> mults_;
};

/// Sum of mult(i) * m^i. Throws std::overflow_error past 64 bits.
std::uint64_t weight(const MaryPartition& p);

/// True iff every power m^0 .. m^l occurs. The empty partition counts as gap-free.
bool is_gap_free(const MaryPartition& p);

/// All m-ary partitions of n, in descending lexicographic order of the
/// padded tuple (lambda_j, ..., lambda_0). Throws BudgetExceeded once more than
/// `budget` partitions would be produced.
std::vector<MaryPartition> enumerate_b(std::uint64_t m, std::uint64_t n,
                                       std::uint64_t budget = Budgets::kDefaultEnumeration);

/// The gap-free subset of enumerate_b(m, n), in the same order. Generated
/// directly with pruning, so the budget applies to the gap-free count only.
std::vector<MaryPartition> enumerate_c(std::uint64_t m, std::uint64_t n,
                                       std::uint64_t budget = Budgets::kDefaultEnumeration);

/// Most-significant first, comma separated, left-padded with zeros to `width`
/// entries (width <= size leaves it unpadded).
std::string format_padded(const MaryPartition& p, std::size_t width);

/// Parses "a_l,...,a_0". Throws std::invalid_argument on malformed input.
std::vector<std::uint64_t> parse_tuple(const std::string& text);

}  // namespace mpart
