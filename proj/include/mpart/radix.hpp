#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpart {

using Digit = std::uint64_t;

/// Base-m representation of a nonnegative integer.
///
/// Digits are stored least significant first: digit(0) is alpha_0 and
/// digit(top_index()) is the leading digit alpha_j. Zero is the single digit 0.
/// Every instance satisfies 0 <= alpha_i < m with a nonzero leading digit
/// (except for zero).
class BaseRepr {
 public:
  /// Validates the digit invariants; throws std::invalid_argument otherwise.
  static BaseRepr from_digits(std::uint64_t base, std::vector<Digit> lsb_first);

  std::uint64_t base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }

  /// j, the index of the leading digit.
  std::size_t top_index() const noexcept { return digits_.size() - 1; }

  /// alpha_i, with alpha_i = 0 for i > j.
  Digit digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

  bool operator==(const BaseRepr&) const = default;

 private:
  BaseRepr(std::uint64_t base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {}

  std::uint64_t base_;
  std::vector<Digit> digits_;
};

/// r_m(n). Throws std::invalid_argument for m < 2.
BaseRepr to_base(std::uint64_t m, std::uint64_t n);

/// Reconstructs n. Throws std::overflow_error if n does not fit in 64 bits.
std::uint64_t from_base(const BaseRepr& r);

/// r_m(m*n): appends a trailing zero digit. Zero maps to zero.
BaseRepr shift_up(const BaseRepr& r);

/// floor(n / m^r) for r <= j, read off the digits.
std::uint64_t high_part(const BaseRepr& r, std::size_t from_index);

/// Most-significant-first, comma separated: r_4(36) -> "2,1,0".
std::string format_msb_first(const BaseRepr& r);

/// Throws std::invalid_argument for m < 2.
void require_base(std::uint64_t m);

}  // namespace mpart
