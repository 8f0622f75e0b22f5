#pragma once

#include <cstdint>

#include "mpart/bigint.hpp"
#include "mpart/radix.hpp"

namespace mpart {

/// A residue normalized into [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;

  static Residue of(const BigInt& v, std::uint64_t modulus) { return {residue_of(v, modulus), modulus}; }
  bool operator==(const Residue&) const = default;
};

/// Predicted b_m(m n) mod m: prod_{i=0}^{j} (alpha_i + 1), with r = r_m(n).
Residue b_mod_product(const BaseRepr& r);

/// Predicted c_m(m n) mod m:
/// alpha_0 + (alpha_0 - 1) sum_{i=1}^{j} prod_{k=1}^{i} (alpha_k - chi_k).
Residue c_mod_formula(const BaseRepr& r);

/// Predicted c_m(m n) mod m from the lowest nonzero digit alpha_l:
///   l even:  alpha_l + (alpha_l - 1) S
///   l odd:   1 - alpha_l - (alpha_l - 1) S
/// with S = sum_{i=l+1}^{j} alpha_{l+1} ... alpha_i. Requires n >= 1.
Residue afs_c_mod(const BaseRepr& r);

/// Exact b_m(m n) mod m and c_m(m n) mod m, via the polynomial counters.
Residue exact_b_residue(std::uint64_t m, std::uint64_t n);
Residue exact_c_residue(std::uint64_t m, std::uint64_t n);

struct ChurchhouseResult {
  bool even_step = false;  // b_2(2^(2k+2) n) == b_2(2^(2k) n)   mod 2^(3k+2)
  bool odd_step = false;   // b_2(2^(2k+1) n) == b_2(2^(2k-1) n) mod 2^(3k)
  BigInt even_difference;
  BigInt odd_difference;
};

/// Both binary-partition congruences for k, n >= 1, with exact counts from
/// the recurrence. Throws std::invalid_argument for k or n of 0.
ChurchhouseResult churchhouse_check(std::uint64_t k, std::uint64_t n);

}  // namespace mpart
