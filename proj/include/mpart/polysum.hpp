#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpart/bigint.hpp"

namespace mpart {

/// Integer-valued polynomial in the binomial basis: p(x) = sum_i c_i * C(x, i).
///
/// Integer coefficients in this basis are exactly the integer-valued
/// polynomials, so evaluation, prefix sums and affine substitution all stay
/// in exact integer arithmetic. The zero polynomial is stored as (0);
/// otherwise the top coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// p(x) for any integer x, using C(x, i) = x(x-1)...(x-i+1)/i! (also for x < 0).
  BigInt eval(const BigInt& x) const;
  BigInt eval(std::int64_t x) const { return eval(BigInt(x)); }

  /// q with q(N) = p(0) + ... + p(N) for N >= -1 (so q(-1) = 0).
  IntPolynomial prefix_sum() const;

  /// r with r(k) = p(a*k + b), from the forward differences of
  /// p(b), p(a + b), ..., p(d*a + b).
  IntPolynomial compose_affine(const BigInt& a, const BigInt& b) const;

  /// p + c.
  IntPolynomial add_constant(const BigInt& c) const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// p(lo) + ... + p(hi) for lo in {0, 1}. An empty range (hi == lo - 1) gives 0;
/// hi < lo - 1 throws std::invalid_argument.
BigInt sum_range(const IntPolynomial& p, std::int64_t lo, const BigInt& hi);

}  // namespace mpart
