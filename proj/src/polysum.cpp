#include "mpart/polysum.hpp"

#include <stdexcept>

namespace mpart {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt total = 0;
  BigInt binom = 1;  // C(x, i)
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      binom *= x - static_cast<std::int64_t>(i - 1);
      binom /= static_cast<std::int64_t>(i);  // exact
    }
    total += coeffs_[i] * binom;
  }
  return total;
}

IntPolynomial IntPolynomial::prefix_sum() const {
  if (is_zero()) return {};
  // sum_{x=0}^{N} C(x, i) = C(N+1, i+1) = C(N, i+1) + C(N, i).
  std::vector<BigInt> q(coeffs_.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    q[i] += coeffs_[i];
    q[i + 1] += coeffs_[i];
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::compose_affine(const BigInt& a, const BigInt& b) const {
  const std::size_t d = degree();
  std::vector<BigInt> values(d + 1);
  for (std::size_t k = 0; k <= d; ++k) values[k] = eval(a * static_cast<std::int64_t>(k) + b);
  // Newton: coefficient i is the i-th forward difference at 0.
  std::vector<BigInt> out(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    out[i] = values[0];
    for (std::size_t k = 0; k + i < d; ++k) values[k] = values[k + 1] - values[k];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::add_constant(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_.begin(), coeffs_.end());
  out[0] += c;
  return IntPolynomial(std::move(out));
}

BigInt sum_range(const IntPolynomial& p, std::int64_t lo, const BigInt& hi) {
  if (lo != 0 && lo != 1) throw std::invalid_argument("sum_range lower bound must be 0 or 1");
  if (hi < lo - 1) throw std::invalid_argument("sum_range upper bound below lo - 1");
  const IntPolynomial q = p.prefix_sum();
  return q.eval(hi) - q.eval(lo - 1);
}

}  // namespace mpart
