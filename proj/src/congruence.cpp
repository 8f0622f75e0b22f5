#include "mpart/congruence.hpp"

#include <stdexcept>

#include "mpart/counting.hpp"

namespace mpart {
namespace {

// Arithmetic mod m on normalized representatives.
class ModRing {
 public:
  explicit ModRing(std::uint64_t m) : m_(m) {}

  std::uint64_t of(std::int64_t v) const {
    const auto sm = static_cast<__int128>(m_);
    __int128 r = static_cast<__int128>(v) % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, m_ - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m_);
  }
  Residue residue(std::uint64_t v) const { return {v, m_}; }

 private:
  std::uint64_t m_;
};

std::int64_t digit_signed(const BaseRepr& r, std::size_t i) { return static_cast<std::int64_t>(r.digit(i)); }

}  // namespace

Residue b_mod_product(const BaseRepr& r) {
  const ModRing z(r.base());
  std::uint64_t prod = z.of(1);
  for (std::size_t i = 0; i <= r.top_index(); ++i) prod = z.mul(prod, z.of(digit_signed(r, i) + 1));
  return z.residue(prod);
}

Residue c_mod_formula(const BaseRepr& r) {
  const ModRing z(r.base());
  const ChiVector chis = chi_vector(r);
  std::uint64_t sum = 0;
  std::uint64_t prod = z.of(1);
  for (std::size_t i = 1; i <= r.top_index(); ++i) {
    prod = z.mul(prod, z.of(digit_signed(r, i) - chis.chi(i)));
    sum = z.add(sum, prod);
  }
  const std::uint64_t a0 = z.of(digit_signed(r, 0));
  return z.residue(z.add(a0, z.mul(z.of(digit_signed(r, 0) - 1), sum)));
}

Residue afs_c_mod(const BaseRepr& r) {
  if (r.is_zero()) throw std::invalid_argument("afs_c_mod requires n >= 1");
  const ModRing z(r.base());
  std::size_t low = 0;
  while (r.digit(low) == 0) ++low;

  std::uint64_t sum = 0;
  std::uint64_t prod = z.of(1);
  for (std::size_t i = low + 1; i <= r.top_index(); ++i) {
    prod = z.mul(prod, z.of(digit_signed(r, i)));
    sum = z.add(sum, prod);
  }
  const std::uint64_t lead = z.of(digit_signed(r, low));
  const std::uint64_t tail = z.mul(z.of(digit_signed(r, low) - 1), sum);
  if (low % 2 == 0) return z.residue(z.add(lead, tail));
  return z.residue(z.sub(z.sub(z.of(1), lead), tail));
}

Residue exact_b_residue(std::uint64_t m, std::uint64_t n) {
  return Residue::of(count_b_poly(m, from_base(shift_up(to_base(m, n)))), m);
}

Residue exact_c_residue(std::uint64_t m, std::uint64_t n) {
  return Residue::of(count_c_poly(m, from_base(shift_up(to_base(m, n)))), m);
}

ChurchhouseResult churchhouse_check(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw std::invalid_argument("churchhouse_check requires k >= 1 and n >= 1");
  if (2 * k + 2 >= 63 || n > (UINT64_MAX >> (2 * k + 2))) throw std::overflow_error("arguments too large");
  const std::uint64_t top = (std::uint64_t{1} << (2 * k + 2)) * n;
  const std::vector<Count> b = recurrence_table(2, top, top + 1);
  auto at = [&](std::uint64_t e) -> const Count& { return b[(std::uint64_t{1} << e) * n]; };

  ChurchhouseResult out;
  out.even_difference = at(2 * k + 2) - at(2 * k);
  out.odd_difference = at(2 * k + 1) - at(2 * k - 1);
  const BigInt even_mod = BigInt(1) << (3 * k + 2);
  const BigInt odd_mod = BigInt(1) << (3 * k);
  out.even_step = out.even_difference % even_mod == 0;
  out.odd_step = out.odd_difference % odd_mod == 0;
  return out;
}

}  // namespace mpart
