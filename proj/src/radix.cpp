#include "mpart/radix.hpp"

#include <limits>
#include <stdexcept>

namespace mpart {

void require_base(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(m));
}

BaseRepr BaseRepr::from_digits(std::uint64_t base, std::vector<Digit> lsb_first) {
  require_base(base);
  if (lsb_first.empty()) throw std::invalid_argument("digit vector is empty");
  for (Digit d : lsb_first) {
    if (d >= base) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range [0, " + std::to_string(base) + ")");
    }
  }
  if (lsb_first.size() > 1 && lsb_first.back() == 0) {
    throw std::invalid_argument("leading digit must be nonzero");
  }
  return BaseRepr(base, std::move(lsb_first));
}

BaseRepr to_base(std::uint64_t m, std::uint64_t n) {
  require_base(m);
  std::vector<Digit> digits;
  do {
    digits.push_back(n % m);
    n /= m;
  } while (n > 0);
  return BaseRepr::from_digits(m, std::move(digits));
}

std::uint64_t from_base(const BaseRepr& r) { return high_part(r, 0); }

std::uint64_t high_part(const BaseRepr& r, std::size_t from_index) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto digits = r.digits();
  std::uint64_t n = 0;
  for (std::size_t i = digits.size(); i-- > from_index;) {
    if (n > (kMax - digits[i]) / r.base()) throw std::overflow_error("value does not fit in 64 bits");
    n = n * r.base() + digits[i];
  }
  return n;
}

BaseRepr shift_up(const BaseRepr& r) {
  if (r.is_zero()) return r;
  std::vector<Digit> digits;
  digits.reserve(r.digits().size() + 1);
  digits.push_back(0);
  digits.insert(digits.end(), r.digits().begin(), r.digits().end());
  return BaseRepr::from_digits(r.base(), std::move(digits));
}

std::string format_msb_first(const BaseRepr& r) {
  std::string out;
  const auto digits = r.digits();
  for (std::size_t i = digits.size(); i-- > 0;) {
    out += std::to_string(digits[i]);
    if (i > 0) out += ',';
  }
  return out;
}

}  // namespace mpart
