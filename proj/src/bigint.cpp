#include "mpart/bigint.hpp"

#include <stdexcept>

namespace mpart {

std::string to_decimal(const BigInt& v) { return v.str(); }

std::uint64_t residue_of(const BigInt& v, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace mpart
