#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpart {

using BigInt = boost::multiprecision::cpp_int;

// Values of b_m(n) and c_m(n). Nonnegative by construction.
using Count = BigInt;

std::string to_decimal(const BigInt& v);

// v mod m, normalized into [0, m) for negative v as well.
std::uint64_t residue_of(const BigInt& v, std::uint64_t m);

}  // namespace mpart
