#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "mpart/radix.hpp"

using namespace mpart;

namespace {
std::vector<Digit> lsb(const BaseRepr& r) { return {r.digits().begin(), r.digits().end()}; }
}  // namespace

TEST_CASE("to_base worked examples") {
  CHECK(format_msb_first(to_base(4, 36)) == "2,1,0");
  CHECK(lsb(to_base(4, 36)) == std::vector<Digit>{0, 1, 2});
  CHECK(format_msb_first(to_base(5, 485)) == "3,4,2,0");
  CHECK(format_msb_first(to_base(4, 73)) == "1,0,2,1");

  const BaseRepr six = to_base(7, 6);
  CHECK(six.top_index() == 0);
  CHECK(format_msb_first(six) == "6");
}

TEST_CASE("zero is the single digit 0") {
  const BaseRepr z = to_base(3, 0);
  CHECK(z.is_zero());
  CHECK(lsb(z) == std::vector<Digit>{0});
  CHECK(from_base(z) == 0);
  CHECK(shift_up(z) == z);
}

TEST_CASE("from_base examples") {
  CHECK(from_base(to_base(4, 36)) == 36);
  CHECK(from_base(BaseRepr::from_digits(5, {0, 2, 4, 3})) == 485);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(to_base(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(to_base(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(BaseRepr::from_digits(4, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(BaseRepr::from_digits(4, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BaseRepr::from_digits(4, {}), std::invalid_argument);
}

TEST_CASE("shift_up appends a trailing zero") {
  CHECK(format_msb_first(shift_up(to_base(3, 10))) == "1,0,1,0");
  CHECK(from_base(shift_up(to_base(3, 10))) == 30);
  CHECK(format_msb_first(shift_up(to_base(5, 485))) == "3,4,2,0,0");
  CHECK(format_msb_first(shift_up(to_base(4, 1))) == "1,0");
}

TEST_CASE("high_part is floor(n / m^r)") {
  const BaseRepr r = to_base(4, 73);
  CHECK(high_part(r, 1) == 18);
  CHECK(high_part(r, 2) == 4);
  CHECK(high_part(r, 3) == 1);
}

TEST_CASE("round trip, digit bound and shift over the grid") {
  for (std::uint64_t m = 2; m <= 16; ++m) {
    for (std::uint64_t n = 0; n <= 1'000'000; n += (n < 5000 ? 1 : 997)) {
      const BaseRepr r = to_base(m, n);
      REQUIRE(from_base(r) == n);
      for (Digit d : r.digits()) REQUIRE(d < m);
      if (n > 0) REQUIRE(r.digit(r.top_index()) > 0);
      if (n > 0 && n < 1'000'000) REQUIRE(shift_up(r) == to_base(m, m * n));
    }
  }
}
