#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "mpart/counting.hpp"
#include "mpart/partition.hpp"
#include "oracles.hpp"

using namespace mpart;

TEST_CASE("chi_vector") {
  CHECK(chi_vector(to_base(5, 485)).values == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(chi_vector(to_base(4, 73)).values == std::vector<std::uint8_t>{0, 0, 1});
  CHECK(chi_vector(to_base(10, 123456)).values == std::vector<std::uint8_t>(5, 0));
  CHECK(chi_vector(to_base(7, 6)).values.empty());
}

TEST_CASE("b_m(n) worked values by every method") {
  struct Case {
    std::uint64_t m, n, b;
  };
  // b_3(10), b_4(36) and the j = 0 case come from the text; the rest from brute force.
  for (const Case c : {Case{3, 10, 5}, Case{4, 36, 18}, Case{7, 6, 1}, Case{2, 10, 14}, Case{2, 16, 36},
                       Case{3, 30, 28}, Case{4, 144, 262}}) {
    CAPTURE(c.m);
    CAPTURE(c.n);
    CHECK(count_b_nested(c.m, c.n) == c.b);
    CHECK(count_b_poly(c.m, c.n) == c.b);
    CHECK(count_b_recurrence(c.m, c.n) == c.b);
    CHECK(count_b_gf(c.m, c.n).back() == c.b);
  }
}

TEST_CASE("b_m(0) = 1 everywhere") {
  for (std::uint64_t m = 2; m <= 6; ++m) {
    CHECK(count_b_nested(m, 0) == 1);
    CHECK(count_b_poly(m, 0) == 1);
    CHECK(count_b_recurrence(m, 0) == 1);
    CHECK(count_b_gf(m, 0) == std::vector<Count>{1});
    CHECK(count_c_poly(m, 0) == 1);
    CHECK(count_c_nested(m, 0) == 1);
  }
}

TEST_CASE("poly on large inputs") {
  CHECK(count_b_poly(2, 1024) == count_b_recurrence(2, 1024));
  CHECK(count_b_poly(2, 1024) == Count(2320518948ULL));
  // Far beyond any table: just sanity on growth and flatness.
  const Count big = count_b_poly(2, 1ULL << 40);
  CHECK(big > count_b_poly(2, 1ULL << 39));
  CHECK(count_b_poly(3, 3'000'000'001ULL) == count_b_poly(3, 3'000'000'000ULL));
}

TEST_CASE("c_m(n) worked values") {
  CHECK(count_c_nested(4, 73) == 51);
  CHECK(count_c_poly(4, 73) == 51);
  CHECK(count_c_nested(5, 2425) == 230358);
  CHECK(count_c_poly(5, 2425) == 230358);
  CHECK(count_c_poly(7, 6) == 1);
  CHECK(count_c_nested(7, 6) == 1);
  CHECK(count_c_poly(3, 10) == 4);
  CHECK(count_c_poly(4, 292) == 1293);
  CHECK(count_c_poly(2, 300) == 782154);
}

TEST_CASE("nested budget") {
  CHECK_THROWS_AS(count_b_nested(2, 4096, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_c_nested(2, 4096, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_b_recurrence(2, 5000, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_b_gf(2, 5000, 1000), BudgetExceeded);
  try {
    count_b_nested(2, 4096, 10);
  } catch (const BudgetExceeded& e) {
    CHECK(e.fallback() == "poly");
  }
}

TEST_CASE("four routes for b agree with brute force") {
  for (std::uint64_t m = 2; m <= 5; ++m) {
    const std::uint64_t top = 600;
    const auto rec = recurrence_table(m, top);
    const auto gf = count_b_gf(m, top);
    for (std::uint64_t n = 1; n <= top; ++n) {
      REQUIRE(rec[n] == gf[n]);
      REQUIRE(count_b_poly(m, n) == rec[n]);
      REQUIRE(count_b_nested(m, n) == rec[n]);
      if (n <= 150) REQUIRE(rec[n] == Count(testing::brute_b(m, n)));
      if (n % m != 0) REQUIRE(rec[n] == rec[n - 1]);
    }
  }
}

TEST_CASE("gap-free routes agree with brute force") {
  for (std::uint64_t m = 2; m <= 7; ++m) {
    for (std::uint64_t n = 1; n <= 400; ++n) {
      const Count expected = testing::brute_c(m, n);
      REQUIRE(count_c_poly(m, n) == expected);
      REQUIRE(count_c_nested(m, n) == expected);
      REQUIRE(count_b_poly(m, n) >= expected);
      REQUIRE(expected >= 1);
    }
  }
}

TEST_CASE("gap-free strata of n = 73, m = 4") {
  // Per-largest-part counts from the enumerator; the counting routes must sum to them.
  std::vector<std::size_t> strata(4, 0);
  for (const auto& p : enumerate_c(4, 73)) ++strata[p.largest_exponent()];
  CHECK(strata == std::vector<std::size_t>{1, 18, 32, 0});
  CHECK(count_c_poly(4, 73) == Count(strata[0] + strata[1] + strata[2] + strata[3]));
}
