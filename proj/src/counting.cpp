#include "mpart/counting.hpp"

#include <cassert>
#include <stdexcept>

#include "mpart/polysum.hpp"

namespace mpart {
namespace {

using Wide = unsigned __int128;

class StepMeter {
 public:
  explicit StepMeter(std::uint64_t budget) : budget_(budget) {}

  void tick() { charge(1); }

  // Charges a whole run of innermost ranges up front.
  void charge(std::uint64_t steps) {
    if (steps > budget_ - steps_) {
      throw BudgetExceeded("nested summation exceeds budget of " + std::to_string(budget_) + " steps", "poly");
    }
    steps_ += steps;
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

Count to_count(Wide v) {
  Count out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX / 4)) throw std::overflow_error("value too large for nested summation");
  return static_cast<std::int64_t>(v);
}

// Literal sum over k_r in [lo, hi] (and everything below it) of the gap-free
// formula. Level t ranges over [chi_t, alpha_t - 1 + m k_{t+1}].
Wide c_stratum_literal(const BaseRepr& r, const ChiVector& chis, std::size_t stratum, std::int64_t lo,
                       std::int64_t hi, StepMeter& meter) {
  const auto m = as_signed(r.base());
  auto level = [&](auto&& self, std::size_t t, std::int64_t from, std::int64_t to) -> Wide {
    if (t == 1) {
      meter.tick();
      return to >= from ? static_cast<Wide>(to - from + 1) : 0;
    }
    Wide total = 0;
    const auto alpha = static_cast<std::int64_t>(r.digit(t - 1));
    for (std::int64_t k = from; k <= to; ++k) total += self(self, t - 1, chis.chi(t - 1), alpha - 1 + m * k);
    return total;
  };
  return level(level, stratum, lo, hi);
}

// The inner-range identity S(hi) - S(lo - 1) needs hi >= lo - 1 at level t for
// every admissible k_{t+1} >= chi_{t+1}.
bool inner_level_valid(const BaseRepr& r, const ChiVector& chis, std::size_t t) {
  const BigInt min_hi = BigInt(r.digit(t)) - 1 + BigInt(r.base()) * chis.chi(t + 1);
  return min_hi >= static_cast<int>(chis.chi(t)) - 1;
}

}  // namespace

ChiVector chi_vector(const BaseRepr& r) {
  ChiVector out;
  const std::size_t j = r.top_index();
  out.values.reserve(j);
  for (std::size_t i = 1; i <= j; ++i) out.values.push_back(r.digit(i - 1) == 0 ? 1 : 0);
  return out;
}

Count count_b_nested(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget) {
  const BaseRepr r = to_base(m, n);
  const std::size_t j = r.top_index();
  if (j == 0) return 1;
  StepMeter meter(loop_budget);
  const auto base = as_signed(m);
  auto level = [&](auto&& self, std::size_t t, std::int64_t hi) -> Wide {
    if (t == 1) {
      meter.tick();
      return static_cast<Wide>(hi + 1);
    }
    Wide total = 0;
    const auto alpha = static_cast<std::int64_t>(r.digit(t - 1));
    if (t == 2) {
      // Each k_2 closes one innermost range: sum_{k_1=0}^{alpha_1 + m k_2} 1.
      meter.charge(static_cast<std::uint64_t>(hi + 1));
      for (std::int64_t k = 0; k <= hi; ++k) total += static_cast<Wide>(alpha + base * k + 1);
      return total;
    }
    for (std::int64_t k = 0; k <= hi; ++k) total += self(self, t - 1, alpha + base * k);
    return total;
  };
  return to_count(level(level, j, static_cast<std::int64_t>(r.digit(j))));
}

Count count_b_poly(std::uint64_t m, std::uint64_t n) {
  const BaseRepr r = to_base(m, n);
  const std::size_t j = r.top_index();
  if (j == 0) return 1;
  // g_t(k_{t+1}) = sum_{k_t=0}^{alpha_t + m k_{t+1}} g_{t-1}(k_t), g_0 = 1.
  IntPolynomial g = IntPolynomial::constant(1);
  for (std::size_t t = 1; t < j; ++t) g = g.prefix_sum().compose_affine(m, r.digit(t));
  return g.prefix_sum().eval(BigInt(r.digit(j)));
}

std::vector<Count> recurrence_table(std::uint64_t m, std::uint64_t N, std::uint64_t loop_budget) {
  require_base(m);
  if (N >= loop_budget) {
    throw BudgetExceeded("recurrence table of length " + std::to_string(N) + " exceeds budget", "poly");
  }
  std::vector<Count> b(N + 1);
  b[0] = 1;
  for (std::uint64_t i = 1; i <= N; ++i) {
    b[i] = b[i - 1];
    if (i % m == 0) b[i] += b[i / m];
  }
  return b;
}

Count count_b_recurrence(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget) {
  return recurrence_table(m, n, loop_budget)[n];
}

std::vector<Count> count_b_gf(std::uint64_t m, std::uint64_t N, std::uint64_t loop_budget) {
  require_base(m);
  if (N >= loop_budget) {
    throw BudgetExceeded("series truncation order " + std::to_string(N) + " exceeds budget", "poly");
  }
  std::vector<Count> coeffs(N + 1, 0);
  coeffs[0] = 1;
  // Multiplying by 1/(1 - q^s) is a prefix sum with stride s.
  for (std::uint64_t s = 1; s <= N; s *= m) {
    for (std::uint64_t i = s; i <= N; ++i) coeffs[i] += coeffs[i - s];
    if (s > N / m) break;
  }
  return coeffs;
}

Count count_c_nested(std::uint64_t m, std::uint64_t n, std::uint64_t loop_budget) {
  const BaseRepr r = to_base(m, n);
  const std::size_t j = r.top_index();
  const ChiVector chis = chi_vector(r);
  StepMeter meter(loop_budget);
  Wide total = 1;
  for (std::size_t s = 1; s <= j; ++s) {
    const std::int64_t top = as_signed(high_part(r, s)) - 1;
    total += c_stratum_literal(r, chis, s, chis.chi(s), top, meter);
  }
  return to_count(total);
}

Count count_c_poly(std::uint64_t m, std::uint64_t n) {
  const BaseRepr r = to_base(m, n);
  const std::size_t j = r.top_index();
  const ChiVector chis = chi_vector(r);
  Count total = 1;
  // h is the summand of the top variable k_s for stratum s; it depends only on
  // the levels below, so one fold serves every stratum.
  IntPolynomial h = IntPolynomial::constant(1);
  bool valid = true;
  for (std::size_t s = 1; s <= j; ++s) {
    const BigInt top = BigInt(high_part(r, s)) - 1;
    const std::int64_t lo = chis.chi(s);
    if (valid) {
      if (top >= lo - 1) total += sum_range(h, lo, top);
    } else {
      StepMeter unmetered(UINT64_MAX);
      total += to_count(c_stratum_literal(r, chis, s, lo, as_signed(high_part(r, s)) - 1, unmetered));
    }
    if (s < j) {
      const bool level_ok = inner_level_valid(r, chis, s);
      assert(level_ok && "gap-free inner range fell below its lower bound");
      valid = valid && level_ok;
      if (valid) {
        // h_s(k) = S(alpha_s - 1 + m k) - S(chi_s - 1), S = prefix sum of h_{s-1}.
        const IntPolynomial prefix = h.prefix_sum();
        const BigInt below = prefix.eval(static_cast<std::int64_t>(chis.chi(s)) - 1);
        h = prefix.compose_affine(m, BigInt(r.digit(s)) - 1).add_constant(-below);
      }
    }
  }
  return total;
}

}  // namespace mpart
