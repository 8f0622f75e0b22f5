#include "mpart/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpart {

BetaSeq BetaSeq::from_msb_first(std::uint64_t base, std::uint64_t n, std::span<const std::uint64_t> msb_first) {
  return BetaSeq(base, n, std::vector<std::uint64_t>(msb_first.rbegin(), msb_first.rend()));
}

bool operator<(const BetaSeq& a, const BetaSeq& b) {
  return std::lexicographical_compare(a.betas_.rbegin(), a.betas_.rend(), b.betas_.rbegin(), b.betas_.rend());
}

BetaSeq phi(const MaryPartition& p, std::uint64_t n) {
  if (weight(p) != n) {
    throw std::invalid_argument("partition has weight " + std::to_string(weight(p)) + ", expected " +
                                std::to_string(n));
  }
  const BaseRepr r = to_base(p.base(), n);
  const std::size_t j = r.top_index();
  const auto m = static_cast<std::int64_t>(p.base());

  // beta_j = alpha_j - lambda_j, beta_t = alpha_t - lambda_t + m * beta_{t+1}.
  // Signed arithmetic; weight(p) == n keeps every beta in [0, n].
  std::vector<std::uint64_t> betas(j, 0);
  std::int64_t carry = 0;
  for (std::size_t t = j; t >= 1; --t) {
    const std::int64_t beta =
        static_cast<std::int64_t>(r.digit(t)) - static_cast<std::int64_t>(p.mult(t)) + m * carry;
    if (beta < 0) throw std::logic_error("negative beta for a valid partition");
    betas[t - 1] = static_cast<std::uint64_t>(beta);
    carry = beta;
  }
  return BetaSeq(p.base(), n, std::move(betas));
}

bool is_member(const BetaSeq& b) {
  if (b.base() < 2) return false;
  const BaseRepr r = to_base(b.base(), b.n());
  const std::size_t j = r.top_index();
  if (b.size() != j) return false;
  if (j == 0) return true;
  if (b.beta(j) > r.digit(j)) return false;
  for (std::size_t t = j - 1; t >= 1; --t) {
    const std::uint64_t next = b.beta(t + 1);
    // alpha_t + m * beta_{t+1}; beta_{t+1} <= n keeps this within 64 bits for sane n.
    if (b.beta(t) > r.digit(t) + b.base() * next) return false;
  }
  return true;
}

MaryPartition phi_inv(const BetaSeq& b) {
  if (!is_member(b)) throw std::invalid_argument("sequence " + format_msb_first(b) + " is not in S_m(n)");
  const BaseRepr r = to_base(b.base(), b.n());
  const std::size_t j = r.top_index();
  const std::uint64_t m = b.base();

  std::vector<std::uint64_t> lambda(j + 1, 0);
  if (j == 0) {
    lambda[0] = r.digit(0);
  } else {
    lambda[j] = r.digit(j) - b.beta(j);
    for (std::size_t t = j - 1; t >= 1; --t) lambda[t] = r.digit(t) + m * b.beta(t + 1) - b.beta(t);
    lambda[0] = r.digit(0) + m * b.beta(1);
  }
  return MaryPartition::from_multiplicities(m, std::move(lambda));
}

std::vector<BetaSeq> enumerate_sequences(std::uint64_t m, std::uint64_t n, std::uint64_t budget) {
  const BaseRepr r = to_base(m, n);
  const std::size_t j = r.top_index();
  std::vector<BetaSeq> out;
  std::vector<std::uint64_t> buf(j, 0);

  auto emit = [&] {
    if (out.size() >= budget) {
      throw BudgetExceeded("sequence enumeration exceeds budget of " + std::to_string(budget), "poly");
    }
    out.emplace_back(m, n, buf);
  };
  // Level t picks beta_t in [0, hi], ascending, so output is lexicographic
  // on (beta_j, ..., beta_1).
  auto level = [&](auto&& self, std::size_t t, std::uint64_t hi) -> void {
    for (std::uint64_t v = 0; v <= hi; ++v) {
      buf[t - 1] = v;
      if (t == 1) {
        emit();
      } else {
        self(self, t - 1, r.digit(t - 1) + m * v);
      }
    }
  };
  if (j == 0) {
    emit();
  } else {
    level(level, j, r.digit(j));
  }
  return out;
}

std::vector<std::pair<MaryPartition, BetaSeq>> correspondence_table(std::uint64_t m, std::uint64_t n,
                                                                    std::uint64_t budget) {
  std::vector<std::pair<MaryPartition, BetaSeq>> rows;
  for (auto& p : enumerate_b(m, n, budget)) {
    BetaSeq b = phi(p, n);
    rows.emplace_back(std::move(p), std::move(b));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return rows;
}

std::string format_msb_first(const BetaSeq& b) {
  std::string out;
  for (std::size_t t = b.size(); t >= 1; --t) {
    out += std::to_string(b.beta(t));
    if (t > 1) out += ',';
  }
  return out;
}

}  // namespace mpart
