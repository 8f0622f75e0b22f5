#include "mpart/partition.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "mpart/radix.hpp"

namespace mpart {
namespace {

constexpr auto kU64Max = std::numeric_limits<std::uint64_t>::max();

// m^0 .. m^j for the largest j with m^j <= n (just {1} when n < m).
std::vector<std::uint64_t> powers_up_to(std::uint64_t m, std::uint64_t n) {
  std::vector<std::uint64_t> pw{1};
  while (pw.back() <= n / m) pw.push_back(pw.back() * m);
  return pw;
}

class Enumerator {
 public:
  Enumerator(std::uint64_t m, std::uint64_t n, std::uint64_t budget, bool gap_free)
      : m_(m), budget_(budget), gap_free_(gap_free), pw_(powers_up_to(m, n)), buf_(pw_.size(), 0) {
    // floor_[k] = m^0 + ... + m^(k-1), the least weight of levels below k when
    // each must be used at least once.
    floor_.assign(pw_.size() + 1, 0);
    for (std::size_t k = 1; k <= pw_.size(); ++k) floor_[k] = floor_[k - 1] + pw_[k - 1];
  }

  std::vector<MaryPartition> run(std::uint64_t n) {
    visit(pw_.size() - 1, n, false);
    return std::move(out_);
  }

 private:
  void visit(std::size_t k, std::uint64_t rem, bool started) {
    if (k == 0) {
      if (gap_free_ && started && rem == 0) return;
      buf_[0] = rem;
      emit();
      return;
    }
    const std::uint64_t hi = rem / pw_[k];
    for (std::uint64_t a = hi + 1; a-- > 0;) {
      const bool now_started = started || a > 0;
      if (gap_free_) {
        if (started && a == 0) break;
        if (now_started && rem - a * pw_[k] < floor_[k]) continue;
      }
      buf_[k] = a;
      visit(k - 1, rem - a * pw_[k], now_started);
    }
    buf_[k] = 0;
  }

  void emit() {
    if (out_.size() >= budget_) {
      throw BudgetExceeded("enumeration exceeds budget of " + std::to_string(budget_) + " partitions", "poly");
    }
    out_.push_back(MaryPartition::from_multiplicities(m_, buf_));
  }

  std::uint64_t m_;
  std::uint64_t budget_;
  bool gap_free_;
  std::vector<std::uint64_t> pw_;
  std::vector<std::uint64_t> floor_;
  std::vector<std::uint64_t> buf_;
  std::vector<MaryPartition> out_;
};

}  // namespace

MaryPartition MaryPartition::from_multiplicities(std::uint64_t base, std::vector<std::uint64_t> lsb_first) {
  require_base(base);
  while (!lsb_first.empty() && lsb_first.back() == 0) lsb_first.pop_back();
  return MaryPartition(base, std::move(lsb_first));
}

MaryPartition MaryPartition::from_msb_first(std::uint64_t base, std::span<const std::uint64_t> msb_first) {
  return from_multiplicities(base, std::vector<std::uint64_t>(msb_first.rbegin(), msb_first.rend()));
}

std::uint64_t weight(const MaryPartition& p) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  const auto mults = p.multiplicities();
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (i > 0) {
      if (power > kU64Max / p.base()) throw std::overflow_error("partition weight does not fit in 64 bits");
      power *= p.base();
    }
    if (mults[i] != 0 && (mults[i] > kU64Max / power || total > kU64Max - mults[i] * power)) {
      throw std::overflow_error("partition weight does not fit in 64 bits");
    }
    total += mults[i] * power;
  }
  return total;
}

bool is_gap_free(const MaryPartition& p) {
  for (std::uint64_t a : p.multiplicities()) {
    if (a == 0) return false;
  }
  return true;
}

std::vector<MaryPartition> enumerate_b(std::uint64_t m, std::uint64_t n, std::uint64_t budget) {
  require_base(m);
  if (n == 0) return {MaryPartition::from_multiplicities(m, {})};
  return Enumerator(m, n, budget, false).run(n);
}

std::vector<MaryPartition> enumerate_c(std::uint64_t m, std::uint64_t n, std::uint64_t budget) {
  require_base(m);
  if (n == 0) return {MaryPartition::from_multiplicities(m, {})};
  return Enumerator(m, n, budget, true).run(n);
}

std::string format_padded(const MaryPartition& p, std::size_t width) {
  const auto mults = p.multiplicities();
  const std::size_t len = std::max(width, mults.size());
  std::string out;
  for (std::size_t i = len; i-- > 0;) {
    out += std::to_string(p.mult(i));
    if (i > 0) out += ',';
  }
  return out;
}

std::vector<std::uint64_t> parse_tuple(const std::string& text) {
  std::vector<std::uint64_t> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("malformed tuple '" + text + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace mpart
