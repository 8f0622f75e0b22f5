#include "mpart/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "json.hpp"

#include "mpart/bijection.hpp"
#include "mpart/congruence.hpp"
#include "mpart/counting.hpp"
#include "mpart/partition.hpp"
#include "mpart/radix.hpp"

namespace mpart {
namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string str(const BigInt& v) { return to_decimal(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

class Checker {
 public:
  Checker(VerifyReport& report, std::uint64_t m, std::uint64_t n) : report_(report), m_(m), n_(n) {}

  template <typename T>
  void expect_equal(const std::string& method, const T& expected, const T& actual) {
    if (!(expected == actual)) report_.failures.push_back({m_, n_, method, str(expected), str(actual)});
  }

  void fail(const std::string& method, std::string expected, std::string actual) {
    report_.failures.push_back({m_, n_, method, std::move(expected), std::move(actual)});
  }

 private:
  VerifyReport& report_;
  std::uint64_t m_;
  std::uint64_t n_;
};

void require_bases(const SuiteSpec& spec) {
  if (spec.bases.lo < 2) throw std::invalid_argument("base range must start at 2 or above");
}

void require_positive_n(const SuiteSpec& spec) {
  if (spec.ns.lo < 1) throw std::invalid_argument("n range must start at 1 or above");
}

void oracle_b(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    const auto rec = recurrence_table(m, spec.ns.hi, spec.budgets.loop);
    const auto gf = count_b_gf(m, spec.ns.hi, spec.budgets.loop);
    // Nested cost grows with n, so the first budget overrun ends nested checks for this base.
    bool nested_alive = true;
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      Checker check(report, m, n);
      ++report.cases_run;
      check.expect_equal("poly", rec[n], count_b_poly(m, n));
      check.expect_equal("gf", rec[n], gf[n]);
      if (nested_alive) {
        try {
          check.expect_equal("nested", rec[n], count_b_nested(m, n, spec.budgets.loop));
        } catch (const BudgetExceeded&) {
          nested_alive = false;
        }
      }
      if (!nested_alive) ++report.skipped;
    }
  }
}

void oracle_c(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      Checker check(report, m, n);
      ++report.cases_run;
      const Count poly = count_c_poly(m, n);
      try {
        check.expect_equal("nested", poly, count_c_nested(m, n, spec.budgets.loop));
      } catch (const BudgetExceeded&) {
        ++report.skipped;
      }
      try {
        check.expect_equal("enumerate", poly, Count(enumerate_c(m, n, spec.budgets.enumeration).size()));
      } catch (const BudgetExceeded&) {
        ++report.skipped;
      }
      const Count b = count_b_poly(m, n);
      if (!(b >= poly && poly >= 1)) check.fail("b>=c>=1", str(b), str(poly));
    }
  }
}

void bijection(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      Checker check(report, m, n);
      ++report.cases_run;
      const auto partitions = enumerate_b(m, n, spec.budgets.enumeration);
      const auto sequences = enumerate_sequences(m, n, spec.budgets.enumeration);

      std::vector<BetaSeq> images;
      images.reserve(partitions.size());
      std::uint64_t round_trip_failures = 0;
      std::uint64_t non_members = 0;
      for (const auto& p : partitions) {
        BetaSeq b = phi(p, n);
        if (!is_member(b)) {
          ++non_members;
        } else if (!(phi_inv(b) == p)) {
          ++round_trip_failures;
        }
        images.push_back(std::move(b));
      }
      check.expect_equal("phi-lands-in-S", std::uint64_t{0}, non_members);
      check.expect_equal("phi_inv-after-phi", std::uint64_t{0}, round_trip_failures);

      std::uint64_t inverse_failures = 0;
      for (const auto& s : sequences) {
        if (!(phi(phi_inv(s), n) == s)) ++inverse_failures;
      }
      check.expect_equal("phi-after-phi_inv", std::uint64_t{0}, inverse_failures);

      std::sort(images.begin(), images.end());
      const auto distinct =
          static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
      check.expect_equal("injective", static_cast<std::uint64_t>(partitions.size()), distinct);
      images.erase(images.begin() + static_cast<std::ptrdiff_t>(distinct), images.end());
      // enumerate_sequences is already ascending.
      if (!(images == sequences)) check.fail("image-equals-S", str(sequences.size()), str(images.size()));
      check.expect_equal("cardinality", count_b_poly(m, n), Count(sequences.size()));
    }
  }
}

void afs_b(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      ++report.cases_run;
      Checker(report, m, n)
          .expect_equal("product", exact_b_residue(m, n).value, b_mod_product(to_base(m, n)).value);
    }
  }
}

void afs_c(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      ++report.cases_run;
      Checker(report, m, n)
          .expect_equal("digit-formula", exact_c_residue(m, n).value, c_mod_formula(to_base(m, n)).value);
    }
  }
}

void afs_equiv(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      ++report.cases_run;
      Checker check(report, m, n);
      const BaseRepr r = to_base(m, n);
      const auto parity_form = afs_c_mod(r).value;
      check.expect_equal("parity-vs-digit-formula", c_mod_formula(r).value, parity_form);
      check.expect_equal("parity-vs-exact", exact_c_residue(m, n).value, parity_form);
    }
  }
}

void reduction(const SuiteSpec& spec, VerifyReport& report) {
  for (std::uint64_t m = spec.bases.lo; m <= spec.bases.hi; ++m) {
    for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
      ++report.cases_run;
      const BaseRepr r = to_base(m, n);
      const std::uint64_t mn = from_base(shift_up(r));
      const std::uint64_t m3n = from_base(shift_up(shift_up(shift_up(r))));
      Checker(report, m, n)
          .expect_equal("m^3n-vs-mn", residue_of(count_c_poly(m, mn), m), residue_of(count_c_poly(m, m3n), m));
    }
  }
}

void churchhouse(const SuiteSpec& spec, VerifyReport& report) {
  if (spec.ks.lo < 1) throw std::invalid_argument("k range must start at 1 or above");
  for (std::uint64_t n = spec.ns.lo; n <= spec.ns.hi; ++n) {
    for (std::uint64_t k = spec.ks.lo; k <= spec.ks.hi; ++k) {
      ++report.cases_run;
      const ChurchhouseResult res = churchhouse_check(k, n);
      Checker check(report, 2, n);
      const std::string tag = "k=" + std::to_string(k);
      if (!res.even_step) check.fail(tag + ":even", "0 mod 2^" + std::to_string(3 * k + 2), str(res.even_difference));
      if (!res.odd_step) check.fail(tag + ":odd", "0 mod 2^" + std::to_string(3 * k), str(res.odd_difference));
    }
  }
}

using SuiteFn = std::function<void(const SuiteSpec&, VerifyReport&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"oracle-b", oracle_b}, {"oracle-c", oracle_c}, {"bijection", bijection},   {"afs-b", afs_b},
      {"afs-c", afs_c},       {"afs-equiv", afs_equiv}, {"churchhouse", churchhouse}, {"reduction", reduction},
  };
  return suites;
}

}  // namespace

Range Range::parse(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw std::invalid_argument("range must look like A..B, got '" + text + "'");
  Range r{parse_u64(std::string_view(text).substr(0, sep)), parse_u64(std::string_view(text).substr(sep + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_suite(const SuiteSpec& spec) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == spec.suite; });
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + spec.suite + "'");
  if (spec.suite != "churchhouse") require_bases(spec);
  if (spec.suite != "oracle-b" && spec.suite != "oracle-c") require_positive_n(spec);
  VerifyReport report;
  report.suite = spec.suite;
  it->second(spec, report);
  return report;
}

std::string failure_json(const std::string& suite, const FailureRecord& f) {
  nlohmann::ordered_json j;
  j["m"] = f.m;
  j["n"] = f.n;
  j["suite"] = suite;
  j["method"] = f.method;
  j["expected"] = f.expected;
  j["actual"] = f.actual;
  return j.dump();
}

std::string summary_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["cases_run"] = report.cases_run;
  j["failures"] = report.failures.size();
  j["skipped"] = report.skipped;
  j["status"] = report.passed() ? "pass" : "fail";
  return j.dump();
}

}  // namespace mpart
