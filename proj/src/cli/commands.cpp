#include "mpart/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "mpart/bijection.hpp"
#include "mpart/budget.hpp"
#include "mpart/congruence.hpp"
#include "mpart/counting.hpp"
#include "mpart/partition.hpp"
#include "mpart/radix.hpp"
#include "mpart/verify.hpp"

namespace mpart::cli {
namespace {

struct CountArgs {
  std::string kind = "b";
  std::uint64_t base = 0;
  std::uint64_t n = 0;
  std::string method = "poly";
  bool check = false;
};

struct PhiArgs {
  std::uint64_t base = 0;
  std::uint64_t n = 0;
  std::string tuple;
};

struct CongruenceArgs {
  std::string property;
  std::uint64_t base = 2;
  std::uint64_t n = 0;
  std::uint64_t k = 1;
};

struct VerifyArgs {
  std::string suite;
  std::string bases = "2..5";
  std::string ns = "1..100";
  std::string ks = "1..2";
};

using Method = std::function<Count()>;

// Methods in a fixed order so --check output is deterministic.
std::vector<std::pair<std::string, Method>> methods_for(const CountArgs& a, const Budgets& budgets) {
  const auto m = a.base;
  const auto n = a.n;
  if (a.kind == "b") {
    return {
        {"nested", [=] { return count_b_nested(m, n, budgets.loop); }},
        {"poly", [=] { return count_b_poly(m, n); }},
        {"recurrence", [=] { return count_b_recurrence(m, n, budgets.loop); }},
        {"gf", [=] { return count_b_gf(m, n, budgets.loop)[n]; }},
        {"enumerate", [=] { return Count(enumerate_b(m, n, budgets.enumeration).size()); }},
    };
  }
  return {
      {"nested", [=] { return count_c_nested(m, n, budgets.loop); }},
      {"poly", [=] { return count_c_poly(m, n); }},
      {"enumerate", [=] { return Count(enumerate_c(m, n, budgets.enumeration).size()); }},
  };
}

int cmd_count(const CountArgs& a, const Budgets& budgets, std::ostream& out, std::ostream& err) {
  require_base(a.base);
  const auto methods = methods_for(a, budgets);
  if (!a.check) {
    const auto it = std::find_if(methods.begin(), methods.end(), [&](const auto& x) { return x.first == a.method; });
    if (it == methods.end()) {
      err << "method '" << a.method << "' does not apply to --kind " << a.kind << "\n";
      return kExitUsage;
    }
    out << to_decimal(it->second()) << "\n";
    return kExitOk;
  }

  std::vector<std::pair<std::string, Count>> values;
  for (const auto& [name, fn] : methods) {
    try {
      values.emplace_back(name, fn());
    } catch (const BudgetExceeded& e) {
      err << "skipped " << name << ": " << e.what() << "\n";
    }
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const auto& v) { return v.second == values.front().second; });
  if (!agree) {
    for (const auto& [name, value] : values) out << name << " " << to_decimal(value) << "\n";
    err << "methods disagree\n";
    return kExitFailure;
  }
  out << to_decimal(values.front().second) << "\n";
  return kExitOk;
}

int cmd_phi(const PhiArgs& a, std::ostream& out) {
  const auto tuple = parse_tuple(a.tuple);
  out << format_msb_first(phi(MaryPartition::from_msb_first(a.base, tuple), a.n)) << "\n";
  return kExitOk;
}

int cmd_phi_inv(const PhiArgs& a, std::ostream& out) {
  require_base(a.base);
  const auto tuple = parse_tuple(a.tuple);
  out << format_padded(phi_inv(BetaSeq::from_msb_first(a.base, a.n, tuple)), 0) << "\n";
  return kExitOk;
}

int cmd_table(std::uint64_t m, std::uint64_t n, const Budgets& budgets, std::ostream& out) {
  const std::size_t width = to_base(m, n).top_index() + 1;
  for (const auto& [lambda, beta] : correspondence_table(m, n, budgets.enumeration)) {
    out << format_padded(lambda, width) << '\t' << format_msb_first(beta) << '\n';
  }
  return kExitOk;
}

void report_line(std::ostream& out, const std::string& label, const std::string& where, std::uint64_t modulus,
                 std::uint64_t predicted, std::uint64_t actual) {
  out << label << ' ' << where << " modulus=" << modulus << " predicted=" << predicted << " actual=" << actual << ' '
      << (predicted == actual ? "PASS" : "FAIL") << '\n';
}

int cmd_congruence(const CongruenceArgs& a, std::ostream& out) {
  if (a.n == 0) throw std::invalid_argument("--n must be at least 1");
  if (a.property == "churchhouse") {
    const ChurchhouseResult res = churchhouse_check(a.k, a.n);
    const std::string where = "k=" + std::to_string(a.k) + " n=" + std::to_string(a.n);
    const std::uint64_t even_mod = std::uint64_t{1} << (3 * a.k + 2);
    const std::uint64_t odd_mod = std::uint64_t{1} << (3 * a.k);
    report_line(out, "churchhouse-even", where, even_mod, 0, residue_of(res.even_difference, even_mod));
    report_line(out, "churchhouse-odd", where, odd_mod, 0, residue_of(res.odd_difference, odd_mod));
    return res.even_step && res.odd_step ? kExitOk : kExitFailure;
  }

  const BaseRepr r = to_base(a.base, a.n);
  Residue predicted;
  Residue actual;
  if (a.property == "afs-b") {
    predicted = b_mod_product(r);
    actual = exact_b_residue(a.base, a.n);
  } else if (a.property == "afs-c") {
    predicted = c_mod_formula(r);
    actual = exact_c_residue(a.base, a.n);
  } else {
    predicted = afs_c_mod(r);
    actual = exact_c_residue(a.base, a.n);
  }
  const std::string where = "m=" + std::to_string(a.base) + " n=" + std::to_string(a.n);
  report_line(out, a.property, where, a.base, predicted.value, actual.value);
  return predicted == actual ? kExitOk : kExitFailure;
}

int cmd_verify(const VerifyArgs& a, const Budgets& budgets, std::ostream& out) {
  SuiteSpec spec;
  spec.suite = a.suite;
  spec.bases = Range::parse(a.bases);
  spec.ns = Range::parse(a.ns);
  spec.ks = Range::parse(a.ks);
  spec.budgets = budgets;
  const VerifyReport report = run_suite(spec);
  for (const auto& f : report.failures) out << failure_json(report.suite, f) << '\n';
  out << summary_json(report) << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and congruence checks for m-ary partitions", "mpart"};
  app.require_subcommand(1);

  std::uint64_t digits_base = 0;
  std::uint64_t digits_n = 0;
  auto* digits = app.add_subcommand("digits", "Base-m digits of n, most significant first");
  digits->add_option("--base", digits_base, "Base m >= 2")->required();
  digits->add_option("--n", digits_n, "Nonnegative integer")->required();

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact b_m(n) or c_m(n)");
  count->add_option("--kind", count_args.kind, "b (all m-ary) or c (gap-free)")
      ->required()
      ->check(CLI::IsMember({"b", "c"}));
  count->add_option("--base", count_args.base, "Base m >= 2")->required();
  count->add_option("--n", count_args.n, "Integer to partition")->required();
  count->add_option("--method", count_args.method, "nested|poly|recurrence|gf|enumerate")
      ->check(CLI::IsMember({"nested", "poly", "recurrence", "gf", "enumerate"}));
  count->add_flag("--check", count_args.check, "Run every applicable method and require agreement");

  PhiArgs phi_args;
  auto* phi_cmd = app.add_subcommand("phi", "Map a partition (a_l,...,a_0) to its sequence (b_j,...,b_1)");
  phi_cmd->add_option("--base", phi_args.base)->required();
  phi_cmd->add_option("--n", phi_args.n)->required();
  phi_cmd->add_option("--partition", phi_args.tuple, "Multiplicities, largest part first")->required();

  PhiArgs inv_args;
  auto* inv_cmd = app.add_subcommand("phi-inv", "Map a sequence (b_j,...,b_1) back to its partition");
  inv_cmd->add_option("--base", inv_args.base)->required();
  inv_cmd->add_option("--n", inv_args.n)->required();
  inv_cmd->add_option("--beta", inv_args.tuple, "Sequence, b_j first; empty when n < m")->required();

  std::uint64_t table_base = 0;
  std::uint64_t table_n = 0;
  auto* table = app.add_subcommand("table", "TSV of every partition of n and its sequence, sorted by sequence");
  table->add_option("--base", table_base)->required();
  table->add_option("--n", table_n)->required();

  CongruenceArgs cong_args;
  auto* cong = app.add_subcommand("congruence", "Compare a predicted residue with the exact one");
  cong->add_option("--property", cong_args.property)
      ->required()
      ->check(CLI::IsMember({"afs-b", "afs-c", "afs-c-ell", "churchhouse"}));
  cong->add_option("--base", cong_args.base, "Base m >= 2 (ignored for churchhouse)");
  cong->add_option("--n", cong_args.n)->required();
  cong->add_option("--k", cong_args.k, "Exponent parameter for churchhouse");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Batch check over an (m, n) grid; JSON lines on stdout");
  verify->add_option("--suite", verify_args.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--base-range", verify_args.bases, "Inclusive A..B")->capture_default_str();
  verify->add_option("--n-range", verify_args.ns, "Inclusive A..B")->capture_default_str();
  verify->add_option("--k-range", verify_args.ks, "Inclusive A..B, churchhouse only")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Budgets budgets = Budgets::from_environment();
    if (*digits) {
      out << format_msb_first(to_base(digits_base, digits_n)) << "\n";
      return kExitOk;
    }
    if (*count) return cmd_count(count_args, budgets, out, err);
    if (*phi_cmd) return cmd_phi(phi_args, out);
    if (*inv_cmd) return cmd_phi_inv(inv_args, out);
    if (*table) return cmd_table(table_base, table_n, budgets, out);
    if (*cong) return cmd_congruence(cong_args, out);
    if (*verify) return cmd_verify(verify_args, budgets, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; use --method " << e.fallback() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mpart::cli
