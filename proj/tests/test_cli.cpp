#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mpart/cli.hpp"
#include "mpart/verify.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mpart::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("digits") {
  CHECK(run({"digits", "--base", "4", "--n", "36"}).out == "2,1,0\n");
  CHECK(run({"digits", "--base", "5", "--n", "485"}).out == "3,4,2,0\n");
  CHECK(run({"digits", "--base", "1", "--n", "5"}).code == 2);
}

TEST_CASE("count") {
  CHECK(run({"count", "--kind", "b", "--base", "3", "--n", "10"}).out == "5\n");
  CHECK(run({"count", "--kind", "c", "--base", "5", "--n", "2425"}).out == "230358\n");
  CHECK(run({"count", "--kind", "b", "--base", "7", "--n", "6"}).out == "1\n");
  for (const char* method : {"nested", "poly", "recurrence", "gf", "enumerate"}) {
    CHECK(run({"count", "--kind", "b", "--base", "3", "--n", "10", "--method", method}).out == "5\n");
  }
  const Result checked = run({"count", "--kind", "c", "--base", "4", "--n", "73", "--check"});
  CHECK(checked.code == 0);
  CHECK(checked.out == "51\n");
}

TEST_CASE("count usage and resource errors exit 2") {
  CHECK(run({"count", "--kind", "x", "--base", "3", "--n", "10"}).code == 2);
  CHECK(run({"count", "--kind", "c", "--base", "3", "--n", "10", "--method", "gf"}).code == 2);
  CHECK(run({"count", "--kind", "b", "--base", "3"}).code == 2);
  CHECK(run({}).code == 2);

  const Result over = run({"count", "--kind", "b", "--base", "2", "--n", "100000", "--method", "enumerate"});
  CHECK(over.code == 2);
  CHECK(over.err.find("--method poly") != std::string::npos);
}

TEST_CASE("budgets come from the environment") {
  ::setenv("MPART_LOOP_BUDGET", "5", 1);
  const Result limited = run({"count", "--kind", "b", "--base", "2", "--n", "200", "--method", "nested"});
  CHECK(limited.code == 2);
  ::setenv("MPART_LOOP_BUDGET", "abc", 1);
  CHECK(run({"count", "--kind", "b", "--base", "2", "--n", "20"}).code == 2);
  ::unsetenv("MPART_LOOP_BUDGET");

  // --check skips methods over budget and still agrees on the rest.
  ::setenv("MPART_ENUM_BUDGET", "3", 1);
  const Result skipped = run({"count", "--kind", "b", "--base", "3", "--n", "10", "--check"});
  CHECK(skipped.code == 0);
  CHECK(skipped.out == "5\n");
  CHECK(skipped.err.find("skipped enumerate") != std::string::npos);
  ::unsetenv("MPART_ENUM_BUDGET");
}

TEST_CASE("phi and phi-inv") {
  CHECK(run({"phi", "--base", "4", "--n", "36", "--partition", "1,4,4"}).out == "1,1\n");
  CHECK(run({"phi", "--base", "4", "--n", "36", "--partition", "0,0,36"}).out == "2,9\n");
  CHECK(run({"phi-inv", "--base", "4", "--n", "36", "--beta", "2,0"}).out == "9,0\n");
  CHECK(run({"phi-inv", "--base", "4", "--n", "36", "--beta", "0,1"}).out == "2,0,4\n");
  CHECK(run({"phi-inv", "--base", "7", "--n", "6", "--beta", ""}).out == "6\n");
  CHECK(run({"phi", "--base", "4", "--n", "37", "--partition", "2,1,0"}).code == 2);
  CHECK(run({"phi-inv", "--base", "4", "--n", "36", "--beta", "2,10"}).code == 2);
}

TEST_CASE("table") {
  const Result t = run({"table", "--base", "4", "--n", "36"});
  const auto rows = lines(t.out);
  CHECK(rows.size() == 18);
  CHECK(rows.front() == "2,1,0\t0,0");
  CHECK(rows.back() == "0,0,36\t2,9");
  CHECK(run({"table", "--base", "7", "--n", "6"}).out == "6\t\n");

  const auto three = lines(run({"table", "--base", "3", "--n", "10"}).out);
  CHECK(three == std::vector<std::string>{"1,0,1\t0,0", "0,3,1\t1,0", "0,2,4\t1,1", "0,1,7\t1,2", "0,0,10\t1,3"});
}

TEST_CASE("congruence") {
  const Result c = run({"congruence", "--property", "afs-c", "--base", "5", "--n", "485"});
  CHECK(c.code == 0);
  CHECK(c.out == "afs-c m=5 n=485 modulus=5 predicted=3 actual=3 PASS\n");
  CHECK(run({"congruence", "--property", "afs-c-ell", "--base", "5", "--n", "485"}).code == 0);
  CHECK(run({"congruence", "--property", "afs-b", "--base", "4", "--n", "36"}).out ==
        "afs-b m=4 n=36 modulus=4 predicted=2 actual=2 PASS\n");
  const Result ch = run({"congruence", "--property", "churchhouse", "--n", "3", "--k", "2"});
  CHECK(ch.code == 0);
  CHECK(lines(ch.out).size() == 2);
  CHECK(run({"congruence", "--property", "bogus", "--base", "5", "--n", "1"}).code == 2);
}

TEST_CASE("verify emits schema-conforming JSON lines") {
  const Result v = run({"verify", "--suite", "afs-b", "--base-range", "2..4", "--n-range", "1..50"});
  CHECK(v.code == 0);
  const auto out = lines(v.out);
  REQUIRE(out.size() == 1);
  const auto summary = nlohmann::json::parse(out[0]);
  CHECK(summary["suite"] == "afs-b");
  CHECK(summary["cases_run"] == 150);
  CHECK(summary["failures"] == 0);
  CHECK(summary["status"] == "pass");

  for (const char* suite : {"oracle-b", "oracle-c", "bijection", "afs-c", "afs-equiv", "reduction"}) {
    CHECK(run({"verify", "--suite", suite, "--base-range", "2..3", "--n-range", "1..20"}).code == 0);
  }
  CHECK(run({"verify", "--suite", "churchhouse", "--n-range", "1..4", "--k-range", "1..2"}).code == 0);
}

TEST_CASE("verify failure records and exit codes") {
  // A tiny nested budget makes oracle-b skip rather than fail.
  ::setenv("MPART_LOOP_BUDGET", "200", 1);
  const Result tight = run({"verify", "--suite", "oracle-b", "--base-range", "2..2", "--n-range", "1..100"});
  ::unsetenv("MPART_LOOP_BUDGET");
  CHECK(tight.code == 0);
  CHECK(nlohmann::json::parse(lines(tight.out).back())["skipped"].get<int>() > 0);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "afs-b", "--n-range", "5..1"}).code == 2);
  CHECK(run({"verify", "--suite", "afs-b", "--base-range", "1..3"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args = {"verify", "--suite", "bijection", "--base-range", "2..4", "--n-range", "1..40"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"table", "--base", "3", "--n", "100"}).out == run({"table", "--base", "3", "--n", "100"}).out);
}

TEST_CASE("failure record serialization") {
  const mpart::FailureRecord f{3, 10, "poly", "123456789012345678901234567890", "5"};
  const auto j = nlohmann::json::parse(mpart::failure_json("oracle-b", f));
  CHECK(j["m"] == 3);
  CHECK(j["n"] == 10);
  CHECK(j["suite"] == "oracle-b");
  CHECK(j["method"] == "poly");
  CHECK(j["expected"].is_string());
  CHECK(j["expected"] == "123456789012345678901234567890");
  CHECK(j["actual"] == "5");
}
