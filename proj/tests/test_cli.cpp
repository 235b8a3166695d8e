#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "mtc/cli.hpp"

using namespace mtc;
using namespace mtc::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "mtc");
  std::ostringstream out, err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"verify", "mtc"}).code == kPass);
  CHECK(invoke({"verify", "mtc", "--bound", "2"}).code == kConfig);
  CHECK(invoke({"verify", "mtc", "--bound", "2", "--force"}).code == kPass);
  CHECK(invoke({"verify", "nonsense"}).code == kConfig);
  CHECK(invoke({"verify", "mtc", "--bound", "x/y"}).code == kConfig);
  CHECK(invoke({"frobnicate"}).code == kConfig);
  CHECK(invoke({"cusps", "--group", "50"}).code == kConfig);
  CHECK(invoke({"numeric", "--z", "1-1i"}).code == kConfig);
}

TEST_CASE("fault injection names the identity") {
  const Result r = invoke({"verify", "mtc", "--inject-fault", "mtc3", "--json", "-", "--no-timestamp"});
  CHECK(r.code == kMismatch);
  const Json j = Json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["id"] == "mtc3") {
      found = true;
      CHECK(c["detail"]["status"] == "mismatch");
    } else {
      CHECK(c["status"] == "pass");
    }
  CHECK(found);
  CHECK(r.err.find("mtc3") != std::string::npos);
}

TEST_CASE("mtc suite report") {
  const Result r = invoke({"verify", "mtc", "--json", "-", "--no-timestamp"});
  REQUIRE(r.code == kPass);
  const Json j = Json::parse(r.out);
  CHECK_FALSE(j.contains("generated_at"));
  REQUIRE(j["checks"].size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(j["checks"][i]["id"] == "mtc" + std::to_string(i + 1));
    CHECK(j["checks"][i]["detail"]["status"] == "equal");
  }
  CHECK(Json::parse(invoke({"verify", "mtc", "--json", "-"}).out).contains("generated_at"));
}

TEST_CASE("reports are deterministic") {
  const auto a = invoke({"verify", "weil", "--json", "-", "--no-timestamp"});
  const auto b = invoke({"verify", "weil", "--json", "-", "--no-timestamp"});
  CHECK(a.code == kPass);
  CHECK(a.out == b.out);
}

TEST_CASE("suites") {
  RunConfig cfg;
  cfg.suite = "all";
  const auto checks = suite_checks(cfg);
  bool seen_numeric = false;
  for (const auto& c : checks) {
    if (c.numeric) seen_numeric = true;
    else CHECK_FALSE(seen_numeric);  // exact checks come first
  }
  CHECK(seen_numeric);
  cfg.suite = "remaining";
  CHECK(suite_checks(cfg).size() == 10);
  cfg.suite = "lemmas";
  CHECK(suite_checks(cfg).size() == 5);
}

TEST_CASE("combined exit code priority") {
  auto rec = [](const std::string& id, int code) { return CheckRecord{id, CheckOutcome{code, "", {}}}; };
  CHECK(combine({}) == kPass);
  CHECK(combine({rec("a", kPass), rec("b", kMismatch)}) == kMismatch);
  CHECK(combine({rec("a", kMismatch), rec("b", kConvergence)}) == kConvergence);
  CHECK(combine({rec("a", kConvergence), rec("b", kConfig), rec("c", kMismatch)}) == kConfig);
}

TEST_CASE("records come back sorted") {
  std::vector<Check> checks = {
      {"zeta", false, [] { return CheckOutcome{kPass, "", {}}; }},
      {"alpha", true, [] { return CheckOutcome{kPass, "", {}}; }},
      {"mid", false, []() -> CheckOutcome { throw std::runtime_error("boom"); }},
  };
  const auto r = run_checks(checks);
  REQUIRE(r.size() == 3);
  CHECK(r[0].id == "alpha");
  CHECK(r[1].id == "mid");
  CHECK(r[1].outcome.code != kPass);
  CHECK(r[2].id == "zeta");
}

TEST_CASE("cusps and ords") {
  const Result c = invoke({"cusps", "--group", "50,5", "--json", "-", "--no-timestamp"});
  CHECK(c.code == kPass);
  const Result m = invoke({"cusps", "--group", "50,5", "--match", "oo,0,1/5"});
  CHECK(m.code == kMismatch);  // three cusps cannot cover 24 classes
  CHECK(invoke({"ords"}).code == kPass);
}

TEST_CASE("numeric subcommand") {
  const Result r = invoke({"numeric", "--z", "0+1i", "--tol", "1e-6", "--json", "-", "--no-timestamp"});
  CHECK(r.code == kPass);
  CHECK(invoke({"numeric", "--z", "0+1i", "--tol", "1e-40"}).code == kMismatch);
}

TEST_CASE("default bound from the environment") {
  ::setenv("MTC_DEFAULT_BOUND", "45/2", 1);
  CHECK(default_bound() == QExponent(45, 2));
  ::unsetenv("MTC_DEFAULT_BOUND");
  CHECK(default_bound() == QExponent(60));
}
