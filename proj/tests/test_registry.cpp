#include <algorithm>

#include "doctest.h"
#include "gl11/registry.hpp"

using namespace gl11;

namespace {

bool has(const std::vector<CheckEntry>& v, const std::string& id) {
  return std::any_of(v.begin(), v.end(), [&](const CheckEntry& e) { return e.id == id; });
}

SuiteConfig only(std::initializer_list<std::string> globs) {
  SuiteConfig c;
  c.filters = globs;
  return c;
}

// Timings are the only nondeterministic field.
std::vector<CheckReport> untimed(std::vector<CheckReport> v) {
  for (CheckReport& r : v) r.wall_seconds = 0;
  return v;
}

}  // namespace

TEST_CASE("glob matching") {
  CHECK(glob_match("ybe.*", "ybe.r12"));
  CHECK(glob_match("*.r11.*", "coproduct.r11.braided"));
  CHECK(glob_match("appendix.lemmaA?", "appendix.lemmaA3"));
  CHECK_FALSE(glob_match("ybe.*", "frt.r12.braided"));
  CHECK_FALSE(glob_match("ybe.r1", "ybe.r12"));
  CHECK(glob_match("*", ""));
}

TEST_CASE("registry lists the named checks with anchors") {
  auto all = check_registry();
  CHECK(has(all, "ybe.r12"));
  CHECK(has(all, "appendix.lemmaA1"));
  CHECK(has(all, "limit.braided.r11"));
  for (const CheckEntry& e : all) {
    CHECK_FALSE(e.anchor.empty());
    CHECK(std::count_if(all.begin(), all.end(), [&](const CheckEntry& x) { return x.id == e.id; }) == 1);
  }
}

TEST_CASE("selection by case, framework and glob") {
  SuiteConfig c;
  c.cases = {CaseId::r12};
  c.frameworks = {Framework::braided};
  for (const CheckEntry& e : select_checks(c)) {
    if (e.case_id) CHECK(*e.case_id == CaseId::r12);
    if (e.framework) CHECK(*e.framework == Framework::braided);
  }
  CHECK(select_checks(only({"ybe.*"})).size() == 4);
  CHECK_THROWS_AS(select_checks(only({"no.such.check"})), ConfigError);
  SuiteConfig bad;
  bad.numeric = true;
  bad.trials = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("ybe suite passes and round-trips through JSON") {
  auto reports = run_suite(only({"ybe.*"}));
  REQUIRE(reports.size() == 4);
  CHECK(suite_exit_code(reports) == 0);
  CHECK(suite_from_json(suite_to_json(reports)) == reports);
}

TEST_CASE("numeric runs are deterministic and agree with symbolic verdicts") {
  SuiteConfig num = only({"relations.r12.*", "frt.r11.*", "confluence.r22.*"});
  num.numeric = true;
  num.seed = 42;
  num.jobs = 2;
  auto a = run_suite(num);
  auto b = run_suite(num);
  CHECK(untimed(a) == untimed(b));
  SuiteConfig sym = num;
  sym.numeric = false;
  auto s = run_suite(sym);
  REQUIRE(s.size() == a.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].id == a[i].id);
    CHECK(s[i].status == a[i].status);
    CHECK(a[i].params.mode == "numeric");
    CHECK(a[i].params.trials == 3);
  }
}

TEST_CASE("failures keep residuals and set the exit code") {
  auto reports = run_suite(only({"appendix.beta"}));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::FAIL);
  CHECK_FALSE(reports[0].residuals.empty());
  CHECK(suite_exit_code(reports) == 1);
  CHECK(suite_to_text(reports).find("FAIL  appendix.beta") != std::string::npos);
}

TEST_CASE("R-matrix file override") {
  SuiteConfig c = only({"ybe.file"});
  c.rmatrix_json = R"({"name": "jordan", "entries": [["q","0","0","0"],["0","1","q-q^-1","0"],["0","0","1","0"],["0","0","0","q"]]})";
  auto reports = run_suite(c);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::PASS);
  c.rmatrix_json = R"({"name": "broken", "entries": [["q","0","0","0"],["0","1","1","0"],["0","0","1","0"],["0","0","0","q"]]})";
  CHECK(run_suite(c)[0].status == Status::FAIL);
}
