#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gl11/closed_forms.hpp"

using namespace gl11;

namespace {

std::string dump(const CheckReport& r, std::size_t limit = 6) {
  std::string s = r.id + " " + std::string(to_string(r.status)) + "\n";
  for (std::size_t i = 0; i < r.residuals.size() && i < limit; ++i)
    s += "  " + r.residuals[i].context + " = " + r.residuals[i].value + "\n";
  return s;
}

CheckReport run(const std::string& id, int degree = -1) {
  const ClosedFormCheck& c = closed_form_check(id);
  CheckReport r = c.run(Params::symbolic(c.case_id), degree < 0 ? c.default_degree : degree);
  r.id = c.id;
  return r;
}

}  // namespace

TEST_CASE("coefficient polynomial arithmetic") {
  CoeffPoly x = cp_var(0) + cp_var(1), y = cp_var(0) - cp_var(1);
  CoeffPoly sq = x * y;
  CHECK(sq == cp_var(0) * cp_var(0) - cp_var(1) * cp_var(1));
  CHECK(cp_diff(sq, 0) == Scalar(2) * cp_var(0));
  CHECK((x - x).empty());
  // The twist preserves a^2 - d^2 when r^2 - s^2 = 1.
  Params p = Params::symbolic(CaseId::r11);
  CHECK(cp_twist(sq, 1, -1, p.r, p.s) == sq);
  CHECK(cp_twist(sq, -1, 1, p.r, p.s) == sq);
}

TEST_CASE("registry ids are unique") {
  std::map<std::string, int> seen;
  for (const ClosedFormCheck& c : closed_form_checks()) CHECK(++seen[c.id] == 1);
  CHECK_THROWS(closed_form_check("closed.none"));
}

TEST_CASE("closed forms at low degree") {
  // Printed entries with a wrong coefficient; their amended variants hold.
  const std::set<std::string> misprinted = {"appendix.beta", "appendix.gamma", "appendix.mu",
                                            "appendix.eval_bc"};
  for (const ClosedFormCheck& c : closed_form_checks()) {
    CheckReport r = run(c.id, 3);
    INFO(dump(r));
    CHECK(r.status == (misprinted.count(c.id) ? Status::FAIL : Status::PASS));
  }
}

TEST_CASE("misprinted entries stay local") {
  std::set<std::string> tags;
  for (const char* id : {"appendix.beta", "appendix.gamma", "appendix.mu"})
    for (const Residual& x : run(id, 3).residuals) tags.insert(x.context.substr(0, x.context.find(' ')));
  CHECK(tags == std::set<std::string>{"beta01,00", "gamma10,00", "gamma00,10", "mu01,01"});
}

TEST_CASE("numeric mode agrees") {
  std::mt19937_64 rng(7);
  for (const char* id : {"closed.r12.delta_adb", "appendix.gamma", "appendix.lemmaA1"}) {
    const ClosedFormCheck& c = closed_form_check(id);
    CheckReport sym = c.run(Params::symbolic(c.case_id), 2);
    CheckReport num = c.run(Params::sample(c.case_id, rng), 2);
    CHECK(sym.status == num.status);
    CHECK(num.params.mode == "numeric");
  }
}
