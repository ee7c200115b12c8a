// Acceptance run: one PASS/FAIL line per criterion, with timing against the
// budget of each. Exit status is the number of failed criteria, or 0 with
// --report-only (the ctest registration: verdicts are printed, not enforced).

#include <chrono>
#include <cstring>
#include <functional>
#include <cstdio>
#include <map>

#include "gl11/quantum_plane.hpp"
#include "gl11/registry.hpp"

using namespace gl11;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

// Registry reports by id, collected once per mode.
std::map<std::string, CheckReport> run_ids(const std::vector<std::string>& globs, bool numeric) {
  SuiteConfig cfg;
  cfg.filters = globs;
  cfg.numeric = numeric;
  cfg.seed = 42;
  cfg.trials = 3;
  std::map<std::string, CheckReport> out;
  for (CheckReport& r : run_suite(cfg)) out.emplace(r.id, std::move(r));
  return out;
}

bool diagnostic(const std::string& id) {
  return id.find(".swapped") != std::string::npos || id.find(".corrected") != std::string::npos;
}

void expect(Outcome& o, const std::map<std::string, CheckReport>& reports, const std::string& glob,
            Status want = Status::PASS) {
  int matched = 0;
  for (const auto& [id, r] : reports) {
    if (!glob_match(glob, id) || diagnostic(id)) continue;
    ++matched;
    if (r.status != want)
      o.fail(id + " " + std::string(to_string(r.status)) +
             (r.residuals.empty() ? "" : " (" + std::to_string(r.residuals.size()) + " residuals)"));
  }
  if (matched == 0) o.fail("no check matches " + glob);
}

struct Criterion {
  int number;
  const char* title;
  double budget;
  std::vector<std::string> globs;
  std::function<void(Outcome&, const std::map<std::string, CheckReport>&)> judge;
};

}  // namespace

int main(int argc, char** argv) {
  const bool report_only = argc > 1 && std::strcmp(argv[1], "--report-only") == 0;

  std::vector<Criterion> criteria = {
      {1, "YBE for the three matrices and the superidentity; perturbations fail", 20,
       {"ybe.*"},
       [](Outcome& o, const auto& rep) {
         expect(o, rep, "ybe.*");
         const std::pair<const char*, CaseId> mats[] = {{"r22", CaseId::r22},
                                                        {"r12", CaseId::r12},
                                                        {"r11", CaseId::r11},
                                                        {"superidentity", CaseId::r22}};
         for (auto [name, c] : mats) {
           Params p = Params::symbolic(c);
           RMatrix R = RMatrix::builtin(name, p);
           R.m[1][2] += Scalar(1);
           if (ybe_check(R, p).status != Status::FAIL)
             o.fail(std::string("perturbed ") + name + " still solves YBE");
         }
       }},
      {2, "FRT round trip for all six (case, framework) pairs", 30, {"frt.*"},
       [](Outcome& o, const auto& rep) { expect(o, rep, "frt.*"); }},
      {3, "printed relations at N = 6 (r22, r12) and N = 5 (r11)", 120, {"relations.*"},
       [](Outcome& o, const auto& rep) {
         expect(o, rep, "relations.*");
         for (const auto& [id, r] : rep)
           if (r.params.max_degree != (id.find("r11") != std::string::npos ? 5 : 6))
             o.fail(id + " ran at N = " + std::to_string(r.params.max_degree));
       }},
      {4, "coproduct tables at N = 4", 180, {"coproduct.*"},
       [](Outcome& o, const auto& rep) { expect(o, rep, "coproduct.*"); }},
      {5, "A(1,2) closed forms and the reordering formulae", 60,
       {"closed.r12.lemma1", "closed.r12.delta_*", "closed.r12.lemma2"},
       [](Outcome& o, const auto& rep) { expect(o, rep, "closed.r12.*"); }},
      {6, "coefficient polynomial lemmas, MEPS identity, beta/gamma/mu and evaluation tables", 120,
       {"appendix.lemmaA*", "appendix.meps", "appendix.beta", "appendix.gamma", "appendix.mu",
        "appendix.pairings_*"},
       [](Outcome& o, const auto& rep) { expect(o, rep, "appendix.*"); }},
      {7, "Hopf sanity for six pairs; dropping the graded sign breaks hom_check", 60,
       {"hopf.*"},
       [](Outcome& o, const auto& rep) {
         expect(o, rep, "hopf.hom.r*");
         expect(o, rep, "hopf.coassoc.*");
         expect(o, rep, "hopf.hom.nosign.*");
       }},
      {8, "classical limits: braided reach gl(1|1), unbraided keep eta", 30, {"limit.*"},
       [](Outcome& o, const auto& rep) {
         expect(o, rep, "limit.braided.*");
         expect(o, rep, "limit.unbraided.*", Status::OBSTRUCTION_CONFIRMED);
       }},
      {9, "change of basis (r11 exact, r12 printed with flagged residuals)", 30, {"basis.*"},
       [](Outcome& o, const auto& rep) {
         expect(o, rep, "basis.r11");
         expect(o, rep, "basis.r12.printed");
         auto it = rep.find("basis.r12.printed");
         if (it != rep.end() && it->second.residuals.empty())
           o.fail("basis.r12.printed emitted no residual polynomial for the flagged relations");
       }},
  };

  int failed = 0;
  std::vector<std::string> all_globs;
  std::map<std::string, CheckReport> symbolic;
  auto line = [&](int n, const char* title, const Outcome& o, double secs, double budget) {
    bool ok = o.pass && secs < budget;
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  %s  (%.1f s, budget %.0f s)\n", n, ok ? "PASS" : "FAIL", title,
                secs, budget);
    for (const std::string& note : o.notes) std::printf("    %s\n", note.c_str());
    if (secs >= budget) std::printf("    over budget\n");
    std::fflush(stdout);
  };

  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    auto reports = run_ids(c.globs, false);
    Outcome o;
    c.judge(o, reports);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    line(c.number, c.title, o, secs, c.budget);
    all_globs.insert(all_globs.end(), c.globs.begin(), c.globs.end());
    symbolic.insert(reports.begin(), reports.end());
  }

  // 10: numeric verdicts (seed 42, 3 trials) equal the symbolic ones.
  {
    auto t0 = Clock::now();
    auto numeric = run_ids(all_globs, true);
    Outcome o;
    for (const auto& [id, r] : symbolic) {
      auto it = numeric.find(id);
      if (it == numeric.end()) o.fail(id + " missing in numeric run");
      else if (it->second.status != r.status)
        o.fail(id + ": symbolic " + std::string(to_string(r.status)) + ", numeric " +
               std::string(to_string(it->second.status)));
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    line(10, "numeric and symbolic verdicts agree on criteria 1-9", o, secs, 600);
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return report_only ? 0 : failed;
}
