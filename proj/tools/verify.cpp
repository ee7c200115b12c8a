// Command-line front end to the check registry.
//
//   verify --check 'ybe.*'
//   verify --case r12 --framework braided --mode numeric --seed 7 --output json

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gl11/quantum_plane.hpp"
#include "gl11/registry.hpp"

using namespace gl11;

namespace {

template <class T, class Parse>
std::vector<T> parse_list(const std::string& value, const char* what, Parse parse) {
  if (value == "all") return {};
  std::vector<T> out;
  std::stringstream in(value);
  for (std::string item; std::getline(in, item, ',');) {
    auto v = parse(item);
    if (!v) throw ConfigError(std::string("unknown ") + what + " '" + item + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the quantum deformations of GL(1|1) and gl(1|1)"};
  std::string cases = "all", frameworks = "all", mode = "symbolic", output = "text";
  std::vector<std::string> checks;
  std::string rmatrix;
  SuiteConfig config;
  bool list = false;
  std::string json_path;

  app.add_option("--case", cases, "r22, r12, r11 (comma separated) or all");
  app.add_option("--framework", frameworks, "unbraided, braided or all");
  app.add_option("--check", checks, "glob over check ids (repeatable)");
  app.add_option("--max-degree", config.max_degree, "override the degree bound N of every check");
  app.add_option("--mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  app.add_option("--trials", config.trials, "numeric trials per check");
  app.add_option("--seed", config.seed, "seed of numeric assignments and probe words");
  app.add_option("--rmatrix", rmatrix, "JSON R-matrix to check as ybe.file");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--json-file", json_path, "also write the JSON report here");
  app.add_option("--jobs", config.jobs, "worker threads (0: all cores)");
  app.add_flag("--list", list, "list the registry with anchors and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.cases = parse_list<CaseId>(cases, "case", parse_case);
    config.frameworks = parse_list<Framework>(frameworks, "framework", parse_framework);
    config.filters = checks;
    config.numeric = mode == "numeric";
    if (!rmatrix.empty()) {
      std::ifstream in(rmatrix);
      if (!in) throw ConfigError("cannot read R-matrix file '" + rmatrix + "'");
      std::stringstream text;
      text << in.rdbuf();
      config.rmatrix_json = text.str();
      // Parse once up front so a malformed file is a configuration error.
      RMatrix::from_json(*config.rmatrix_json, Params::symbolic(CaseId::r22));
    }
    config.validate();

    if (list) {
      for (const CheckEntry& e : select_checks(config))
        std::cout << e.id << "\t" << e.anchor << "\n";
      return 0;
    }

    std::vector<CheckReport> reports = run_suite(config);
    if (output == "json")
      std::cout << suite_to_json(reports) << "\n";
    else
      std::cout << suite_to_text(reports);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw ConfigError("cannot write '" + json_path + "'");
      out << suite_to_json(reports) << "\n";
    }
    return suite_exit_code(reports);
  } catch (const ConfigError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
