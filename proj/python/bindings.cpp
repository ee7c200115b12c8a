#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gl11/closed_forms.hpp"
#include "gl11/pairing.hpp"
#include "gl11/quantum_plane.hpp"
#include "gl11/registry.hpp"

namespace py = pybind11;
using namespace gl11;

namespace {

CaseId case_of(const std::string& name) {
  auto c = parse_case(name);
  if (!c) throw py::value_error("unknown case '" + name + "'");
  return *c;
}

Framework framework_of(const std::string& name) {
  auto f = parse_framework(name);
  if (!f) throw py::value_error("unknown framework '" + name + "'");
  return *f;
}

Params params_for(const std::string& c, std::optional<std::uint64_t> seed) {
  if (!seed) return Params::symbolic(case_of(c));
  std::mt19937_64 rng(*seed);
  return Params::sample(case_of(c), rng);
}

}  // namespace

PYBIND11_MODULE(_gl11, m) {
  m.doc() = "Exact verification of the quantum deformations of GL(1|1) and gl(1|1)";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init<long>())
      .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
      .def_static("parse", [](const std::string& text) { return Scalar::parse(text); })
      .def("is_zero", &Scalar::is_zero)
      .def("has_sigma", &Scalar::has_sigma)
      .def("inverse", &Scalar::inverse)
      .def("__pow__", [](const Scalar& x, int e) { return x.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& x) { return "Scalar('" + x.to_string() + "')"; });

  m.def("normal_form",
        [](const std::string& c, const std::string& f, const std::string& letters) {
          Presentation pres(case_of(c), framework_of(f), Params::symbolic(case_of(c)));
          return pres.to_string(pres.normalize(WordSum(group_word(letters))));
        },
        py::arg("case"), py::arg("framework"), py::arg("word"),
        "Normal form of a word in a, d, b, c in the deformed function algebra.");

  m.def("pair",
        [](const std::string& c, const std::string& dual, int k, int l, int b, int cc,
           std::optional<std::uint64_t> seed) {
          Params p = params_for(c, seed);
          Presentation pres(case_of(c), Framework::unbraided, p);
          Pairing pg(pres);
          return pg.pair(parse_dual(dual, p), group_monomial(k, l, b, cc)).to_string();
        },
        py::arg("case"), py::arg("dual"), py::arg("k"), py::arg("l"), py::arg("b") = 0,
        py::arg("c") = 0, py::arg("seed") = py::none(),
        "<X, a^k d^l b^b c^c> for a word X in A, B, C, D, K, eta.");

  m.def("ybe", [](const std::string& name, const std::string& c) {
    Params p = Params::symbolic(case_of(c));
    return std::string(to_string(ybe_check(RMatrix::builtin(name, p), p).status));
  }, py::arg("matrix"), py::arg("case") = "r22");

  m.def("list_checks", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CheckEntry& e : check_registry()) out.emplace_back(e.id, e.anchor);
    return out;
  });

  m.def("run_json",
        [](std::vector<std::string> checks, std::vector<std::string> cases,
           std::vector<std::string> frameworks, const std::string& mode, std::uint64_t seed,
           int trials, int max_degree, int jobs) {
          SuiteConfig cfg;
          cfg.filters = std::move(checks);
          for (const auto& c : cases) cfg.cases.push_back(case_of(c));
          for (const auto& f : frameworks) cfg.frameworks.push_back(framework_of(f));
          if (mode != "symbolic" && mode != "numeric") throw py::value_error("mode: symbolic|numeric");
          cfg.numeric = mode == "numeric";
          cfg.seed = seed;
          cfg.trials = trials;
          cfg.max_degree = max_degree;
          cfg.jobs = jobs;
          std::vector<CheckReport> reports;
          {
            py::gil_scoped_release release;
            reports = run_suite(cfg);
          }
          return suite_to_json(reports);
        },
        py::arg("checks") = std::vector<std::string>{}, py::arg("cases") = std::vector<std::string>{},
        py::arg("frameworks") = std::vector<std::string>{}, py::arg("mode") = "symbolic",
        py::arg("seed") = 42, py::arg("trials") = 3, py::arg("max_degree") = -1, py::arg("jobs") = 0);
}
