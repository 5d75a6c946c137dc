#include "minorgrowth/acceptance.hpp"
#include "minorgrowth/enumerate.hpp"
#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/minor.hpp"
#include "minorgrowth/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace minorgrowth;

namespace {

// Counts cross as decimal text and are turned into Python ints on the other side.
py::int_ to_py(const BigInt& x) { return py::int_(py::str(to_decimal(x))); }

ClassSpec spec_of(const std::vector<std::string>& excludes) {
  ClassSpec spec = ClassSpec::parse(excludes);
  if (spec.empty()) throw std::invalid_argument("at least one excluded graph is required");
  return spec;
}

std::string classify_json(const std::vector<std::string>& excludes) {
  ClassSpec spec = spec_of(excludes);
  ClassifyResult r;
  r.category = classify(spec);
  r.growth_constant_exists = exists_growth_constant(spec);
  r.gamma_one = gamma_one_test(spec);
  const ClassSpec minimal = minimize_obstructions(spec);
  for (const auto& e : minimal.excluded()) r.minimized.push_back(e.label);
  json j = {{"spec", spec.key()},
            {"category", r.category},
            {"growth_constant_exists", r.growth_constant_exists},
            {"gamma_one", r.gamma_one},
            {"minimized", r.minimized}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting and classifying minor-closed graph classes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
             return out;
           },
           "Edges with 1-based labels.")
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_edge_string(g) + "')"; })
      .def("__str__", [](const Graph& g) { return to_edge_string(g); });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("canonical_text", [](const std::string& text) { return print(parse_graph_expr(text)); },
        py::arg("text"));
  m.def("is_minor",
        [](const std::string& h, const std::string& g) {
          return is_minor(parse_graph(h), parse_graph(g));
        },
        py::arg("h"), py::arg("g"));
  m.def("count_members",
        [](const std::vector<std::string>& excludes, int n, int workers) {
          BigInt c;
          {
            py::gil_scoped_release release;
            c = count_members(spec_of(excludes), n, {workers, -1});
          }
          return to_py(c);
        },
        py::arg("excludes"), py::arg("n"), py::arg("workers") = 1);
  m.def("apex_count",
        [](const std::vector<std::string>& excludes, int n) {
          return to_py(apex_count(spec_of(excludes), n));
        },
        py::arg("excludes"), py::arg("n"));
  m.def("classify_json", &classify_json, py::arg("excludes"));
  m.def("constants_json",
        [](int k_max, double tol) {
          Report r;
          r.command = "constants";
          r.result = compute_constants(k_max, tol);
          return json(r).at("result").dump();
        },
        py::arg("kmax") = 10, py::arg("tol") = 1e-12);
  m.def("run_criterion",
        [](int id, const std::string& level) {
          AcceptanceOptions options;
          options.level = parse_level(level);
          CriterionResult r = run_criterion(id, options);
          return py::dict(py::arg("id") = r.id, py::arg("name") = r.name,
                          py::arg("passed") = r.passed, py::arg("detail") = r.detail);
        },
        py::arg("id"), py::arg("level") = "fast");
}
