// Python face of the library. Graphs cross the boundary as a thin Graph
// class; the structured reports cross as JSON strings and are decoded into
// dicts by the hamex package, so their schemas stay identical to the CLI's.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <utility>
#include <vector>

#include "hamex/families.hpp"
#include "hamex/graph.hpp"
#include "hamex/hamilton.hpp"
#include "hamex/parameters.hpp"
#include "hamex/reduction.hpp"
#include "hamex/sweep.hpp"

namespace py = pybind11;
using namespace hamex;

namespace {

py::object value_object(const ParameterValue& v) {
  if (v.exact) return py::int_(v.ivalue);
  return py::float_(v.rvalue);
}

FamilySpec family_spec(const std::string& property, int n, int s) {
  return {ham_property_from_string(property), n, s};
}

SweepSpec sweep_spec(int n, int k, const std::string& property, const std::string& parameter,
                     const std::string& source, double tol) {
  SweepSpec spec;
  spec.n = n;
  spec.k = k;
  spec.property = ham_property_from_string(property);
  spec.parameter = ParameterId::from_token(parameter);
  if (!source.empty()) spec.source = SweepSource::stream(source);
  spec.tol = tol;
  return spec;
}

SweepOptions sweep_options(int jobs, bool no_prefilter, bool allow_large) {
  SweepOptions opts;
  opts.jobs = jobs;
  opts.no_prefilter = no_prefilter;
  opts.allow_large = allow_large;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_hamex, m) {
  m.doc() = "Extremal bounds for Hamiltonicity under a minimum-degree constraint";

  py::class_<Graph>(m, "Graph")
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("empty", &Graph::empty)
      .def_static("complete", &Graph::complete)
      .def_static("build",
                  [](int n, const std::vector<std::pair<int, int>>& edges) {
                    return Graph::build(n, std::span(edges.data(), edges.size()));
                  })
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("min_degree", &Graph::min_degree)
      .def("max_degree", &Graph::max_degree)
      .def("with_edge", &Graph::with_edge)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; }, py::is_operator())
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def("kelmans", &kelmans, py::arg("g"), py::arg("x"), py::arg("y"));
  m.def("is_connected", &is_connected);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("satisfies", [](const Graph& g, const std::string& property) {
    return satisfies(g, ham_property_from_string(property));
  });
  m.def("closure", &closure, py::arg("g"), py::arg("t"));
  m.def("find_deficiency_set",
        [](const Graph& g, const std::string& property) -> py::object {
          auto w = find_deficiency_set(g, ham_property_from_string(property));
          if (!w) return py::none();
          py::dict d;
          d["s"] = w->s;
          d["bound"] = w->bound;
          d["members"] = set_to_vector(w->members);
          return d;
        });

  m.def("evaluate", [](const std::string& parameter, const Graph& g) {
    return value_object(evaluate(ParameterId::from_token(parameter), g));
  });

  m.def("build_family",
        [](const std::string& property, int n, int s) { return build_family(family_spec(property, n, s)); });
  m.def("family_edge_count", [](const std::string& property, int n, int s) {
    return family_edge_count(family_spec(property, n, s));
  });
  m.def("family_clique_count",
        [](int n, int s, int k) { return family_clique_count({HamProperty::Cycle, n, s}, k); });
  m.def("family_clique_count_variant", [](int n, int s, int k) {
    return family_clique_count_variant({HamProperty::Cycle, n, s}, k);
  });
  m.def("family_max",
        [](const std::string& parameter, int n, int k, const std::string& property, double tol) {
          FamilyScan scan =
              family_max(ParameterId::from_token(parameter), n, k, ham_property_from_string(property), tol);
          py::dict d;
          d["s_star"] = scan.s_star;
          d["value"] = value_object(scan.value);
          py::dict per;
          for (const auto& [s, v] : scan.per_s) per[py::str(std::to_string(s))] = value_object(v);
          d["per_s"] = per;
          return d;
        },
        py::arg("parameter"), py::arg("n"), py::arg("k"), py::arg("property"),
        py::arg("tol") = kCmpTol);
  m.def("erdos_threshold", &erdos_threshold, py::arg("n"), py::arg("k"));
  m.def("quotient_spectral_radius", &quotient_spectral_radius, py::arg("n"), py::arg("s"),
        py::arg("tol") = kEigenTol);

  m.def("reduce_graph_json",
        [](const Graph& g, const std::string& property, int k, const std::string& parameter) {
          return to_json_string(
              reduce(g, ham_property_from_string(property), k, ParameterId::from_token(parameter)));
        });
  m.def("verify_certificate_json",
        [](const std::string& certificate, const std::string& parameter, double tol) {
          return verify_certificate(reduction_certificate_from_json(certificate),
                                    ParameterId::from_token(parameter), tol);
        },
        py::arg("certificate"), py::arg("parameter"), py::arg("tol") = kCmpTol);

  m.def("check_feasibility_json",
        [](const std::string& parameter, int nmax, bool strict, double tol, int jobs) {
          return to_json_string(check_feasibility(ParameterId::from_token(parameter),
                                                  GraphPopulation::connected_upto(nmax), strict,
                                                  tol, jobs));
        },
        py::arg("parameter"), py::arg("nmax") = 6, py::arg("strict") = false,
        py::arg("tol") = kCmpTol, py::arg("jobs") = 0);

  m.def("verify_theorem_json",
        [](int n, int k, const std::string& property, const std::string& parameter,
           const std::string& source, double tol, int jobs, bool no_prefilter, bool allow_large) {
          return to_json_string(verify_theorem(sweep_spec(n, k, property, parameter, source, tol),
                                               sweep_options(jobs, no_prefilter, allow_large)));
        },
        py::arg("n"), py::arg("k"), py::arg("property"), py::arg("parameter"),
        py::arg("source") = std::string(), py::arg("tol") = kCmpTol, py::arg("jobs") = 0,
        py::arg("no_prefilter") = false, py::arg("allow_large") = false);
  m.def("verify_weak_bound_json",
        [](int n, int k, const std::string& property, const std::string& parameter,
           const std::string& source, double tol, int jobs, bool no_prefilter, bool allow_large) {
          return to_json_string(verify_weak_bound(sweep_spec(n, k, property, parameter, source, tol),
                                                  sweep_options(jobs, no_prefilter, allow_large)));
        },
        py::arg("n"), py::arg("k"), py::arg("property"), py::arg("parameter"),
        py::arg("source") = std::string(), py::arg("tol") = kCmpTol, py::arg("jobs") = 0,
        py::arg("no_prefilter") = false, py::arg("allow_large") = false);
  m.def("verify_erdos_json",
        [](int n, int k, int jobs, bool allow_large) {
          return to_json_string(verify_erdos(n, k, sweep_options(jobs, false, allow_large)));
        },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0, py::arg("allow_large") = false);
}
