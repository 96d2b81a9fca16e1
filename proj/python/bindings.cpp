#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "harris/barnacles.hpp"
#include "harris/canonical.hpp"
#include "harris/constructions.hpp"
#include "harris/enumeration.hpp"
#include "harris/families.hpp"
#include "harris/graph6.hpp"
#include "harris/properties.hpp"
#include "harris/report.hpp"

namespace py = pybind11;
using namespace harris;

namespace {

py::dict state_dict(const LabeledFamilyState& s) {
  py::dict d;
  d["family"] = s.family;
  d["step"] = s.step;
  d["order"] = s.graph.order();
  d["graph6"] = emit_graph6(s.graph);
  d["roles"] = s.roles;
  return d;
}

py::list states(const std::vector<LabeledFamilyState>& v) {
  py::list out;
  for (const auto& s : v) out.append(state_dict(s));
  return out;
}

py::tuple barnacle_tuple(const Barnacle& b) { return py::make_tuple(b.x, b.y, b.internal); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Harris graph toolkit: verification, constructions, families and census.";

  py::register_exception<CeilingExceeded>(m, "CeilingExceeded", PyExc_RuntimeError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            std::vector<Edge> list;
            for (auto [u, v] : edges) list.push_back({u, v});
            return Graph::from_edges(n, list);
          },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", &parse_graph6, py::arg("text"))
      .def("graph6", &emit_graph6)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degree", &Graph::degree, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree_sequence", [](const Graph& g) { return degree_sequence(g).degrees; })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("emit_graph6", &emit_graph6, py::arg("graph"));
  m.def("canonical_form", [](const Graph& g) { return canonical_form(g).bytes; }, py::arg("graph"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));

  m.def("is_eulerian", [](const Graph& g) { return is_eulerian(g).eulerian; }, py::arg("graph"));
  m.def(
      "is_tough",
      [](const Graph& g) -> py::tuple {
        auto v = is_tough(g);
        py::object witness = py::none();
        if (v.violating_set) witness = py::cast(members(*v.violating_set));
        return py::make_tuple(v.tough, witness);
      },
      py::arg("graph"), "Returns (tough, violating_set or None).");
  m.def(
      "find_hamiltonian_cycle", [](const Graph& g) { return find_hamiltonian_cycle(g).cycle; },
      py::arg("graph"), "A Hamiltonian cycle as a vertex list, or None.");
  m.def("is_harris", [](const Graph& g) { return is_harris(g, false).is_harris; }, py::arg("graph"));
  m.def(
      "check_json", [](const Graph& g) { return check_report(emit_graph6(g), g).dump(); }, py::arg("graph"),
      "Full check report as a JSON document.");
  m.def("sigma2", &sigma2, py::arg("graph"));

  m.def(
      "find_barnacles",
      [](const Graph& g) {
        py::list out;
        for (const auto& b : find_barnacles(g)) out.append(barnacle_tuple(b));
        return out;
      },
      py::arg("graph"), "Maximal barnacles as (x, y, internal) tuples.");
  m.def("is_barnacle_free", &is_barnacle_free, py::arg("graph"));
  m.def("simplify_all", &simplify_all, py::arg("graph"));
  m.def(
      "grow_barnacle",
      [](const Graph& g, int index, int extra) {
        const auto bs = find_barnacles(g);
        if (index < 0 || index >= static_cast<int>(bs.size())) throw GraphError("barnacle index out of range");
        return grow_barnacle(g, bs[index], extra);
      },
      py::arg("graph"), py::arg("index"), py::arg("extra") = 1);

  m.def(
      "graft",
      [](const Graph& g, std::pair<int, int> eg, const Graph& h, std::pair<int, int> eh) {
        return graft(g, {eg.first, eg.second}, h, {eh.first, eh.second});
      },
      py::arg("g"), py::arg("edge_g"), py::arg("h"), py::arg("edge_h"));
  m.def("flower", &flower, py::arg("graph"));

  m.def("hirotaka", [](int steps) { return states(hirotaka_family(steps)); }, py::arg("steps") = 0);
  m.def("shaw", [](int steps) { return states(shaw_family(steps)); }, py::arg("steps") = 0);
  m.def("justine", [](int n) { return state_dict(justine_labeled(n)); }, py::arg("n"));

  m.def(
      "enumerate_harris",
      [](int n, int threads) {
        CensusOptions opts;
        opts.threads = threads;
        CensusResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_harris(n, opts);
        }
        return r.catalog;
      },
      py::arg("n"), py::arg("threads") = 1, "Canonical graph6 strings of all Harris graphs of order n.");
}
