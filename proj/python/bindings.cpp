// Python bindings for the core library (module spectrajoin._spectrajoin).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectrajoin/cospectral.hpp"
#include "spectrajoin/graph_spec.hpp"
#include "spectrajoin/joins.hpp"
#include "spectrajoin/spectra.hpp"

namespace py = pybind11;
using namespace spectrajoin;

namespace {

std::vector<std::string> coeff_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

/// [(value, multiplicity, exact-or-None)], descending.
py::list spectrum_list(const Spectrum& s) {
  py::list out;
  for (const auto& e : s.entries()) {
    py::object exact = py::none();
    if (e.value.exact) exact = py::str(to_string(*e.value.exact));
    out.append(py::make_tuple(e.value.value, e.multiplicity, exact));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_spectrajoin, m) {
  m.doc() = "Spectra of neighbors-splitting (NS) and non-neighbors-splitting (NNS) joins";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& spec) { return parse_graph_spec(spec); }, py::arg("spec"))
      .def_static("from_graph6", [](const std::string& g6) { return from_graph6(g6); })
      .def("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("degrees", &Graph::degrees)
      .def("adjacent", &Graph::adjacent)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph n=" + std::to_string(g.order()) + " g6=" + to_graph6(g) + ">"; });

  m.def("join", [](const std::string& kind, const Graph& g1, const Graph& g2) { return join(parse_join_kind(kind), g1, g2); },
        py::arg("kind"), py::arg("g1"), py::arg("g2"), "kind is 'plain', 'ns' or 'nns'");

  m.def("charpoly", [](const Graph& g, const std::string& kind) { return coeff_strings(graph_charpoly(g, parse_matrix_kind(kind))); },
        py::arg("graph"), py::arg("matrix") = "A", "Exact coefficients as 'p/q' strings, lowest degree first");

  m.def("spectrum", [](const Graph& g, const std::string& kind) { return spectrum_list(numeric_spectrum(g, parse_matrix_kind(kind))); },
        py::arg("graph"), py::arg("matrix") = "A");

  m.def("closed_form_spectrum",
        [](const std::string& formula, const Graph& g1, const Graph& g2) {
          return spectrum_list(closed_form_spectrum(parse_spectrum_formula(formula), g1, g2));
        },
        py::arg("formula"), py::arg("g1"), py::arg("g2"), "formula is '5.1', '6.1', '6.2', '6.3' or '6.4'");

  m.def("are_cospectral", [](const Graph& g, const Graph& h, const std::string& kind) { return are_cospectral_exact(g, h, parse_matrix_kind(kind)); },
        py::arg("g"), py::arg("h"), py::arg("matrix") = "A");

  m.def("are_isomorphic",
        [](const Graph& g, const Graph& h) {
          const IsomorphismResult r = are_isomorphic(g, h);
          return py::make_tuple(r.isomorphic, r.witness ? py::cast(*r.witness) : py::none());
        },
        py::arg("g"), py::arg("h"));

  m.def("verify_identity",
        [](const std::string& label, const Graph& g1, const Graph& g2) {
          return verify_charpoly_identity(parse_charpoly_identity(label), g1, g2).equal;
        },
        py::arg("identity"), py::arg("g1"), py::arg("g2"), "identity is '4.1a' ... '4.3b'");

  m.def("nics",
        [](const std::string& label, const std::vector<Graph>& inputs) {
          const NicsReport r = nics_pair(parse_nics_template(label), inputs);
          py::dict out;
          for (const auto& v : r.verdicts) out[py::str(std::string(to_string(v.kind)))] = v.cospectral;
          return py::make_tuple(r.nics(), out, r.isomorphic);
        },
        py::arg("template"), py::arg("inputs"));

  m.def("regular_cospectral_pairs",
        [](int n, int r) {
          const RegularSearchResult res = cached_regular_search(n, r, default_cache_dir());
          std::vector<std::pair<Graph, Graph>> out;
          for (const auto& [i, j] : res.pairs) out.emplace_back(res.graphs[static_cast<std::size_t>(i)], res.graphs[static_cast<std::size_t>(j)]);
          return out;
        },
        py::arg("n"), py::arg("r"));

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });
}
