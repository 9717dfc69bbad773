#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vpotts/cli.hpp"
#include "vpotts/crosscheck.hpp"
#include "vpotts/document.hpp"
#include "vpotts/enumerate.hpp"
#include "vpotts/error.hpp"
#include "vpotts/potts.hpp"
#include "vpotts/tutte.hpp"
#include "vpotts/vpoly.hpp"

namespace py = pybind11;
using namespace vpotts;

namespace {

const PottsParams& params_of(const GraphDocument& doc) {
  if (!doc.params) throw InputError("document has no q, beta and couplings");
  return *doc.params;
}

Polynomial v_polynomial(const GraphDocument& doc, const std::string& method) {
  if (method == "delcon") return v_deletion_contraction(doc.graph);
  if (method == "statesum") return v_state_sum(doc.graph);
  if (method == "tree") return v_spanning_tree(doc.graph);
  if (method == "forest") return v_spanning_forest(doc.graph);
  if (method == "partition") return v_connected_partition(doc.graph);
  throw InputError("unknown vpoly method '" + method + "'");
}

Complex z_ext(const GraphDocument& doc, const std::string& method) {
  const PottsParams& p = params_of(doc);
  if (method == "v") return z_ext_via_v(doc.graph, p);
  if (method == "tree") return z_ext_tree_expansion(doc.graph, p);
  if (method == "forest") return z_ext_forest_expansion(doc.graph, p);
  if (method == "partition") return z_ext_partition_expansion(doc.graph, p);
  if (method == "brute") return z_brute_force(doc.graph, p);
  throw InputError("unknown zext method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "V-polynomial and Potts partition functions of weighted graphs";

  static py::exception<Error> base(m, "VpottsError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<SingularInputError>(m, "SingularInputError", base.ptr());

  py::class_<GraphDocument>(m, "Graph")
      .def_property_readonly("vertex_count", [](const GraphDocument& d) { return d.graph.vertex_count(); })
      .def_property_readonly("edge_count", [](const GraphDocument& d) { return d.graph.edge_count(); })
      .def_property_readonly("has_params", [](const GraphDocument& d) { return d.params.has_value(); })
      .def("to_json", [](const GraphDocument& d) { return to_json(d.graph, d.params); })
      .def("__repr__", [](const GraphDocument& d) {
        return "<vpotts.Graph with " + std::to_string(d.graph.vertex_count()) + " vertices, " +
               std::to_string(d.graph.edge_count()) + " edges>";
      });

  m.def("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse a graph document (JSON text).");
  m.def("v_polynomial",
        [](const GraphDocument& d, const std::string& method) { return v_polynomial(d, method).str(); },
        py::arg("graph"), py::arg("method") = "delcon",
        "Canonical text of V(G) by delcon, statesum, tree, forest or partition.");
  m.def("zt",
        [](const GraphDocument& d, const std::string& method) {
          if (method != "subset" && method != "traldi") throw InputError("unknown zt method '" + method + "'");
          return (method == "traldi" ? zt_traldi(d.graph) : zt_subset_sum(d.graph)).str();
        },
        py::arg("graph"), py::arg("method") = "subset");
  m.def("tutte", [](const GraphDocument& d) { return tutte_polynomial(d.graph).str(); }, py::arg("graph"));
  m.def("z_ext", &z_ext, py::arg("graph"), py::arg("method") = "v",
        "Partition function with field by v, tree, forest, partition or brute.");
  m.def("z_zero", [](const GraphDocument& d) { return z_zero(d.graph, params_of(d)); }, py::arg("graph"));
  m.def("rfim",
        [](const GraphDocument& d, bool literal_beta) {
          const PottsParams& p = params_of(d);
          if (p.q != 2) throw InputError("rfim needs q = 2");
          const Complex j = constant_coupling(d.graph, p).value_or(0.0);
          const auto r = rfim_partition(d.graph, p.beta, j, d.site_field,
                                        literal_beta ? BetaPlacement::Literal : BetaPlacement::InExponent);
          return py::dict(py::arg("brute_force") = r.brute_force, py::arg("forest") = r.forest,
                          py::arg("tree") = r.tree);
        },
        py::arg("graph"), py::arg("literal_beta") = false);
  m.def("spanning_tree_count", [](const GraphDocument& d) { return spanning_trees(d.graph).size(); });
  m.def("spanning_forest_count", [](const GraphDocument& d) { return spanning_forests(d.graph).size(); });
  m.def("connected_partition_count",
        [](const GraphDocument& d) { return connected_partitions(d.graph).size(); });
  m.def("crosscheck",
        [](std::size_t trials, std::uint64_t seed, std::size_t max_vertices, std::size_t max_edges) {
          CrosscheckOptions o;
          o.trials = trials;
          o.seed = seed;
          o.max_vertices = max_vertices;
          o.max_edges = max_edges;
          const auto r = run_crosscheck(o);
          return py::dict(py::arg("trials") = r.trials, py::arg("disagreements") = r.failures.size(),
                          py::arg("max_relative_error") = r.max_relative_error);
        },
        py::arg("trials") = 50, py::arg("seed") = 7, py::arg("max_vertices") = 6, py::arg("max_edges") = 9);
  m.def("run",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
          std::istringstream in(stdin_text);
          std::ostringstream out, err;
          const int code = run_command(args, in, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Run a command line; returns (exit code, stdout, stderr).");
}
