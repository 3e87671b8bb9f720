#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cosmopoly/cli.hpp"
#include "cosmopoly/error.hpp"
#include "cosmopoly/families.hpp"
#include "cosmopoly/graph_io.hpp"
#include "cosmopoly/hstar.hpp"

namespace py = pybind11;
using namespace cosmopoly;

namespace {

using Coeffs = std::vector<std::int64_t>;

HstarOptions options(std::uint64_t max_nodes, std::uint64_t order_seed, int threads) {
  HstarOptions o;
  o.max_nodes = max_nodes;
  o.order_seed = order_seed;
  o.threads = threads;
  return o;
}

py::dict structure_dict(const StructureReport& r) {
  py::dict d;
  d["degree_ok"] = r.degree_ok;
  d["h1_ok"] = r.h1_ok;
  d["lower_bound_holds"] = r.lower_bound_holds;
  d["lower_bound_equal"] = r.lower_bound_equal;
  d["equality_expected"] = r.equality_expected;
  d["palindromic"] = r.palindromic;
  d["palindromic_expected"] = r.palindromic_expected;
  d["codegree"] = r.codegree ? py::cast(*r.codegree) : py::none();
  d["failures"] = r.failures;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cosmological polytopes of multigraphs";

  auto base = py::register_exception<Error>(m, "CosmopolyError");
  py::register_exception<InvalidGraph>(m, "InvalidGraph", base.ptr());
  py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ObstructionViolation>(m, "ObstructionViolation", base.ptr());
  py::register_exception<StructureViolation>(m, "StructureViolation", base.ptr());
  py::register_exception<AnchorFailure>(m, "AnchorFailure", base.ptr());
  py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init<int, const std::vector<std::pair<VertexId, VertexId>>&>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph_text(text).graph; })
      .def_static("read", [](const std::string& path) { return read_graph_file(path).graph; })
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("edge_count", &Multigraph::edge_count)
      .def_property_readonly("loop_count", &Multigraph::loop_count)
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("to_text", [](const Multigraph& g) { return write_graph(g); })
      .def("canonical_form", [](const Multigraph& g) { return canonical_form(g); })
      .def("is_connected", [](const Multigraph& g) { return is_connected(g); })
      .def("__eq__", &Multigraph::operator==)
      .def("__repr__", [](const Multigraph& g) { return "Multigraph(" + canonical_form(g) + ")"; });

  m.def("path", &make_path);
  m.def("star", &make_star);
  m.def("cycle", &make_cycle);
  m.def("multicycle", &make_multicycle);
  m.def("bundle", &make_bundle);
  m.def("loops", &make_loops);
  m.def("theta", &make_theta);
  m.def("disjoint_union", &disjoint_union);
  m.def("one_sum", &one_sum, py::arg("a"), py::arg("va"), py::arg("b"), py::arg("vb"));
  m.def("connected_multigraphs", &connected_multigraphs, py::arg("max_size"));

  m.def("lattice_points", [](const Multigraph& g) {
    std::vector<std::pair<std::string, std::vector<int>>> out;
    const PointTable table(g);
    for (const auto& p : table.points()) out.emplace_back(p.name(), p.coords);
    return out;
  });
  m.def("dimension", &dimension);
  m.def(
      "facets",
      [](const Multigraph& g, std::uint64_t max_items) {
        std::vector<std::vector<int>> out;
        for (const auto& f : facet_inequalities(g, max_items)) out.push_back(f.normal);
        return out;
      },
      py::arg("g"), py::arg("max_items") = 2'000'000);

  m.def(
      "triangulate",
      [](const Multigraph& g, std::uint64_t max_nodes, std::uint64_t order_seed, bool multicycle_order) {
        TriangulationOptions o;
        o.max_nodes = max_nodes;
        o.order_seed = order_seed;
        o.multicycle_order = multicycle_order;
        std::vector<std::vector<int>> cells;
        for (const auto& s : triangulate(g, o).simplices) cells.push_back(s.points);
        return cells;
      },
      py::arg("g"), py::arg("max_nodes") = kDefaultMaxNodes, py::arg("order_seed") = 0,
      py::arg("multicycle_order") = false, py::call_guard<py::gil_scoped_release>());

  m.def(
      "hstar",
      [](const Multigraph& g, const std::string& method, std::uint64_t max_nodes, std::uint64_t order_seed,
         int threads) {
        return compute_hstar(g, parse_method(method), options(max_nodes, order_seed, threads)).hstar.coeffs();
      },
      py::arg("g"), py::arg("method") = "auto", py::arg("max_nodes") = kDefaultMaxNodes,
      py::arg("order_seed") = 0, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "volume",
      [](const Multigraph& g, const std::string& method) {
        return compute_hstar(g, parse_method(method)).hstar.evaluate(1);
      },
      py::arg("g"), py::arg("method") = "auto", py::call_guard<py::gil_scoped_release>());
  m.def("dilate_counts", &dilate_counts, py::arg("g"), py::arg("t_max"), py::arg("max_nodes") = kDefaultMaxNodes);
  m.def("statistic", [](const Multigraph& g) { return statistic_polynomial(g).coeffs(); });

  m.def("closed_bundle", [](int k) { return hstar_closed_bundle(k).coeffs(); });
  m.def("closed_multicycle", [](const std::vector<int>& a) { return hstar_closed_multicycle(a).coeffs(); });
  m.def("theta_hstar", [](int k, int l, int mm) { return theta_hstar(k, l, mm).coeffs(); });
  m.def("lower_bound", [](const Multigraph& g) { return lower_bound(g).coeffs(); });
  m.def("upper_bound", [](const Multigraph& g) { return upper_bound(g).coeffs(); });

  m.def("check_structure", [](const Multigraph& g, const Coeffs& h) {
    return structure_dict(check_structure_theorems(g, IntPolynomial(h)));
  });
  m.def("upper_bound_holds",
        [](const Multigraph& g, const Coeffs& h) { return check_upper_bound_conjecture(g, IntPolynomial(h)).holds; });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"cosmopoly"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
