#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/graph6.hpp"
#include "gallai/invariants.hpp"
#include "gallai/paths.hpp"
#include "gallai/transversal.hpp"
#include "gallai/verify.hpp"

namespace py = pybind11;
using namespace gallai;

namespace {

std::vector<int> members(const VertexSet& s) { return s.to_vector(); }

VertexSet to_set(const std::vector<int>& v) { return VertexSet(std::span<const int>(v)); }

Objective objective_of(const std::string& name) {
  if (name == "path") return Objective::LongestPath;
  if (name == "cycle") return Objective::LongestCycle;
  throw PreconditionError("pattern must be 'path' or 'cycle'");
}

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Longest paths, longest cycles and their transversals on small graphs.";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<UnreachableBranch>(m, "UnreachableBranch", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return members(g.neighbors(v)); })
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("is_connected", &is_connected);
  m.def("alpha", &alpha);
  m.def("kappa", &kappa);
  m.def("girth", &girth);
  m.def("longest_path_length", [](const Graph& g) { return longest_path_length(g); });
  m.def("longest_path", [](const Graph& g) { return longest_path(g, g.vertices()).vertices; });
  m.def("longest_cycle_length", [](const Graph& g) { return longest_cycle_length(g); });
  m.def("gallai_vertices", [](const Graph& g) { return members(gallai_vertices(g)); });
  m.def("lpt", [](const Graph& g) {
    const auto h = lpt_exact(g);
    return py::make_tuple(h.size, members(h.witness));
  });
  m.def("lct", [](const Graph& g) {
    const auto h = lct_exact(g);
    return py::make_tuple(h.size, members(h.witness));
  });
  m.def(
      "menger",
      [](const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
        const auto r = menger(g, to_set(x), to_set(y));
        std::vector<std::vector<int>> paths;
        for (const auto& p : r.connector) paths.push_back(p.vertices);
        return py::make_tuple(members(r.separator), paths);
      },
      py::arg("g"), py::arg("x"), py::arg("y"));
  m.def("validate_transversal", [](const Graph& g, const std::string& pattern, const std::vector<int>& t) {
    return validate_transversal(g, objective_of(pattern), to_set(t));
  });
  m.def("sublinear_bound", &sublinear_bound, py::arg("n"), py::arg("m"));
  m.def(
      "sublinear_transversal",
      [](const Graph& g, const std::string& pattern, std::optional<double> epsilon, bool strict) {
        const auto r = sublinear_transversal(g, objective_of(pattern), {epsilon, strict});
        py::list trace;
        for (const auto& e : r.trace) {
          py::dict d;
          d["step"] = std::string(1, e.step);
          d["action"] = e.action;
          d["h_order"] = e.h_order;
          d["y_size"] = e.y_size;
          d["value"] = e.value;
          trace.append(d);
        }
        py::dict out;
        out["transversal"] = members(r.transversal);
        out["trace"] = trace;
        out["optimum"] = r.optimum;
        out["bound"] = r.bound;
        out["epsilon4"] = r.epsilon4;
        out["diagnostic"] = r.diagnostic;
        return out;
      },
      py::arg("g"), py::arg("pattern") = "path", py::arg("epsilon") = py::none(), py::arg("strict") = false);

  m.def("petersen", &petersen);
  m.def("split_petersen", [] { return split_petersen().graph; });
  m.def("subdivided_split_petersen", &subdivided_split_petersen, py::arg("p"), py::arg("q"));
  m.def("claw_free_split_petersen", &claw_free_split_petersen, py::arg("p"), py::arg("q"));
  m.def("complete_bipartite", &complete_bipartite);
  m.def("ktt2_minus_matching", &ktt2_minus_matching);
  m.def("clique_star", [](int k, int t) { return clique_star(k, t).graph; }, py::arg("k"), py::arg("t"));
  m.def("disjoint_triangles", &disjoint_triangles);
  m.def("triangle_star", &triangle_star);
  m.def("linear_forest", &linear_forest);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);

  m.def("check_tags", &check_tags);
  m.def(
      "run_check",
      [](const Graph& g, const std::string& tag, const std::map<std::string, std::string>& params) {
        const auto r = run_check(g, make_check(tag, params));
        py::dict out;
        out["verdict"] = verdict_name(r.verdict);
        out["reason"] = r.reason;
        out["metrics"] = from_json(r.metrics);
        out["diagnostic"] = from_json(r.diagnostic);
        return out;
      },
      py::arg("g"), py::arg("tag"), py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "run_campaign",
      [](const std::vector<std::string>& lines, const std::string& tag,
         const std::map<std::string, std::string>& params, const std::string& filters, int jobs) {
        CampaignOptions options;
        options.jobs = jobs;
        CampaignReport report;
        {
          py::gil_scoped_release release;
          report = run_campaign(lines, "python", make_check(tag, params), parse_filters(filters), options);
        }
        return from_json(report.to_json(true));
      },
      py::arg("lines"), py::arg("tag"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("filters") = "", py::arg("jobs") = 1);
}
