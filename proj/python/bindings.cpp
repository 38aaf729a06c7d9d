#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rwl/formulas.hpp"
#include "rwl/generating_functions.hpp"
#include "rwl/graph.hpp"
#include "rwl/identities.hpp"
#include "rwl/parallel.hpp"
#include "rwl/report.hpp"
#include "rwl/walk.hpp"

namespace py = pybind11;
using namespace rwl;

namespace {

py::int_ to_py(const Natural& v) { return py::int_(py::str(v.to_string())); }

py::object to_py(const Rational& v) {
  if (v.is_integer()) return py::int_(py::str(v.to_string()));
  return py::module_::import("fractions").attr("Fraction")(py::str(v.to_string()));
}

// Verification results cross the boundary as their JSON report text.
std::string dump(const VerificationResult& r) { return to_json(r).dump(); }

FamilySpec family(const std::string& kind, std::size_t n, std::size_t m) {
  auto k = parse_family_kind(kind);
  if (!k) throw Error(ErrorKind::invalid_spec, "unknown family: " + kind);
  switch (*k) {
    case FamilyKind::complete: return FamilySpec::complete(n);
    case FamilyKind::path: return FamilySpec::path(n);
    case FamilyKind::cycle: return FamilySpec::cycle(n);
    case FamilyKind::king: return FamilySpec::king(m, n);
    case FamilyKind::grid: return FamilySpec::grid(m, n);
  }
  throw Error(ErrorKind::invalid_spec, "unknown family: " + kind);
}

DpOptions dp_options(const std::string& mode) {
  DpOptions o;
  if (mode == "dense") o.mode = DpMode::dense;
  else if (mode == "layered") o.mode = DpMode::layered;
  else if (mode != "auto") throw Error(ErrorKind::invalid_spec, "unknown dp mode: " + mode);
  o.threads = default_thread_count();
  return o;
}

std::vector<std::string> series_terms(const std::string& which, std::size_t terms) {
  const std::size_t order = std::max<std::size_t>(terms + 1, kDefaultSeriesOrder);
  std::vector<std::string> out;
  if (which == "gg2") {
    auto s = grid2_egf(order);
    for (std::size_t n = 1; n <= terms; ++n) out.push_back(egf_term(s, n).to_string());
  } else if (which == "a087547") {
    auto s = a087547_scaled_ogf(order);
    for (std::size_t n = 1; n <= terms; ++n)
      out.push_back(factorial_scaled_coefficient(s, n, n - 1).to_string());
  } else if (which == "a182525") {
    auto s = a182525_egf(order);
    for (std::size_t n = 0; n <= terms; ++n) out.push_back(egf_term(s, n).to_string());
  } else {
    throw Error(ErrorKind::invalid_spec, "unknown series: " + which);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "random walk labelings: exact counts, closed forms, identity checks";

  py::register_exception<Error>(m, "RwlError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("name", &Graph::name)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("render", [](const Graph& g) { return render_graph(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + g.name() + " n=" + std::to_string(g.order()) + ">";
      });

  m.def("build_family", [](const std::string& kind, std::size_t n, std::size_t m) {
    return build_family(family(kind, n, m));
  }, py::arg("kind"), py::arg("n"), py::arg("m") = 2);
  m.def("make_graph", [](std::size_t n, const std::vector<Edge>& edges) {
    return Graph(n, edges, "custom");
  }, py::arg("n"), py::arg("edges"));
  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("is_connected", &is_connected);

  m.def("count_dp", [](const Graph& g, const std::string& mode) {
    return to_py(count_labelings_dp(g, dp_options(mode)));
  }, py::arg("graph"), py::arg("mode") = "auto");
  m.def("count_started_at", [](const Graph& g, Vertex v) {
    return to_py(count_labelings_started_at(g, v, dp_options("auto")));
  }, py::arg("graph"), py::arg("start"));
  m.def("enumerate_walk", [](const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (auto& o : enumerate_labelings_walk(g)) out.push_back(o.seq);
    return out;
  });
  m.def("is_walk_obtainable", [](const Graph& g, const std::vector<unsigned>& labels) {
    return is_walk_obtainable(g, order_from_labels(labels));
  }, py::arg("graph"), py::arg("labels"));

  m.def("formula_names", [] {
    std::vector<std::string> out;
    for (int i = 0; i <= static_cast<int>(FormulaId::a182525_sum); ++i)
      out.emplace_back(to_string(static_cast<FormulaId>(i)));
    return out;
  });
  m.def("formula", [](const std::string& name, std::size_t n) {
    auto id = parse_formula_id(name);
    if (!id) throw Error(ErrorKind::invalid_spec, "unknown formula: " + name);
    return to_py(evaluate(*id, n));
  }, py::arg("name"), py::arg("n"));

  m.def("series_terms", &series_terms, py::arg("which"), py::arg("terms") = 25);

  m.def("_verify_theorem", [](const std::string& claim, std::size_t n_max) {
    auto c = parse_theorem_claim(claim);
    if (!c) throw Error(ErrorKind::invalid_spec, "unknown claim: " + claim);
    py::gil_scoped_release release;
    return dump(verify_theorem(*c, n_max, default_thread_count()));
  });
  m.def("_verify_series", [](const std::string& which, std::size_t terms) {
    py::gil_scoped_release release;
    if (which == "gg2") return dump(verify_egf_gg2(terms));
    if (which == "a087547") return dump(verify_ogf_a087547(terms));
    if (which == "a182525") return dump(verify_egf_a182525(terms));
    throw Error(ErrorKind::invalid_spec, "unknown series: " + which);
  });
  m.def("_verify_integrals", [](std::size_t n_max, double tol) {
    py::gil_scoped_release release;
    return dump(verify_lemma37(n_max, tol, QuadratureOptions{}));
  });
  m.def("_check_asymptotic", [](const std::vector<std::size_t>& ns) {
    py::gil_scoped_release release;
    return dump(check_asymptotic_gg2(ns));
  });
  m.def("_verify_oracles", [](std::size_t n_max, std::size_t random_graphs, std::size_t max_order,
                              std::uint64_t seed) {
    py::gil_scoped_release release;
    return dump(verify_oracle_equivalence(n_max, random_graphs, max_order, seed));
  });
}
