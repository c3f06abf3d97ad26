#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphstab/bounds.hpp"
#include "graphstab/campaign.hpp"
#include "graphstab/codec.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/decomposition.hpp"
#include "graphstab/errors.hpp"
#include "graphstab/invariants.hpp"
#include "graphstab/report.hpp"
#include "graphstab/stability.hpp"

namespace py = pybind11;
namespace gs = graphstab;

namespace {

using PyEdge = std::pair<int, int>;

py::object py_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object inf() { return py::module_::import("math").attr("inf"); }

// Invariant values are integers in practice; rationals come back as Fraction.
py::object py_value(const gs::ExtValue& v) {
  if (v.is_infinite()) return inf();
  if (auto i = v.as_int64()) return py::int_(*i);
  const auto& q = v.rational();
  return py::module_::import("fractions").attr("Fraction")(numerator(q).str(), denominator(q).str());
}

py::object py_nat(gs::ExtNat n) { return n.is_infinite() ? inf() : py::object(py::int_(n.value())); }

gs::ExtValue ext_value(const py::object& o) {
  if (py::isinstance<py::int_>(o)) return gs::ExtValue(o.cast<long long>());
  return gs::ExtValue::parse(py::str(o).cast<std::string>());
}

gs::Graph make_graph(int order, const std::vector<PyEdge>& edges) {
  gs::EdgeSet es;
  for (auto [u, v] : edges) es.push_back(gs::make_edge(u, v));
  return gs::Graph(order, es);
}

std::vector<PyEdge> py_edges(const gs::EdgeSet& es) {
  std::vector<PyEdge> out;
  for (const gs::Edge& e : es) out.emplace_back(e.u, e.v);
  return out;
}

gs::SearchPolicy policy(const std::string& range, std::uint64_t max_universe) {
  gs::SearchPolicy p;
  p.vertex_subset_range = gs::parse_subset_range(range);
  p.max_subset_universe = max_universe;
  return p;
}

py::dict stability_dict(const gs::StabilityResult& r) {
  py::dict d;
  d["value"] = py_nat(r.value);
  if (const auto* xs = std::get_if<gs::VertexSet>(&r.witness))
    d["witness"] = *xs;
  else if (const auto* ys = std::get_if<gs::EdgeSet>(&r.witness))
    d["witness"] = py_edges(*ys);
  else
    d["witness"] = py::none();
  return d;
}

py::dict bound_dict(const gs::BoundReport& r) {
  py::dict d;
  d["theorem"] = r.name;
  d["kind"] = std::string(gs::to_string(r.kind));
  d["applicable"] = r.applicable;
  d["reason"] = r.reason;
  d["bound"] = r.bound ? py_nat(*r.bound) : py::none();
  d["parameters"] = py_json(r.parameters);
  if (r.fractional_bound) d["fractional_bound"] = py_value(*r.fractional_bound);
  if (r.additive_bound) d["additive_bound"] = py_nat(*r.additive_bound);
  if (r.observed) d["observed"] = py_nat(*r.observed);
  return d;
}

py::dict union_dict(const gs::UnionFormulaResult& r) {
  py::dict d;
  d["theorem"] = r.tag;
  d["hypotheses_satisfied"] = r.hypotheses_satisfied;
  d["reason"] = r.reason;
  d["case"] = r.case_taken;
  d["value"] = r.value ? py_nat(*r.value) : py::none();
  py::list comps;
  for (const gs::ComponentRecord& c : r.components) {
    py::dict cd;
    cd["order"] = c.order;
    cd["f"] = py_value(c.f_value);
    cd["stability"] = py_nat(c.stability);
    if (c.threshold) cd["threshold"] = py_nat(*c.threshold);
    comps.append(cd);
  }
  d["components"] = comps;
  return d;
}

constexpr std::uint64_t kDefaultUniverse = std::uint64_t{1} << 20;

}  // namespace

PYBIND11_MODULE(_graphstab, m) {
  m.doc() = "Exact stability numbers of graph invariants";

  py::register_exception<gs::CodecError>(m, "CodecError", PyExc_ValueError);
  py::register_exception<gs::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<gs::DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<gs::BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<gs::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order") = 0, py::arg("edges") = std::vector<PyEdge>{})
      .def_static("from_graph6", &gs::parse_graph6, py::arg("record"))
      .def_static("from_edge_list", &gs::parse_edge_list, py::arg("text"))
      .def("graph6", &gs::encode_graph6)
      .def("edge_list", &gs::encode_edge_list)
      .def_property_readonly("order", &gs::Graph::order)
      .def_property_readonly("edges", [](const gs::Graph& g) { return py_edges(g.edges()); })
      .def("components", [](const gs::Graph& g) { return gs::components(g).parts; })
      .def("__eq__", [](const gs::Graph& a, const gs::Graph& b) { return a == b; })
      .def("__repr__", [](const gs::Graph& g) { return "Graph.from_graph6('" + gs::encode_graph6(g) + "')"; });

  m.def("disjoint_union", [](const std::vector<gs::Graph>& parts) { return gs::disjoint_union(parts); },
        py::arg("parts"));

  m.def("invariants", [] {
    std::vector<std::string> ids;
    for (const gs::InvariantDescriptor& d : gs::registry()) ids.push_back(d.id);
    return ids;
  });

  m.def("evaluate", [](const gs::Graph& g, const std::string& id) { return py_value(gs::evaluate(gs::invariant(id), g)); },
        py::arg("graph"), py::arg("invariant"));

  m.def(
      "vertex_stability",
      [](const gs::Graph& g, const std::string& id, const std::string& range, std::uint64_t cap) {
        return stability_dict(gs::vertex_stability(g, gs::invariant(id), policy(range, cap)));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("policy") = "proper", py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "edge_stability",
      [](const gs::Graph& g, const std::string& id, std::uint64_t cap) {
        return stability_dict(gs::edge_stability(g, gs::invariant(id), policy("proper", cap)));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "threshold_stability",
      [](const gs::Graph& g, const std::string& id, const py::object& theta, const std::string& side,
         const std::string& range, std::uint64_t cap) {
        const gs::ExtValue t = ext_value(theta);
        const gs::SearchPolicy p = policy(range, cap);
        return stability_dict(gs::parse_side(side) == gs::Side::vertex
                                  ? gs::threshold_vertex_stability(g, gs::invariant(id), t, p)
                                  : gs::threshold_edge_stability(g, gs::invariant(id), t, p));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("theta"), py::arg("side") = "vertex",
      py::arg("policy") = "proper", py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "covering_number",
      [](const gs::Graph& g, const std::string& id, std::uint64_t cap) {
        const gs::CoveringResult r = gs::covering_number(g, gs::invariant(id), policy("proper", cap));
        py::dict d;
        d["value"] = r.value;
        d["witness"] = py_edges(r.witness);
        d["covered_subgraphs"] = r.covered_subgraphs;
        return d;
      },
      py::arg("graph"), py::arg("invariant"), py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "decompose",
      [](const gs::Graph& g, const std::string& id, const std::string& tag, std::uint64_t cap) {
        return union_dict(gs::decompose(tag, gs::components(g), gs::invariant(id), policy("proper", cap)));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("theorem"), py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "bound",
      [](const gs::Graph& g, const std::string& id, const std::string& tag, std::uint64_t cap) {
        return bound_dict(gs::tightest_bound(tag, g, gs::invariant(id), policy("proper", cap)));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("theorem"), py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "check",
      [](const gs::Graph& g, const std::string& id, const std::string& tag, std::uint64_t cap) {
        return py_json(gs::report_json(gs::check_instance(g, gs::invariant(id), tag, policy("proper", cap))));
      },
      py::arg("graph"), py::arg("invariant"), py::arg("theorem"), py::arg("max_universe") = kDefaultUniverse);

  m.def(
      "corpus",
      [](int n_max, const std::string& mode, int n_min, std::size_t count, std::uint64_t seed) {
        gs::CorpusSpec s;
        s.mode = gs::parse_corpus_mode(mode);
        s.n_max = n_max;
        s.n_min = n_min >= 0 ? n_min : (s.mode == gs::CorpusMode::union_pairs ? 0 : n_max);
        s.count = count;
        s.seed = seed;
        return gs::generate_corpus(s).graphs;
      },
      py::arg("n_max"), py::arg("mode") = "exhaustive", py::arg("n_min") = -1, py::arg("count") = 0,
      py::arg("seed") = 0);

  m.def(
      "verify",
      [](const std::vector<gs::Graph>& graphs, const std::vector<std::string>& invariants,
         const std::vector<std::string>& theorems, unsigned jobs, std::uint64_t cap) {
        gs::CampaignOptions opt;
        opt.invariants = invariants;
        opt.tags = theorems;
        opt.jobs = jobs;
        opt.policy.max_subset_universe = cap;
        gs::CampaignSummary summary;
        {
          py::gil_scoped_release release;
          summary = gs::run_campaign(graphs, opt);
        }
        gs::CorpusSpec spec;
        return py_json(gs::campaign_json(spec, graphs.size(), opt, summary, false));
      },
      py::arg("graphs"), py::arg("invariants"), py::arg("theorems"), py::arg("jobs") = 1,
      py::arg("max_universe") = kDefaultUniverse);
}
