#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "quasik/connectivity.hpp"
#include "quasik/contractibility.hpp"
#include "quasik/corpus.hpp"
#include "quasik/degree_conditions.hpp"
#include "quasik/fragments.hpp"
#include "quasik/graph.hpp"
#include "quasik/graph_io.hpp"
#include "quasik/serialize.hpp"
#include "quasik/verification.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace quasik;

namespace {

using EdgePair = std::pair<Vertex, Vertex>;

Edge edge_of(const EdgePair& p) { return Edge(p.first, p.second); }
EdgePair pair_of(const Edge& e) { return {e.u, e.v}; }

std::vector<EdgePair> pairs_of(const std::vector<Edge>& es) {
    std::vector<EdgePair> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(pair_of(e));
    return out;
}

// nlohmann::json to Python objects through the json module.
py::object to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_python(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vertex connectivity, quasi k-connectivity and contractible edges";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), "n"_a = 0)
        .def_static(
            "from_edges",
            [](int n, const std::vector<EdgePair>& edges) {
                Graph g(n);
                for (const auto& [u, v] : edges) g.add_edge(u, v);
                return g;
            },
            "n"_a, "edges"_a)
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); }, "text"_a)
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("add_edge", &Graph::add_edge, "u"_a, "v"_a)
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("neighbors", &Graph::neighbors, "v"_a)
        .def("degree", &Graph::degree, "v"_a)
        .def("has_edge", [](const Graph& g, Vertex u, Vertex v) { return g.has_edge(u, v); }, "u"_a, "v"_a)
        .def("edges", [](const Graph& g) { return pairs_of(g.edges()); })
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("is_complete", &Graph::is_complete)
        .def("label", &Graph::label, "v"_a)
        .def("to_json", [](const Graph& g) { return to_python(graph_to_json(g)); })
        .def_static("from_json", [](const py::object& o) { return graph_from_json(from_python(o)); }, "data"_a)
        .def("__len__", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
            return s.str();
        });

    py::class_<Contraction>(m, "Contraction")
        .def_readonly("graph", &Contraction::graph)
        .def_property_readonly("edge", [](const Contraction& c) { return pair_of(c.edge); })
        .def_readonly("merged", &Contraction::merged)
        .def_readonly("remap", &Contraction::remap)
        .def("preimage", [](const Contraction& c, const VertexSet& s) { return c.preimage(s); }, "vertices"_a);

    m.def("contract_edge", [](const Graph& g, const EdgePair& e) { return contract_edge(g, edge_of(e)); }, "g"_a, "edge"_a);
    m.def("distance", &distance, "g"_a, "u"_a, "v"_a);
    m.def(
        "induced_subgraph",
        [](const Graph& g, const VertexSet& s) {
            auto sub = induced_subgraph(g, s);
            return py::make_tuple(sub.graph, sub.to_parent);
        },
        "g"_a, "vertices"_a);
    m.def(
        "classify_neighborhood",
        [](const Graph& g, Vertex x) {
            const auto p = classify_neighborhood(g, x);
            return py::make_tuple(std::string(to_string(p.tag)), std::vector<Vertex>(p.roles.begin(), p.roles.end()));
        },
        "g"_a, "x"_a);
    m.def("read_graph_file", [](const std::string& path) { return read_graph_file(path); }, "path"_a);

    py::class_<Cut>(m, "Cut")
        .def_readonly("vertices", &Cut::vertices)
        .def_readonly("components", &Cut::components)
        .def_readonly("nontrivial", &Cut::nontrivial)
        .def_readonly("bipartition", &Cut::bipartition)
        .def("to_dict", [](const Cut& c) { return to_python(c); })
        .def("__repr__", [](const Cut& c) { return "Cut(" + nlohmann::json(c.vertices).dump() + ")"; });

    m.def("vertex_connectivity", &vertex_connectivity, "g"_a);
    m.def("local_vertex_connectivity", &local_vertex_connectivity, "g"_a, "s"_a, "t"_a, "cutoff"_a = INT_MAX);
    m.def("min_vertex_cut_between", &min_vertex_cut_between, "g"_a, "s"_a, "t"_a);
    m.def("minimum_cut", &minimum_cut, "g"_a);
    m.def(
        "enumerate_cuts",
        [](const Graph& g, int size, bool force_exhaustive) {
            auto r = enumerate_cuts(g, size, force_exhaustive);
            return py::make_tuple(std::move(r.cuts), std::string(to_string(r.mode)));
        },
        "g"_a, "size"_a, "force_exhaustive"_a = false);
    m.def(
        "is_nontrivial_cut",
        [](const Graph& g, const VertexSet& t) {
            auto r = is_nontrivial_cut(g, t);
            return py::make_tuple(r.nontrivial, r.witness);
        },
        "g"_a, "t"_a);
    m.def(
        "nontrivial_grouping", [](const std::vector<int>& sizes) { return nontrivial_grouping(sizes); }, "sizes"_a);
    m.def(
        "is_quasi_k_connected",
        [](const Graph& g, int k, bool force_exhaustive) {
            const auto q = is_quasi_k_connected(g, k, force_exhaustive);
            py::dict d;
            d["holds"] = q.holds;
            d["kappa"] = q.kappa;
            d["failure"] = std::string(to_string(q.failure));
            d["witness"] = q.witness ? py::cast(*q.witness) : py::none();
            d["enumeration_mode"] = std::string(to_string(q.mode));
            return d;
        },
        "g"_a, "k"_a, "force_exhaustive"_a = false);

    py::class_<Fragment>(m, "Fragment")
        .def_readonly("body", &Fragment::body)
        .def_readonly("boundary", &Fragment::boundary)
        .def_readonly("complement", &Fragment::complement)
        .def_property_readonly("kind", [](const Fragment& f) { return std::string(to_string(f.kind)); })
        .def_readonly("source_cut", &Fragment::source_cut)
        .def("to_dict", [](const Fragment& f) { return to_python(f); })
        .def("__repr__", [](const Fragment& f) { return "Fragment(" + nlohmann::json(f.body).dump() + ")"; });

    m.def(
        "fragments_of_cut",
        [](const Graph& g, const VertexSet& t, bool single_components) {
            return fragments_of_cut(g, make_cut(g, t),
                                    single_components ? FragmentScope::single_components : FragmentScope::all_unions);
        },
        "g"_a, "t"_a, "single_components"_a = false);
    m.def(
        "nontrivial_fragments_wrt_edge",
        [](const Graph& g, const EdgePair& e) { return nontrivial_fragments_wrt_edge(g, edge_of(e)); }, "g"_a, "edge"_a);
    m.def(
        "quasi_fragments_wrt_edge",
        [](const Graph& g, const EdgePair& e, int k) { return quasi_fragments_wrt_edge(g, edge_of(e), k); }, "g"_a,
        "edge"_a, "k"_a = 5);
    m.def("nontrivial_atom", &nontrivial_atom, "g"_a);
    m.def(
        "quasi_atom_wrt_edges",
        [](const Graph& g, const std::vector<EdgePair>& es, int k) {
            std::vector<Edge> edges;
            for (const auto& e : es) edges.push_back(edge_of(e));
            return quasi_atom_wrt_edges(g, edges, k);
        },
        "g"_a, "edges"_a, "k"_a = 5);

    py::class_<ContractionReport>(m, "ContractionReport")
        .def_property_readonly("edge", [](const ContractionReport& r) { return pair_of(r.edge); })
        .def_readonly("k", &ContractionReport::k)
        .def_readonly("kappa_after", &ContractionReport::kappa_after)
        .def_readonly("k_contractible", &ContractionReport::k_contractible)
        .def_readonly("quasi_k_contractible", &ContractionReport::quasi_k_contractible)
        .def_readonly("in_E0", &ContractionReport::in_E0)
        .def_readonly("refuting_cut", &ContractionReport::refuting_cut)
        .def_readonly("refuting_preimage", &ContractionReport::refuting_preimage)
        .def("to_dict", [](const ContractionReport& r) { return to_python(r); });

    m.def(
        "is_k_contractible", [](const Graph& g, const EdgePair& e, int k) { return is_k_contractible(g, edge_of(e), k); },
        "g"_a, "edge"_a, "k"_a);
    m.def(
        "is_quasi_k_contractible",
        [](const Graph& g, const EdgePair& e, int k, bool force_exhaustive) {
            return is_quasi_k_contractible(g, edge_of(e), k, true, force_exhaustive);
        },
        "g"_a, "edge"_a, "k"_a = 5, "force_exhaustive"_a = false);
    m.def("contraction_reports", &contraction_reports, "g"_a, "k"_a = 5, "force_exhaustive"_a = false);
    m.def(
        "compute_E0", [](const Graph& g, int k) { return pairs_of(compute_E0(g, k)); }, "g"_a, "k"_a = 5);
    m.def(
        "is_contraction_critical",
        [](const Graph& g, int k, bool quasi, bool force_exhaustive) {
            const auto r = is_contraction_critical(g, k, quasi, force_exhaustive);
            std::optional<EdgePair> witness;
            if (r.witness) witness = pair_of(*r.witness);
            return py::make_tuple(r.critical, witness);
        },
        "g"_a, "k"_a, "quasi"_a, "force_exhaustive"_a = false);
    m.def(
        "check_martinov",
        [](const Graph& g) {
            const auto r = check_martinov(g);
            return py::make_tuple(r.is_critical, r.is_regular_triangular);
        },
        "g"_a);

    m.def(
        "check_degree_sum_condition",
        [](const Graph& g, int bound, int max_dist) {
            const auto r = check_degree_sum_condition(g, bound, max_dist);
            return py::make_tuple(r.holds, r.violation);
        },
        "g"_a, "bound"_a = 9, "max_dist"_a = 2);
    m.def("check_min_degree_condition", &check_min_degree_condition, "g"_a, "k"_a);

    m.def("claims", [] {
        std::vector<std::string> out;
        for (Claim c : all_claims()) out.emplace_back(to_string(c));
        return out;
    });
    m.def(
        "verify",
        [](const Graph& g, const std::string& claim, bool force_exhaustive, std::optional<int> k,
           std::optional<double> timeout, const std::string& graph_id) {
            VerifyOptions opts;
            opts.force_exhaustive = force_exhaustive;
            opts.k = k;
            if (timeout) opts.deadline = Deadline::after(std::chrono::duration<double>(*timeout));
            const auto r = verify_claim(g, parse_claim(claim), opts, graph_id);
            return to_python(report_to_json(r, g));
        },
        "g"_a, "claim"_a, "force_exhaustive"_a = false, "k"_a = py::none(), "timeout"_a = py::none(), "graph_id"_a = "");
    m.def(
        "generate_corpus",
        [](const py::object& spec) {
            std::vector<py::tuple> out;
            for (auto& spec_i : corpus_from_json(from_python(spec))) {
                for (auto& e : generate_corpus(spec_i)) out.push_back(py::make_tuple(e.id, std::move(e.graph)));
            }
            return out;
        },
        "spec"_a);
}
