#include "quasik/contractibility.hpp"

#include <algorithm>

namespace quasik {

bool is_k_contractible(const Graph& g, const Edge& e, int k) {
    return vertex_connectivity(contract_edge(g, e).graph) >= k;
}

ContractionReport is_quasi_k_contractible(const Graph& g, const Edge& e, int k, bool check_hypothesis,
                                          bool force_exhaustive) {
    if (!g.valid(e.u) || !g.valid(e.v) || !g.has_edge(e)) throw GraphError("not an edge: " + to_string(e));
    if (check_hypothesis && !is_quasi_k_connected(g, k, force_exhaustive)) {
        throw HypothesisError("graph is not quasi " + std::to_string(k) + "-connected");
    }
    const Contraction c = contract_edge(g, e);
    const QuasiConnectivity q = is_quasi_k_connected(c.graph, k, force_exhaustive);

    ContractionReport r;
    r.edge = e;
    r.k = k;
    r.kappa_after = q.kappa;
    r.k_contractible = q.kappa >= k;
    r.quasi_k_contractible = q.holds;
    r.in_E0 = q.kappa >= k - 1 && !q.holds;
    r.mode = q.mode;
    if (!q.holds) {
        r.refuting_cut = q.witness;
    } else if (!r.k_contractible) {
        r.refuting_cut = minimum_cut(c.graph);
    }
    if (r.refuting_cut) r.refuting_preimage = c.preimage(r.refuting_cut->vertices);
    return r;
}

std::vector<ContractionReport> contraction_reports(const Graph& g, int k, bool force_exhaustive) {
    if (!is_quasi_k_connected(g, k, force_exhaustive)) {
        throw HypothesisError("graph is not quasi " + std::to_string(k) + "-connected");
    }
    std::vector<ContractionReport> out;
    for (const auto& e : g.edges()) out.push_back(is_quasi_k_contractible(g, e, k, false, force_exhaustive));
    return out;
}

std::vector<Edge> compute_E0(const Graph& g, int k) {
    std::vector<Edge> out;
    for (const auto& r : contraction_reports(g, k)) {
        if (r.in_E0) out.push_back(r.edge);
    }
    return out;
}

CriticalityResult is_contraction_critical(const Graph& g, int k, bool quasi, bool force_exhaustive) {
    CriticalityResult result;
    if (quasi) {
        const auto q = is_quasi_k_connected(g, k, force_exhaustive);
        if (!q) throw HypothesisError("graph is not quasi " + std::to_string(k) + "-connected");
        result.mode = q.mode;
    } else if (vertex_connectivity(g) < k) {
        throw HypothesisError("graph is not " + std::to_string(k) + "-connected");
    }
    for (const auto& e : g.edges()) {
        bool contractible = false;
        if (quasi) {
            const auto r = is_quasi_k_contractible(g, e, k, false, force_exhaustive);
            if (r.mode == EnumerationMode::flow_limited) result.mode = r.mode;
            contractible = r.quasi_k_contractible;
        } else {
            contractible = is_k_contractible(g, e, k);
        }
        if (contractible) {
            result.witness = e;
            return result;
        }
    }
    result.critical = true;
    return result;
}

MartinovCheck check_martinov(const Graph& g) {
    if (g.order() == 0 || vertex_connectivity(g) < 4) throw HypothesisError("graph is not 4-connected");
    MartinovCheck m;
    const auto edges = g.edges();
    m.is_critical = std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return is_k_contractible(g, e, 4); });
    m.is_regular_triangular =
        g.is_regular(4) && std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return edge_in_triangle(g, e); });
    return m;
}

}  // namespace quasik
