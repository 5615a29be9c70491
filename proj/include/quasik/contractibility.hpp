#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quasik/connectivity.hpp"
#include "quasik/graph.hpp"

namespace quasik {

/// A precondition on the input graph (k-connected, quasi k-connected) fails.
class HypothesisError : public std::domain_error {
public:
    HypothesisError() : std::domain_error("hypothesis violated") {}
    explicit HypothesisError(const std::string& detail) : std::domain_error("hypothesis violated: " + detail) {}
};

/// Outcome of contracting one edge of a quasi k-connected graph.
struct ContractionReport {
    Edge edge;
    int k = 5;
    /// kappa(G/e).
    int kappa_after = 0;
    bool k_contractible = false;
    bool quasi_k_contractible = false;
    /// G/e is (k-1)-connected but not quasi k-connected.
    bool in_E0 = false;
    /// Certificate in G/e coordinates. For a failed quasi verdict it is a cut
    /// of size kappa_after < k-1 or a nontrivial (k-1)-cut; when only the
    /// k-contractible verdict fails it is a minimum cut of G/e. Absent when
    /// both verdicts hold, or when G/e is complete and so has no cut at all.
    std::optional<Cut> refuting_cut;
    /// refuting_cut->vertices pulled back to G; the merged vertex expands to
    /// both ends of the edge.
    VertexSet refuting_preimage;
    EnumerationMode mode = EnumerationMode::exhaustive;
};

/// kappa(G/e) >= k. Throws GraphError if e is not an edge.
bool is_k_contractible(const Graph& g, const Edge& e, int k);

/// Full contraction report for e. Throws HypothesisError unless g is quasi
/// k-connected; pass check_hypothesis = false when the caller has checked it.
ContractionReport is_quasi_k_contractible(const Graph& g, const Edge& e, int k = 5,
                                          bool check_hypothesis = true, bool force_exhaustive = false);

/// Reports for every edge in sorted order.
std::vector<ContractionReport> contraction_reports(const Graph& g, int k = 5, bool force_exhaustive = false);

/// Edges whose contraction keeps (k-1)-connectivity but loses quasi k-connectivity.
std::vector<Edge> compute_E0(const Graph& g, int k = 5);

struct CriticalityResult {
    bool critical = false;
    /// First contractible edge in sorted order when not critical.
    std::optional<Edge> witness;
    EnumerationMode mode = EnumerationMode::exhaustive;

    explicit operator bool() const noexcept { return critical; }
};

/// True iff no edge is k-contractible (quasi = false) or quasi k-contractible
/// (quasi = true). Throws HypothesisError if g is not k-connected (resp. quasi
/// k-connected).
CriticalityResult is_contraction_critical(const Graph& g, int k, bool quasi, bool force_exhaustive = false);

struct MartinovCheck {
    /// No edge is 4-contractible, by contracting every edge.
    bool is_critical = false;
    /// 4-regular and every edge lies in a triangle, by degree and triangle scans.
    bool is_regular_triangular = false;
};

/// Both sides of the 4-connected contraction-critical characterisation,
/// computed independently. Throws HypothesisError unless g is 4-connected.
MartinovCheck check_martinov(const Graph& g);

}  // namespace quasik
