#pragma once

#include <climits>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "quasik/graph.hpp"

namespace quasik {

/// How a family of cuts was produced. Only exhaustive enumeration can back a
/// claim that no cut with some property exists.
enum class EnumerationMode { exhaustive, flow_limited };

std::string_view to_string(EnumerationMode mode);

using Bipartition = std::pair<VertexSet, VertexSet>;

/// A separating vertex set together with what its removal leaves behind.
struct Cut {
    VertexSet vertices;
    /// Components of G - vertices, each sorted, ordered by smallest vertex.
    std::vector<VertexSet> components;
    /// Components can be grouped into two sides of at least two vertices each.
    bool nontrivial = false;
    /// Present iff nontrivial; the first side is the smaller one.
    std::optional<Bipartition> bipartition;

    auto operator<=>(const Cut& other) const { return vertices <=> other.vertices; }
    bool operator==(const Cut& other) const { return vertices == other.vertices; }
};

/// Builds the Cut for t. Throws GraphError("not a cut") if G - t is connected
/// (or has fewer than two vertices).
Cut make_cut(const Graph& g, std::span<const Vertex> t);

/// Given component sizes, picks components for one side so that both sides
/// total at least two vertices. Subset-sum over sizes; the chosen side has the
/// smallest feasible total. nullopt when no such grouping exists.
std::optional<std::vector<std::size_t>> nontrivial_grouping(std::span<const int> sizes);

struct Nontriviality {
    bool nontrivial = false;
    std::optional<Bipartition> witness;
    explicit operator bool() const noexcept { return nontrivial; }
};

/// Throws GraphError("not a cut") if t does not disconnect g.
Nontriviality is_nontrivial_cut(const Graph& g, std::span<const Vertex> t);

/// kappa(G). Complete graphs K_n give n-1, disconnected graphs 0.
/// Throws GraphError for the empty graph.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally disjoint s-t paths for non-adjacent s, t,
/// stopping early once `cutoff` is reached.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cutoff = INT_MAX);

/// Minimum s-t vertex separator from a max flow with fixed augmentation order.
/// Throws GraphError("adjacent pair has no separator") when st is an edge.
Cut min_vertex_cut_between(const Graph& g, Vertex s, Vertex t);

/// Some cut of size kappa(G); nullopt for complete graphs, which have none.
std::optional<Cut> minimum_cut(const Graph& g);

/// Exhaustive for n <= 16 or size <= 5, flow-limited otherwise.
EnumerationMode enumeration_mode_for(const Graph& g, int size, bool force_exhaustive = false);

/// Calls visit(T) for each separating T with |T| = size in lexicographic order
/// until visit returns false. Returns the mode that was used.
EnumerationMode for_each_separator(const Graph& g, int size,
                                   const std::function<bool(std::span<const Vertex>)>& visit,
                                   bool force_exhaustive = false);

struct CutEnumeration {
    std::vector<Cut> cuts;
    EnumerationMode mode = EnumerationMode::exhaustive;
};

/// All cuts of the given size, sorted lexicographically. With size = kappa(G)
/// this is the family of smallest cuts. Throws GraphError if size >= n.
CutEnumeration enumerate_cuts(const Graph& g, int size, bool force_exhaustive = false);

struct QuasiConnectivity {
    enum class Failure { none, low_connectivity, nontrivial_cut };

    bool holds = false;
    int kappa = 0;
    Failure failure = Failure::none;
    /// A minimum cut for low_connectivity (absent for complete graphs), a
    /// nontrivial (k-1)-cut for nontrivial_cut.
    std::optional<Cut> witness;
    EnumerationMode mode = EnumerationMode::exhaustive;

    explicit operator bool() const noexcept { return holds; }
};

std::string_view to_string(QuasiConnectivity::Failure failure);

/// (k-1)-connected with no nontrivial (k-1)-cut. Requires k >= 2.
QuasiConnectivity is_quasi_k_connected(const Graph& g, int k, bool force_exhaustive = false);

/// Same, reusing an already computed kappa(G).
QuasiConnectivity is_quasi_k_connected(const Graph& g, int k, int kappa, bool force_exhaustive);

}  // namespace quasik
