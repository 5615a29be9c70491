#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "quasik/connectivity.hpp"
#include "quasik/graph.hpp"

namespace quasik {

enum class FragmentKind { plain, nontrivial, quasi };

std::string_view to_string(FragmentKind kind);

/// A fragment A with S = N(A) and the complement V - (A u S).
struct Fragment {
    VertexSet body;
    VertexSet boundary;
    VertexSet complement;
    FragmentKind kind = FragmentKind::plain;
    /// The cut whose components produced this fragment.
    VertexSet source_cut;

    bool operator==(const Fragment& other) const { return body == other.body; }
};

/// Builds the fragment with the given body, computing boundary and complement.
Fragment make_fragment(const Graph& g, VertexSet body, VertexSet source_cut, FragmentKind kind);

enum class FragmentScope {
    /// Every union of a proper nonempty subset of components (2^c - 2 of them).
    all_unions,
    /// Single components and their complements only, for cuts with many components.
    single_components,
};

/// Fragments of a cut, tagged nontrivial where |A| >= 2 and |complement| >= 2.
/// Throws GraphError if t is not a cut, or if all_unions is asked for more than
/// 24 components.
std::vector<Fragment> fragments_of_cut(const Graph& g, const Cut& t,
                                       FragmentScope scope = FragmentScope::all_unions);

/// Nontrivial fragments A over the smallest cuts of g with both ends of e in N(A).
std::vector<Fragment> nontrivial_fragments_wrt_edge(const Graph& g, const Edge& e);

/// Sides of nontrivial bipartitions of k-cuts T containing both ends of e.
/// Every k-subset containing the ends is examined. Meaningful for quasi
/// k-connected g; for other graphs the search still runs.
std::vector<Fragment> quasi_fragments_wrt_edge(const Graph& g, const Edge& e, int k = 5);

/// Smallest nontrivial fragment over all smallest cuts; ties go to the
/// lexicographically least body.
std::optional<Fragment> nontrivial_atom(const Graph& g);

/// Smallest quasi fragment with respect to any edge of es, same tie-break.
std::optional<Fragment> quasi_atom_wrt_edges(const Graph& g, std::span<const Edge> es, int k = 5);

/// Edges incident with x, sorted.
std::vector<Edge> incident_edges(const Graph& g, Vertex x);

}  // namespace quasik
