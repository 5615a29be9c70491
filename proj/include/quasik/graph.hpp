#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasik {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted so that every traversal, and therefore
/// every certificate derived from one, is reproducible. Optional labels carry
/// the provenance of vertices through contractions ("3+7" for the vertex that
/// replaced edge 3-7).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    bool valid(Vertex v) const noexcept { return v >= 0 && v < order(); }
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    /// Inserts edge ab. Returns false if it was already present.
    bool add_edge(Vertex a, Vertex b);

    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_complete() const noexcept;
    bool is_regular(int d) const;

    const std::string& label(Vertex v) const;
    void set_label(Vertex v, std::string label);

    /// N(S) = union of N(x) over x in S, minus S.
    VertexSet neighborhood(std::span<const Vertex> s) const;

    /// Vertices of degree d (V_d in the usual notation).
    VertexSet vertices_of_degree(int d) const;

    /// Throws GraphError if any representation invariant is broken.
    void check_invariants() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Result of G/e: the contracted graph plus the old->new vertex map.
struct Contraction {
    Graph graph;
    Edge edge;
    Vertex merged = 0;
    std::vector<Vertex> remap;

    /// Vertices of the original graph mapped to the given contracted vertices;
    /// the merged vertex expands to both ends of the edge.
    VertexSet preimage(std::span<const Vertex> contracted) const;
};

/// Deletes e and identifies its ends; parallel edges collapse.
/// The merged vertex keeps the smaller endpoint's id, ids above the larger
/// endpoint shift down by one.
Contraction contract_edge(const Graph& g, const Edge& e);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Shortest-path length, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Number of common neighbours of u and v.
int common_neighbor_count(const Graph& g, Vertex u, Vertex v);

bool edge_in_triangle(const Graph& g, const Edge& e);

/// Connected components of G - removed, each sorted, ordered by smallest vertex.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

bool is_connected(const Graph& g);

/// The eleven isomorphism classes of graphs on four vertices.
enum class Pattern4Tag {
    Empty,       // 4K1
    K2_2K1,      // K2 u 2K1
    TwoK2,       // 2K2
    P3_K1,       // P3 u K1
    K3_K1,       // K3 u K1
    P4,
    Claw,        // K1,3
    C4,
    Paw,         // triangle with a pendant edge
    Diamond,     // K4 - e
    K4,
};

std::string_view to_string(Pattern4Tag tag);

/// Induced four-vertex neighbourhood with role assignment roles[i] = x_{i+1}.
///
/// Role conventions: x1x2 is an edge whenever the class has one. Classes with
/// a triangle put it on x1,x2,x3 so x4 is the vertex outside it. 2K2 pairs
/// x1x2 and x3x4; C4 runs x1x2x3x4; P4 runs x3x1x2x4 so x3 and x4 are its
/// ends; P3 u K1 is x2x1x3 plus isolated x4; K1,3 is centred at x1.
struct Pattern4 {
    Pattern4Tag tag = Pattern4Tag::Empty;
    std::array<Vertex, 4> roles{};
};

/// Classifies G[N(x)] for a vertex of degree four.
Pattern4 classify_neighborhood(const Graph& g, Vertex x);

/// Classifies G[{a,b,c,d}] for any four distinct vertices.
Pattern4 classify_four(const Graph& g, const std::array<Vertex, 4>& vertices);

}  // namespace quasik
