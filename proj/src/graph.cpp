#include "quasik/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace quasik {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels_[v] = std::to_string(v);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (!valid(v)) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
    }
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

bool Graph::add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    auto& na = adj_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    std::size_t d = adj_.front().size();
    for (const auto& n : adj_) d = std::min(d, n.size());
    return static_cast<int>(d);
}

int Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& n : adj_) d = std::max(d, n.size());
    return static_cast<int>(d);
}

bool Graph::is_complete() const noexcept {
    const auto n = adj_.size();
    return n == 0 || edge_count_ == n * (n - 1) / 2;
}

bool Graph::is_regular(int d) const {
    return std::all_of(adj_.begin(), adj_.end(),
                       [d](const VertexSet& n) { return static_cast<int>(n.size()) == d; });
}

const std::string& Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(Vertex v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

VertexSet Graph::neighborhood(std::span<const Vertex> s) const {
    std::vector<char> in_s(adj_.size(), 0);
    for (Vertex v : s) {
        check_vertex(v);
        in_s[v] = 1;
    }
    std::vector<char> mark(adj_.size(), 0);
    for (Vertex v : s) {
        for (Vertex w : adj_[v]) {
            if (!in_s[w]) mark[w] = 1;
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
        if (mark[v]) out.push_back(v);
    }
    return out;
}

VertexSet Graph::vertices_of_degree(int d) const {
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
        if (degree(v) == d) out.push_back(v);
    }
    return out;
}

void Graph::check_invariants() const {
    std::size_t half_edges = 0;
    for (Vertex v = 0; v < order(); ++v) {
        const auto& nv = adj_[v];
        if (!std::is_sorted(nv.begin(), nv.end()) ||
            std::adjacent_find(nv.begin(), nv.end()) != nv.end()) {
            throw GraphError("adjacency of " + std::to_string(v) + " is not a sorted set");
        }
        for (Vertex w : nv) {
            if (!valid(w)) throw GraphError("dangling neighbour " + std::to_string(w));
            if (w == v) throw GraphError("self-loop at vertex " + std::to_string(v));
            if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
                throw GraphError("asymmetric adjacency between " + std::to_string(v) + " and " +
                                 std::to_string(w));
            }
        }
        half_edges += nv.size();
    }
    if (half_edges != 2 * edge_count_) throw GraphError("edge count out of sync");
}

VertexSet Contraction::preimage(std::span<const Vertex> contracted) const {
    VertexSet out;
    for (Vertex old = 0; old < static_cast<Vertex>(remap.size()); ++old) {
        if (std::find(contracted.begin(), contracted.end(), remap[old]) != contracted.end()) {
            out.push_back(old);
        }
    }
    return out;
}

Contraction contract_edge(const Graph& g, const Edge& e) {
    if (!g.valid(e.u) || !g.valid(e.v) || !g.has_edge(e)) {
        throw GraphError("not an edge: " + to_string(e));
    }
    const int n = g.order();
    Contraction c;
    c.edge = e;
    c.merged = e.u;
    c.remap.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        c.remap[v] = v < e.v ? v : (v == e.v ? e.u : v - 1);
    }
    c.graph = Graph(n - 1);
    for (Vertex v = 0; v < n; ++v) {
        if (v == e.v) continue;
        c.graph.set_label(c.remap[v], g.label(v));
    }
    c.graph.set_label(c.merged, g.label(e.u) + "+" + g.label(e.v));
    for (const auto& f : g.edges()) {
        const Vertex a = c.remap[f.u];
        const Vertex b = c.remap[f.v];
        if (a != b) c.graph.add_edge(a, b);
    }
    return c;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    Subgraph sub;
    sub.to_parent.assign(s.begin(), s.end());
    std::sort(sub.to_parent.begin(), sub.to_parent.end());
    sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                        sub.to_parent.end());
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        const Vertex v = sub.to_parent[i];
        if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
        index[v] = static_cast<Vertex>(i);
    }
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        const Vertex v = sub.to_parent[i];
        sub.graph.set_label(static_cast<Vertex>(i), g.label(v));
        for (Vertex w : g.neighbors(v)) {
            if (index[w] > static_cast<Vertex>(i)) sub.graph.add_edge(static_cast<Vertex>(i), index[w]);
        }
    }
    return sub;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    g.neighbors(source);  // range check
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    const int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

int common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool edge_in_triangle(const Graph& g, const Edge& e) {
    return common_neighbor_count(g, e.u, e.v) > 0;
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (Vertex v : removed) {
        if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
        comp[v] = -2;
    }
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components_without(g, {}).size() <= 1;
}

std::string_view to_string(Pattern4Tag tag) {
    switch (tag) {
        case Pattern4Tag::Empty: return "4K1";
        case Pattern4Tag::K2_2K1: return "K2+2K1";
        case Pattern4Tag::TwoK2: return "2K2";
        case Pattern4Tag::P3_K1: return "P3+K1";
        case Pattern4Tag::K3_K1: return "K3+K1";
        case Pattern4Tag::P4: return "P4";
        case Pattern4Tag::Claw: return "K1,3";
        case Pattern4Tag::C4: return "C4";
        case Pattern4Tag::Paw: return "paw";
        case Pattern4Tag::Diamond: return "diamond";
        case Pattern4Tag::K4: return "K4";
    }
    return "?";
}

namespace {

using RoleEdges = std::vector<std::pair<int, int>>;

// Role templates over x1..x4 (indices 0..3); see Pattern4 for the conventions.
const RoleEdges& role_template(Pattern4Tag tag) {
    static const RoleEdges empty{};
    static const RoleEdges k2{{0, 1}};
    static const RoleEdges two_k2{{0, 1}, {2, 3}};
    static const RoleEdges p3{{0, 1}, {0, 2}};
    static const RoleEdges k3{{0, 1}, {0, 2}, {1, 2}};
    static const RoleEdges p4{{0, 1}, {0, 2}, {1, 3}};
    static const RoleEdges claw{{0, 1}, {0, 2}, {0, 3}};
    static const RoleEdges c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    static const RoleEdges paw{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
    static const RoleEdges diamond{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    static const RoleEdges k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    switch (tag) {
        case Pattern4Tag::Empty: return empty;
        case Pattern4Tag::K2_2K1: return k2;
        case Pattern4Tag::TwoK2: return two_k2;
        case Pattern4Tag::P3_K1: return p3;
        case Pattern4Tag::K3_K1: return k3;
        case Pattern4Tag::P4: return p4;
        case Pattern4Tag::Claw: return claw;
        case Pattern4Tag::C4: return c4;
        case Pattern4Tag::Paw: return paw;
        case Pattern4Tag::Diamond: return diamond;
        case Pattern4Tag::K4: return k4;
    }
    return empty;
}

Pattern4Tag tag_from_invariants(int edges, std::array<int, 4> degrees, int triangles) {
    std::sort(degrees.begin(), degrees.end());
    switch (edges) {
        case 0: return Pattern4Tag::Empty;
        case 1: return Pattern4Tag::K2_2K1;
        case 2: return degrees[0] == 1 ? Pattern4Tag::TwoK2 : Pattern4Tag::P3_K1;
        case 3:
            if (triangles == 1) return Pattern4Tag::K3_K1;
            return degrees[3] == 3 ? Pattern4Tag::Claw : Pattern4Tag::P4;
        case 4: return triangles == 0 ? Pattern4Tag::C4 : Pattern4Tag::Paw;
        case 5: return Pattern4Tag::Diamond;
        default: return Pattern4Tag::K4;
    }
}

}  // namespace

Pattern4 classify_four(const Graph& g, const std::array<Vertex, 4>& vertices) {
    std::array<std::array<bool, 4>, 4> a{};
    std::array<int, 4> deg{};
    int edges = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (vertices[i] == vertices[j]) throw GraphError("classify_four needs distinct vertices");
            if (g.has_edge(vertices[i], vertices[j])) {
                a[i][j] = a[j][i] = true;
                ++deg[i];
                ++deg[j];
                ++edges;
            }
        }
    }
    int triangles = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) triangles += a[i][j] && a[j][k] && a[i][k];

    Pattern4 p;
    p.tag = tag_from_invariants(edges, deg, triangles);

    std::array<Vertex, 4> perm = vertices;
    std::sort(perm.begin(), perm.end());
    const auto& tmpl = role_template(p.tag);
    do {
        std::array<std::array<bool, 4>, 4> want{};
        for (auto [i, j] : tmpl) want[i][j] = want[j][i] = true;
        bool match = true;
        for (int i = 0; i < 4 && match; ++i)
            for (int j = i + 1; j < 4 && match; ++j)
                match = want[i][j] == g.has_edge(perm[i], perm[j]);
        if (match) {
            p.roles = perm;
            return p;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::logic_error("no role assignment for four-vertex pattern");
}

Pattern4 classify_neighborhood(const Graph& g, Vertex x) {
    const auto& nx = g.neighbors(x);
    if (nx.size() != 4) throw GraphError("degree not four");
    return classify_four(g, {nx[0], nx[1], nx[2], nx[3]});
}

}  // namespace quasik
