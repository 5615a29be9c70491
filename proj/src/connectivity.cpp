#include "quasik/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>

namespace quasik {

std::string_view to_string(EnumerationMode mode) {
    return mode == EnumerationMode::exhaustive ? "exhaustive" : "flow-limited";
}

std::string_view to_string(QuasiConnectivity::Failure failure) {
    switch (failure) {
        case QuasiConnectivity::Failure::none: return "none";
        case QuasiConnectivity::Failure::low_connectivity: return "low-connectivity";
        case QuasiConnectivity::Failure::nontrivial_cut: return "nontrivial-cut";
    }
    return "?";
}

std::optional<std::vector<std::size_t>> nontrivial_grouping(std::span<const int> sizes) {
    int total = 0;
    for (int s : sizes) {
        if (s <= 0) throw GraphError("component sizes must be positive");
        total += s;
    }
    if (sizes.size() < 2 || total < 4) return std::nullopt;

    // reach[i][s]: some subset of the first i components sums to s.
    std::vector<std::vector<char>> reach(sizes.size() + 1, std::vector<char>(total + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (int s = 0; s <= total; ++s) {
            if (!reach[i][s]) continue;
            reach[i + 1][s] = 1;
            reach[i + 1][s + sizes[i]] = 1;
        }
    }
    int target = -1;
    for (int s = 2; s <= total - 2; ++s) {
        if (reach[sizes.size()][s]) {
            target = s;
            break;
        }
    }
    if (target < 0) return std::nullopt;

    std::vector<std::size_t> side;
    for (std::size_t i = sizes.size(); i-- > 0;) {
        if (reach[i][target]) continue;
        side.push_back(i);
        target -= sizes[i];
    }
    std::reverse(side.begin(), side.end());
    return side;
}

namespace {

VertexSet normalized(const Graph& g, std::span<const Vertex> t) {
    VertexSet out(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Vertex v : out) {
        if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    return out;
}

void fill_nontriviality(Cut& cut) {
    std::vector<int> sizes;
    sizes.reserve(cut.components.size());
    for (const auto& c : cut.components) sizes.push_back(static_cast<int>(c.size()));
    const auto grouping = nontrivial_grouping(sizes);
    cut.nontrivial = grouping.has_value();
    if (!grouping) return;
    std::vector<char> first(cut.components.size(), 0);
    for (auto i : *grouping) first[i] = 1;
    Bipartition bp;
    for (std::size_t i = 0; i < cut.components.size(); ++i) {
        auto& side = first[i] ? bp.first : bp.second;
        side.insert(side.end(), cut.components[i].begin(), cut.components[i].end());
    }
    std::sort(bp.first.begin(), bp.first.end());
    std::sort(bp.second.begin(), bp.second.end());
    cut.bipartition = std::move(bp);
}

// Residual network for unit vertex capacities: vertex v becomes in=2v, out=2v+1.
class SplitFlow {
public:
    SplitFlow(const Graph& g, Vertex s, Vertex t) : n_(g.order()), head_(2 * n_, -1) {
        constexpr int inf = INT_MAX / 4;
        for (Vertex v = 0; v < n_; ++v) {
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
        }
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w, inf);
        }
        source_ = 2 * s + 1;
        sink_ = 2 * t;
    }

    int run(int cutoff) {
        int flow = 0;
        std::vector<int> parent_arc(head_.size());
        while (flow < cutoff) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::queue<int> q;
            q.push(source_);
            parent_arc[source_] = -2;
            while (!q.empty() && parent_arc[sink_] == -1) {
                const int x = q.front();
                q.pop();
                for (int a = head_[x]; a >= 0; a = next_[a]) {
                    const int y = to_[a];
                    if (cap_[a] > 0 && parent_arc[y] == -1) {
                        parent_arc[y] = a;
                        q.push(y);
                    }
                }
            }
            if (parent_arc[sink_] == -1) break;
            for (int y = sink_; y != source_; y = to_[parent_arc[y] ^ 1]) {
                --cap_[parent_arc[y]];
                ++cap_[parent_arc[y] ^ 1];
            }
            ++flow;
        }
        return flow;
    }

    /// Vertices whose split arc crosses the residual-reachability frontier.
    VertexSet separator() const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(source_);
        seen[source_] = 1;
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int a = head_[x]; a >= 0; a = next_[a]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    q.push(to_[a]);
                }
            }
        }
        VertexSet out;
        for (Vertex v = 0; v < n_; ++v) {
            if (seen[2 * v] && !seen[2 * v + 1]) out.push_back(v);
        }
        return out;
    }

private:
    void add_arc(int from, int to, int cap) {
        for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
            to_.push_back(b);
            cap_.push_back(c);
            next_.push_back(head_[a]);
            head_[a] = static_cast<int>(to_.size()) - 1;
        }
    }

    int n_;
    int source_ = 0;
    int sink_ = 0;
    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> next_;
};

void check_separable_pair(const Graph& g, Vertex s, Vertex t) {
    if (!g.valid(s) || !g.valid(t)) throw GraphError("vertex out of range");
    if (s == t) throw GraphError("source and sink coincide");
    if (g.has_edge(s, t)) throw GraphError("adjacent pair has no separator");
}

template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    if (k > n) return true;
    std::vector<Vertex> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(std::span<const Vertex>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

class MaskGraph {
public:
    explicit MaskGraph(const Graph& g) : adj_(static_cast<std::size_t>(g.order()), 0) {
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << w;
        }
        all_ = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    }

    bool disconnects(std::span<const Vertex> removed) const {
        std::uint64_t left = all_;
        for (Vertex v : removed) left &= ~(std::uint64_t{1} << v);
        if (std::popcount(left) < 2) return false;
        std::uint64_t reach = left & (~left + 1);
        std::uint64_t frontier = reach;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const std::uint64_t fresh = adj_[v] & left & ~reach;
            reach |= fresh;
            frontier |= fresh;
        }
        return reach != left;
    }

private:
    std::vector<std::uint64_t> adj_;
    std::uint64_t all_ = 0;
};

bool disconnects(const Graph& g, std::span<const Vertex> removed) {
    if (g.order() - static_cast<int>(removed.size()) < 2) return false;
    return components_without(g, removed).size() >= 2;
}

}  // namespace

Cut make_cut(const Graph& g, std::span<const Vertex> t) {
    Cut cut;
    cut.vertices = normalized(g, t);
    cut.components = components_without(g, cut.vertices);
    if (cut.components.size() < 2) throw GraphError("not a cut");
    fill_nontriviality(cut);
    return cut;
}

Nontriviality is_nontrivial_cut(const Graph& g, std::span<const Vertex> t) {
    Cut cut = make_cut(g, t);
    return {cut.nontrivial, std::move(cut.bipartition)};
}

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cutoff) {
    check_separable_pair(g, s, t);
    SplitFlow flow(g, s, t);
    return flow.run(cutoff);
}

Cut min_vertex_cut_between(const Graph& g, Vertex s, Vertex t) {
    check_separable_pair(g, s, t);
    SplitFlow flow(g, s, t);
    flow.run(INT_MAX);
    return make_cut(g, flow.separator());
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw GraphError("connectivity of the empty graph is undefined");
    if (g.is_complete()) return n - 1;
    if (!is_connected(g)) return 0;

    // Any minimum cut misses some minimum-degree vertex v or one of its
    // neighbours, so it separates v from a non-neighbour or two neighbours of v.
    Vertex v = 0;
    for (Vertex u = 1; u < n; ++u) {
        if (g.degree(u) < g.degree(v)) v = u;
    }
    int best = g.degree(v);
    for (Vertex w = 0; w < n; ++w) {
        if (w == v || g.has_edge(v, w)) continue;
        best = std::min(best, local_vertex_connectivity(g, v, w, best));
    }
    const auto& nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.size(); ++j) {
            if (g.has_edge(nv[i], nv[j])) continue;
            best = std::min(best, local_vertex_connectivity(g, nv[i], nv[j], best));
        }
    }
    return best;
}

std::optional<Cut> minimum_cut(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw GraphError("empty graph has no cuts");
    if (g.is_complete()) return std::nullopt;
    if (!is_connected(g)) return make_cut(g, {});
    const int kappa = vertex_connectivity(g);
    std::optional<Cut> found;
    for_each_separator(g, kappa, [&](std::span<const Vertex> t) {
        found = make_cut(g, t);
        return false;
    });
    if (found) return found;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            Cut c = min_vertex_cut_between(g, s, t);
            if (static_cast<int>(c.vertices.size()) == kappa) return c;
        }
    }
    return std::nullopt;
}

EnumerationMode enumeration_mode_for(const Graph& g, int size, bool force_exhaustive) {
    if (force_exhaustive || g.order() <= 16 || size <= 5) return EnumerationMode::exhaustive;
    return EnumerationMode::flow_limited;
}

EnumerationMode for_each_separator(const Graph& g, int size,
                                   const std::function<bool(std::span<const Vertex>)>& visit,
                                   bool force_exhaustive) {
    const int n = g.order();
    if (size < 0) throw GraphError("negative cut size");
    const auto mode = enumeration_mode_for(g, size, force_exhaustive);
    if (mode == EnumerationMode::exhaustive) {
        if (n <= 64) {
            const MaskGraph mg(g);
            for_each_combination(n, size, [&](std::span<const Vertex> t) {
                return !mg.disconnects(t) || visit(t);
            });
        } else {
            for_each_combination(n, size, [&](std::span<const Vertex> t) {
                return !disconnects(g, t) || visit(t);
            });
        }
        return mode;
    }

    // Separators reachable from flows between non-adjacent pairs, plus the
    // neighbourhoods of single vertices and of edges.
    std::set<VertexSet> found;
    auto consider = [&](VertexSet t) {
        if (static_cast<int>(t.size()) == size && disconnects(g, t)) found.insert(std::move(t));
    };
    for (Vertex s = 0; s < n; ++s) {
        consider(g.neighbors(s));
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) {
                const std::array<Vertex, 2> pair{s, t};
                consider(g.neighborhood(pair));
            } else if (local_vertex_connectivity(g, s, t, size + 1) == size) {
                consider(min_vertex_cut_between(g, s, t).vertices);
            }
        }
    }
    for (const auto& t : found) {
        if (!visit(t)) break;
    }
    return mode;
}

CutEnumeration enumerate_cuts(const Graph& g, int size, bool force_exhaustive) {
    if (size >= g.order()) {
        throw GraphError("cut size " + std::to_string(size) + " must be below the order " +
                         std::to_string(g.order()));
    }
    CutEnumeration out;
    out.mode = for_each_separator(
        g, size,
        [&](std::span<const Vertex> t) {
            out.cuts.push_back(make_cut(g, t));
            return true;
        },
        force_exhaustive);
    return out;
}

QuasiConnectivity is_quasi_k_connected(const Graph& g, int k, bool force_exhaustive) {
    return is_quasi_k_connected(g, k, vertex_connectivity(g), force_exhaustive);
}

QuasiConnectivity is_quasi_k_connected(const Graph& g, int k, int kappa, bool force_exhaustive) {
    if (k < 2) throw GraphError("quasi k-connectivity needs k >= 2");
    QuasiConnectivity q;
    q.kappa = kappa;
    if (kappa < k - 1) {
        q.failure = QuasiConnectivity::Failure::low_connectivity;
        q.witness = minimum_cut(g);
        return q;
    }
    if (kappa >= k) {
        q.holds = true;
        return q;
    }
    q.mode = for_each_separator(
        g, k - 1,
        [&](std::span<const Vertex> t) {
            Cut c = make_cut(g, t);
            if (!c.nontrivial) return true;
            q.witness = std::move(c);
            return false;
        },
        force_exhaustive);
    q.holds = !q.witness.has_value();
    if (!q.holds) q.failure = QuasiConnectivity::Failure::nontrivial_cut;
    return q;
}

}  // namespace quasik
