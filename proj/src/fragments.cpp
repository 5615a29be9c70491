#include "quasik/fragments.hpp"

#include <algorithm>
#include <map>

namespace quasik {

std::string_view to_string(FragmentKind kind) {
    switch (kind) {
        case FragmentKind::plain: return "plain";
        case FragmentKind::nontrivial: return "nontrivial";
        case FragmentKind::quasi: return "quasi";
    }
    return "?";
}

namespace {

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet union_of(const std::vector<VertexSet>& parts, std::uint32_t mask) {
    VertexSet out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) out.insert(out.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool smaller_body(const Fragment& a, const Fragment& b) {
    if (a.body.size() != b.body.size()) return a.body.size() < b.body.size();
    return a.body < b.body;
}

void sort_and_dedupe(std::vector<Fragment>& fs) {
    std::stable_sort(fs.begin(), fs.end(), [](const Fragment& a, const Fragment& b) { return a.body < b.body; });
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

}  // namespace

Fragment make_fragment(const Graph& g, VertexSet body, VertexSet source_cut, FragmentKind kind) {
    Fragment f;
    f.body = std::move(body);
    f.boundary = g.neighborhood(f.body);
    std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : f.body) taken[v] = 1;
    for (Vertex v : f.boundary) taken[v] = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!taken[v]) f.complement.push_back(v);
    }
    f.kind = kind;
    f.source_cut = std::move(source_cut);
    return f;
}

std::vector<Fragment> fragments_of_cut(const Graph& g, const Cut& t, FragmentScope scope) {
    const Cut cut = make_cut(g, t.vertices);
    const auto c = cut.components.size();
    auto kind_of = [&](const VertexSet& body) {
        const auto rest = static_cast<std::size_t>(g.order()) - body.size() - g.neighborhood(body).size();
        return body.size() >= 2 && rest >= 2 ? FragmentKind::nontrivial : FragmentKind::plain;
    };

    std::vector<Fragment> out;
    if (scope == FragmentScope::all_unions) {
        if (c > 24) throw GraphError("too many components to enumerate every fragment");
        const std::uint32_t full = (std::uint32_t{1} << c) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            VertexSet body = union_of(cut.components, mask);
            const auto kind = kind_of(body);
            out.push_back(make_fragment(g, std::move(body), cut.vertices, kind));
        }
    } else {
        for (std::size_t i = 0; i < c; ++i) {
            for (bool complement : {false, true}) {
                if (complement && c == 2) continue;
                VertexSet body;
                for (std::size_t j = 0; j < c; ++j) {
                    if ((j == i) != complement) body.insert(body.end(), cut.components[j].begin(), cut.components[j].end());
                }
                std::sort(body.begin(), body.end());
                const auto kind = kind_of(body);
                out.push_back(make_fragment(g, std::move(body), cut.vertices, kind));
            }
        }
    }
    return out;
}

std::vector<Fragment> nontrivial_fragments_wrt_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e)) throw GraphError("not an edge: " + to_string(e));
    std::vector<Fragment> out;
    if (g.is_complete()) return out;
    const int kappa = vertex_connectivity(g);
    for_each_separator(g, kappa, [&](std::span<const Vertex> t) {
        if (std::find(t.begin(), t.end(), e.u) == t.end() || std::find(t.begin(), t.end(), e.v) == t.end()) {
            return true;
        }
        const Cut cut = make_cut(g, t);
        const auto scope = cut.components.size() > 24 ? FragmentScope::single_components : FragmentScope::all_unions;
        for (auto& f : fragments_of_cut(g, cut, scope)) {
            if (f.kind == FragmentKind::nontrivial && contains(f.boundary, e.u) && contains(f.boundary, e.v)) {
                out.push_back(std::move(f));
            }
        }
        return true;
    });
    sort_and_dedupe(out);
    return out;
}

std::vector<Fragment> quasi_fragments_wrt_edge(const Graph& g, const Edge& e, int k) {
    if (!g.has_edge(e)) throw GraphError("not an edge: " + to_string(e));
    if (k < 2) throw GraphError("k must be at least 2");
    std::vector<Fragment> out;
    const int n = g.order();
    if (n - k < 4) return out;

    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
        if (v != e.u && v != e.v) others.push_back(v);
    }
    const int pick = k - 2;
    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) idx[i] = i;
    const int m = static_cast<int>(others.size());
    VertexSet t;
    while (true) {
        t.assign({e.u, e.v});
        for (int i : idx) t.push_back(others[i]);
        std::sort(t.begin(), t.end());
        const auto comps = components_without(g, t);
        if (comps.size() >= 2) {
            int total = 0;
            for (const auto& c : comps) total += static_cast<int>(c.size());
            auto add_side = [&](VertexSet body) {
                if (body.size() < 2 || static_cast<int>(body.size()) > total - 2) return;
                Fragment f = make_fragment(g, std::move(body), t, FragmentKind::quasi);
                if (contains(f.boundary, e.u) && contains(f.boundary, e.v)) out.push_back(std::move(f));
            };
            if (comps.size() <= 20) {
                const std::uint32_t full = (std::uint32_t{1} << comps.size()) - 1;
                for (std::uint32_t mask = 1; mask < full; ++mask) add_side(union_of(comps, mask));
            } else {
                const Cut cut = make_cut(g, t);
                if (cut.bipartition) {
                    add_side(cut.bipartition->first);
                    add_side(cut.bipartition->second);
                }
            }
        }
        int i = pick - 1;
        while (i >= 0 && idx[i] == m - pick + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    sort_and_dedupe(out);
    return out;
}

std::optional<Fragment> nontrivial_atom(const Graph& g) {
    if (g.order() == 0 || g.is_complete()) return std::nullopt;
    std::optional<Fragment> best;
    const int kappa = vertex_connectivity(g);
    for_each_separator(g, kappa, [&](std::span<const Vertex> t) {
        const Cut cut = make_cut(g, t);
        const auto scope = cut.components.size() > 24 ? FragmentScope::single_components : FragmentScope::all_unions;
        for (auto& f : fragments_of_cut(g, cut, scope)) {
            if (f.kind != FragmentKind::nontrivial) continue;
            if (!best || smaller_body(f, *best)) best = std::move(f);
        }
        return true;
    });
    return best;
}

std::optional<Fragment> quasi_atom_wrt_edges(const Graph& g, std::span<const Edge> es, int k) {
    std::optional<Fragment> best;
    for (const auto& e : es) {
        for (auto& f : quasi_fragments_wrt_edge(g, e, k)) {
            if (!best || smaller_body(f, *best)) best = std::move(f);
        }
    }
    return best;
}

std::vector<Edge> incident_edges(const Graph& g, Vertex x) {
    std::vector<Edge> out;
    for (Vertex w : g.neighbors(x)) out.emplace_back(x, w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quasik
