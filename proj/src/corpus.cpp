#include "quasik/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "quasik/connectivity.hpp"
#include "quasik/degree_conditions.hpp"
#include "quasik/graph_io.hpp"

namespace quasik {

namespace {

// std distributions are implementation-defined; draws are done by hand so a
// seed means the same corpus everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    bool coin(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::circulant, "circulant"},
    {Family::icosahedron, "icosahedron"},
    {Family::random_5_connected, "random_5_connected"},
    {Family::random_quasi_5_connected, "random_quasi_5_connected"},
    {Family::graph6_file, "graph6_file"},
    {Family::edge_list_file, "edge_list_file"},
};

std::vector<int> int_list(const nlohmann::json& params, const char* key) {
    if (!params.contains(key)) throw CorpusError(std::string("missing parameter '") + key + "'");
    const auto& v = params.at(key);
    std::vector<int> out;
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(x.get<int>());
    } else {
        out.push_back(v.get<int>());
    }
    if (out.empty()) throw CorpusError(std::string("parameter '") + key + "' is empty");
    return out;
}

std::filesystem::path resolve(const CorpusSpec& spec) {
    std::filesystem::path p = spec.params.at("path").get<std::string>();
    if (p.is_relative() && !spec.base_dir.empty()) p = spec.base_dir / p;
    return p;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw CorpusError("generated graph failed family check: " + what);
}

// Stub pairing towards the target degrees; loops and repeats are dropped.
Graph pairing_graph(const std::vector<int>& target, Rng& rng) {
    const int n = static_cast<int>(target.size());
    Graph best(n);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(target[v]), v);
        rng.shuffle(stubs);
        Graph g(n);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1] || !g.add_edge(stubs[i], stubs[i + 1])) simple = false;
        }
        if (simple) return g;
        if (g.size() > best.size()) best = g;
    }
    return best;
}

}  // namespace

std::string_view to_string(Family f) {
    for (auto [family, name] : kFamilies) {
        if (family == f) return name;
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (auto [family, n] : kFamilies) {
        if (n == name) return family;
    }
    throw CorpusError("unknown family '" + std::string(name) + "'");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<CorpusSpec> corpus_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    try {
        if (j.is_object() && j.contains("corpus")) return corpus_from_json(j.at("corpus"), base_dir);
        std::vector<CorpusSpec> out;
        if (j.is_array()) {
            for (const auto& item : j) {
                auto more = corpus_from_json(item, base_dir);
                out.insert(out.end(), more.begin(), more.end());
            }
            return out;
        }
        if (!j.is_object()) throw CorpusError("corpus spec must be an object or an array");
        CorpusSpec spec;
        spec.family = parse_family(j.at("family").get<std::string>());
        if (j.contains("params")) spec.params = j.at("params");
        if (!spec.params.is_object()) throw CorpusError("'params' must be an object");
        spec.count = j.value("count", 1);
        spec.seed = j.value("seed", std::uint64_t{0});
        spec.base_dir = base_dir;
        if (spec.count < 0) throw CorpusError("'count' must be nonnegative");
        out.push_back(std::move(spec));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(std::string("corpus spec: ") + e.what());
    }
}

std::vector<CorpusSpec> load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(path.string() + ": " + e.what());
    }
    return corpus_from_json(j, path.parent_path());
}

nlohmann::json corpus_spec_to_json(const CorpusSpec& spec) {
    return {{"family", to_string(spec.family)}, {"params", spec.params}, {"count", spec.count}, {"seed", spec.seed}};
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& jumps) {
    if (n < 1) throw CorpusError("circulant needs n >= 1");
    Graph g(n);
    for (int jump : jumps) {
        if (jump <= 0 || 2 * jump > n) throw CorpusError("circulant jumps must lie in 1..n/2");
        for (Vertex v = 0; v < n; ++v) {
            const Vertex w = (v + jump) % n;
            if (w != v) g.add_edge(v, w);
        }
    }
    return g;
}

Graph cycle_graph(int n) { return circulant_graph(n, {1}); }

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph icosahedron() {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        const Vertex up = 1 + i;
        const Vertex up_next = 1 + (i + 1) % 5;
        const Vertex low = 6 + i;
        const Vertex low_next = 6 + (i + 1) % 5;
        g.add_edge(0, up);
        g.add_edge(up, up_next);
        g.add_edge(up, low);
        g.add_edge(up_next, low);
        g.add_edge(low, low_next);
        g.add_edge(low, 11);
    }
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph random_5_connected(int n, std::uint64_t seed) {
    if (n < 6) throw CorpusError("a 5-connected graph needs at least 6 vertices");
    Rng rng(seed);
    std::vector<int> target(static_cast<std::size_t>(n), 5);
    if (n % 2 == 1) target[rng.below(static_cast<std::uint64_t>(n))] = 6;
    Graph g = pairing_graph(target, rng);
    while (true) {
        const auto cut = minimum_cut(g);
        if (!cut || static_cast<int>(cut->vertices.size()) >= 5) break;
        const auto& a = cut->components[rng.below(cut->components.size())];
        std::vector<Vertex> others;
        for (const auto& c : cut->components) {
            if (&c != &a) others.insert(others.end(), c.begin(), c.end());
        }
        g.add_edge(a[rng.below(a.size())], others[rng.below(others.size())]);
    }
    require(vertex_connectivity(g) >= 5, "random_5_connected kappa >= 5");
    return g;
}

Graph random_quasi_5_connected(int n, int max_light, bool degree_sum, std::uint64_t seed) {
    if (n < 6) throw CorpusError("quasi 5-connected generation needs at least 6 vertices");
    if (max_light < 0) throw CorpusError("max_light must be nonnegative");
    Rng rng(seed);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        rng.shuffle(order);
        const int light = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(max_light, n) + 1)));
        std::vector<int> target(static_cast<std::size_t>(n), 5);
        std::vector<char> is_light(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < light; ++i) {
            target[order[i]] = 4;
            is_light[order[i]] = 1;
        }
        for (int i = light; i < n; ++i) {
            if (rng.coin(1, 4)) target[order[i]] = 6;
        }

        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        rng.shuffle(pairs);
        Graph g(n);
        for (const auto& e : pairs) {
            if (degree_sum && is_light[e.u] && is_light[e.v]) continue;
            if (g.degree(e.u) < target[e.u] && g.degree(e.v) < target[e.v]) g.add_edge(e.u, e.v);
        }
        // Top up: heavy vertices may exceed their target to reach it for others.
        for (const auto& e : pairs) {
            const bool short_u = g.degree(e.u) < target[e.u];
            const bool short_v = g.degree(e.v) < target[e.v];
            if (!short_u && !short_v) continue;
            if ((!short_u && is_light[e.u]) || (!short_v && is_light[e.v])) continue;
            if (degree_sum && is_light[e.u] && is_light[e.v]) continue;
            g.add_edge(e.u, e.v);
        }
        if (g.min_degree() < 4) continue;
        if (degree_sum && !check_degree_sum_condition(g, 9, 2)) continue;
        if (!is_quasi_k_connected(g, 5)) continue;
        return g;
    }
    throw CorpusError("no quasi 5-connected graph found on " + std::to_string(n) + " vertices");
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusEntry> out;
    const auto& p = spec.params;
    try {
        switch (spec.family) {
            case Family::complete:
                for (int n : int_list(p, "n")) {
                    if (n < 1) throw CorpusError("complete graph needs n >= 1");
                    Graph g = complete_graph(n);
                    require(g.is_complete() && vertex_connectivity(g) == n - 1, "complete");
                    out.push_back({"complete_n" + std::to_string(n), std::move(g)});
                }
                break;
            case Family::complete_bipartite: {
                const int a = p.at("a").get<int>();
                const int b = p.at("b").get<int>();
                if (a < 1 || b < 1) throw CorpusError("complete_bipartite needs a, b >= 1");
                Graph g = complete_bipartite_graph(a, b);
                require(g.size() == static_cast<std::size_t>(a) * static_cast<std::size_t>(b), "complete_bipartite");
                out.push_back({"complete_bipartite_" + std::to_string(a) + "_" + std::to_string(b), std::move(g)});
                break;
            }
            case Family::circulant: {
                auto jumps = int_list(p, "jumps");
                std::sort(jumps.begin(), jumps.end());
                jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
                std::string tag;
                for (int j : jumps) tag += (tag.empty() ? "" : "-") + std::to_string(j);
                for (int n : int_list(p, "n")) {
                    Graph g = circulant_graph(n, jumps);
                    int degree = 0;
                    for (int j : jumps) degree += 2 * j == n ? 1 : 2;
                    require(g.is_regular(degree), "circulant regularity");
                    out.push_back({"circulant_n" + std::to_string(n) + "_j" + tag, std::move(g)});
                }
                break;
            }
            case Family::icosahedron: {
                Graph g = icosahedron();
                require(g.order() == 12 && g.size() == 30 && g.is_regular(5) && vertex_connectivity(g) == 5, "icosahedron");
                out.push_back({"icosahedron", std::move(g)});
                break;
            }
            case Family::random_5_connected: {
                const auto ns = int_list(p, "n");
                for (int i = 0; i < spec.count; ++i) {
                    const int n = ns[static_cast<std::size_t>(i) % ns.size()];
                    Graph g = random_5_connected(n, mix_seed(spec.seed, static_cast<std::uint64_t>(i)));
                    out.push_back({"random_5_connected_n" + std::to_string(n) + "_s" + std::to_string(spec.seed) +
                                       "_" + std::to_string(i),
                                   std::move(g)});
                }
                break;
            }
            case Family::random_quasi_5_connected: {
                const auto ns = int_list(p, "n");
                const int max_light = p.value("max_light", 2);
                const bool degree_sum = p.value("degree_sum", true);
                for (int i = 0; i < spec.count; ++i) {
                    const int n = ns[static_cast<std::size_t>(i) % ns.size()];
                    Graph g = random_quasi_5_connected(n, max_light, degree_sum,
                                                       mix_seed(spec.seed, static_cast<std::uint64_t>(i)));
                    require(static_cast<bool>(is_quasi_k_connected(g, 5)), "quasi 5-connected");
                    if (degree_sum) require(static_cast<bool>(check_degree_sum_condition(g, 9, 2)), "degree sum");
                    out.push_back({"random_quasi_5_connected_n" + std::to_string(n) + "_s" + std::to_string(spec.seed) +
                                       "_" + std::to_string(i),
                                   std::move(g)});
                }
                break;
            }
            case Family::graph6_file: {
                const auto path = resolve(spec);
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path.string());
                const auto limit = p.value("limit", -1);
                auto graphs = read_graph6_stream(in);
                const auto stem = path.filename().string();
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    if (limit >= 0 && static_cast<int>(i) >= limit) break;
                    out.push_back({stem + ":" + std::to_string(i + 1), std::move(graphs[i])});
                }
                break;
            }
            case Family::edge_list_file: {
                const auto path = resolve(spec);
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path.string());
                out.push_back({path.filename().string(), read_edge_list(in)});
                break;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(std::string(to_string(spec.family)) + ": " + e.what());
    }
    for (const auto& entry : out) entry.graph.check_invariants();
    return out;
}

}  // namespace quasik
