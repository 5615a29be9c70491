#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quasik/connectivity.hpp"
#include "quasik/corpus.hpp"
#include "quasik/graph_io.hpp"

using namespace quasik;

namespace {

std::vector<Graph> fixture(const std::string& name) {
    std::ifstream in(std::filesystem::path(QUASIK_FIXTURE_DIR) / name);
    REQUIRE(in);
    return read_graph6_stream(in);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

VertexSet mapped(const VertexSet& s, const std::vector<Vertex>& perm) {
    VertexSet out;
    for (Vertex v : s) out.push_back(perm[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> oracle_separator_sets(const Graph& g, int size) {
    std::vector<VertexSet> out;
    for (auto mask : oracle::separators(g, size)) out.push_back(oracle::bits(mask));
    std::sort(out.begin(), out.end());
    return out;
}

bool separates(const Graph& g, const VertexSet& t) {
    return components_without(g, t).size() >= 2;
}

}  // namespace

TEST_CASE("vertex_connectivity on named graphs") {
    CHECK(vertex_connectivity(complete_graph(6)) == 5);
    CHECK(vertex_connectivity(complete_graph(1)) == 0);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(Graph(3)) == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(0)), GraphError);

    const Graph petersen = petersen_graph();
    REQUIRE(oracle::connectivity(petersen) == 3);
    CHECK(vertex_connectivity(petersen) == 3);

    const Graph ico = icosahedron();
    REQUIRE(oracle::connectivity(ico) == 5);
    CHECK(vertex_connectivity(ico) == 5);
}

TEST_CASE("vertex_connectivity matches brute force on every graph up to seven vertices") {
    for (const auto& g : fixture("all_graphs_n1-7.g6")) {
        REQUIRE(vertex_connectivity(g) == oracle::connectivity(g));
    }
}

TEST_CASE("vertex_connectivity matches brute force on random graphs and is relabel invariant") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        const int kappa = vertex_connectivity(g);
        REQUIRE(kappa == oracle::connectivity(g));
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(vertex_connectivity(relabel(g, perm)) == kappa);
    }
}

TEST_CASE("min_vertex_cut_between") {
    const Graph c6 = cycle_graph(6);
    const auto cut = min_vertex_cut_between(c6, 0, 3);
    REQUIRE(cut.vertices.size() == 2);
    // one vertex from each of the paths 1-2 and 4-5
    CHECK(std::count_if(cut.vertices.begin(), cut.vertices.end(), [](Vertex v) { return v == 1 || v == 2; }) == 1);
    CHECK(std::count_if(cut.vertices.begin(), cut.vertices.end(), [](Vertex v) { return v == 4 || v == 5; }) == 1);
    CHECK(min_vertex_cut_between(c6, 0, 3).vertices == cut.vertices);

    const auto k23 = min_vertex_cut_between(complete_bipartite_graph(2, 3), 0, 1);
    CHECK(k23.vertices == VertexSet{2, 3, 4});

    CHECK(min_vertex_cut_between(path_graph(3), 0, 2).vertices == VertexSet{1});
    CHECK_THROWS_WITH_AS(min_vertex_cut_between(c6, 0, 1), "adjacent pair has no separator", GraphError);
}

TEST_CASE("min_vertex_cut_between separates with size equal to local connectivity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const Graph g = random_graph(n, 0.45, rng);
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = s + 1; t < n; ++t) {
                if (g.has_edge(s, t)) continue;
                const auto cut = min_vertex_cut_between(g, s, t);
                CHECK(static_cast<int>(cut.vertices.size()) == local_vertex_connectivity(g, s, t));
                CHECK_FALSE(std::binary_search(cut.vertices.begin(), cut.vertices.end(), s));
                CHECK_FALSE(std::binary_search(cut.vertices.begin(), cut.vertices.end(), t));
                const auto comps = components_without(g, cut.vertices);
                for (const auto& c : comps) {
                    CHECK_FALSE((std::binary_search(c.begin(), c.end(), s) && std::binary_search(c.begin(), c.end(), t)));
                }
            }
        }
    }
}

TEST_CASE("enumerate_cuts on small graphs") {
    const auto c4 = enumerate_cuts(cycle_graph(4), 2);
    REQUIRE(c4.cuts.size() == 2);
    CHECK(c4.cuts[0].vertices == VertexSet{0, 2});
    CHECK(c4.cuts[1].vertices == VertexSet{1, 3});
    CHECK(c4.mode == EnumerationMode::exhaustive);

    CHECK(enumerate_cuts(complete_graph(5), 4).cuts.empty());
    CHECK_THROWS_AS(enumerate_cuts(complete_graph(5), 5), GraphError);

    // Brute force finds nine: six pairs at distance two and three antipodal pairs.
    const Graph c6 = cycle_graph(6);
    const auto expected = oracle_separator_sets(c6, 2);
    REQUIRE(expected.size() == 9);
    const auto got = enumerate_cuts(c6, 2);
    std::vector<VertexSet> sets;
    for (const auto& c : got.cuts) sets.push_back(c.vertices);
    CHECK(sets == expected);
    CHECK(std::count_if(got.cuts.begin(), got.cuts.end(), [](const Cut& c) { return c.nontrivial; }) == 3);
}

TEST_CASE("enumerate_cuts matches brute force and cut invariants hold") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        const Graph g = random_graph(n, 0.55, rng);
        const int size = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        const auto got = enumerate_cuts(g, size);
        std::vector<VertexSet> sets;
        for (const auto& c : got.cuts) {
            sets.push_back(c.vertices);
            CHECK(c.components == components_without(g, c.vertices));
            CHECK(c.components.size() >= 2);
            std::vector<int> sizes;
            for (const auto& comp : c.components) sizes.push_back(static_cast<int>(comp.size()));
            CHECK(c.nontrivial == oracle::nontrivial_sizes(sizes));
            CHECK(c.bipartition.has_value() == c.nontrivial);
            if (c.bipartition) {
                const auto& [left, right] = *c.bipartition;
                CHECK(left.size() >= 2);
                CHECK(right.size() >= 2);
                CHECK(left.size() <= right.size());
                VertexSet all;
                std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(all));
                CHECK(all.size() == left.size() + right.size());
                CHECK(all.size() + c.vertices.size() == static_cast<std::size_t>(n));
            }
        }
        CHECK(std::is_sorted(sets.begin(), sets.end()));
        CHECK(sets == oracle_separator_sets(g, size));
    }
}

TEST_CASE("flow-limited enumeration is sound on larger graphs") {
    const Graph g = circulant_graph(20, {1, 2});
    CHECK(enumeration_mode_for(g, 4) == EnumerationMode::exhaustive);
    CHECK(enumeration_mode_for(g, 6) == EnumerationMode::flow_limited);
    CHECK(enumeration_mode_for(g, 6, true) == EnumerationMode::exhaustive);
    CHECK(enumeration_mode_for(cycle_graph(16), 10) == EnumerationMode::exhaustive);

    std::mt19937_64 rng(1);
    const Graph r = random_graph(18, 0.5, rng);
    const auto limited = enumerate_cuts(r, 7);
    CHECK(limited.mode == EnumerationMode::flow_limited);
    for (const auto& c : limited.cuts) CHECK(separates(r, c.vertices));
    const auto full = enumerate_cuts(r, 7, true);
    CHECK(full.mode == EnumerationMode::exhaustive);
    for (const auto& c : limited.cuts) CHECK(std::binary_search(full.cuts.begin(), full.cuts.end(), c));
}

TEST_CASE("for_each_separator stops when asked") {
    int seen = 0;
    for_each_separator(cycle_graph(8), 2, [&](std::span<const Vertex>) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("nontriviality is decided by grouped sizes") {
    const std::vector<int> trivial13{1, 3};
    const std::vector<int> trivial111{1, 1, 1};
    const std::vector<int> nontrivial22{2, 2};
    const std::vector<int> nontrivial112{1, 1, 2};
    const std::vector<int> nontrivial1111{1, 1, 1, 1};
    CHECK_FALSE(nontrivial_grouping(trivial13));
    CHECK_FALSE(nontrivial_grouping(trivial111));
    CHECK(nontrivial_grouping(nontrivial22));
    CHECK(nontrivial_grouping(nontrivial1111));
    const auto pick = nontrivial_grouping(nontrivial112);
    REQUIRE(pick);
    int total = 0;
    for (auto i : *pick) total += nontrivial112[i];
    CHECK(total == 2);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> sizes(2 + rng() % 6);
        for (auto& s : sizes) s = 1 + static_cast<int>(rng() % 4);
        const auto got = nontrivial_grouping(sizes);
        REQUIRE(got.has_value() == oracle::nontrivial_sizes(sizes));
        if (got) {
            int side = 0;
            int all = 0;
            for (auto i : *got) side += sizes[i];
            for (int s : sizes) all += s;
            CHECK(side >= 2);
            CHECK(all - side >= 2);
        }
    }
}

TEST_CASE("is_nontrivial_cut on graphs") {
    // K_{1,3}: removing the centre leaves three singletons
    const Graph claw = complete_bipartite_graph(1, 3);
    CHECK_FALSE(is_nontrivial_cut(claw, VertexSet{0}));
    // removing vertex 1 from the path 0-1-2-3 leaves sizes [1,2]
    CHECK_FALSE(is_nontrivial_cut(path_graph(4), VertexSet{1}));
    const auto c6 = is_nontrivial_cut(cycle_graph(6), VertexSet{0, 3});
    REQUIRE(c6);
    CHECK(c6.witness->first == VertexSet{1, 2});
    CHECK(c6.witness->second == VertexSet{4, 5});
    // K_{1,4}: sizes [1,1,1,1]
    CHECK(is_nontrivial_cut(complete_bipartite_graph(1, 4), VertexSet{0}));
    CHECK_THROWS_WITH_AS(is_nontrivial_cut(cycle_graph(6), VertexSet{0}), "not a cut", GraphError);
}

TEST_CASE("is_quasi_k_connected on named graphs") {
    CHECK(is_quasi_k_connected(complete_graph(5), 5));
    CHECK(is_quasi_k_connected(icosahedron(), 5));
    const auto c6 = is_quasi_k_connected(cycle_graph(6), 5);
    CHECK_FALSE(c6);
    CHECK(c6.failure == QuasiConnectivity::Failure::low_connectivity);
    CHECK(c6.kappa == 2);
    REQUIRE(c6.witness);
    CHECK(c6.witness->vertices.size() == 2);

    // C6 is 2-connected but {0,3} splits it into two paths of two vertices
    const auto c6k3 = is_quasi_k_connected(cycle_graph(6), 3);
    CHECK_FALSE(c6k3);
    CHECK(c6k3.failure == QuasiConnectivity::Failure::nontrivial_cut);
    REQUIRE(c6k3.witness);
    CHECK(c6k3.witness->nontrivial);

    // C5: every 2-cut leaves a singleton
    CHECK(is_quasi_k_connected(cycle_graph(5), 3));
    CHECK_THROWS_AS(is_quasi_k_connected(cycle_graph(5), 1), GraphError);
}

TEST_CASE("is_quasi_k_connected matches brute force") {
    std::mt19937_64 rng(17);
    auto graphs = fixture("all_graphs_n1-7.g6");
    for (const auto& g : fixture("mindeg5_n8.g6")) graphs.push_back(g);
    for (int trial = 0; trial < 100; ++trial) graphs.push_back(random_graph(8 + static_cast<int>(rng() % 4), 0.6, rng));
    for (const auto& g : graphs) {
        for (int k = 2; k <= 6; ++k) {
            const auto q = is_quasi_k_connected(g, k);
            REQUIRE(q.holds == oracle::quasi_k_connected(g, k));
            if (q.kappa < k - 1) CHECK_FALSE(q.holds);
            if (q.kappa >= k) CHECK(q.holds);
            if (q.failure == QuasiConnectivity::Failure::nontrivial_cut) {
                REQUIRE(q.witness);
                CHECK(static_cast<int>(q.witness->vertices.size()) == k - 1);
                CHECK(q.witness->nontrivial);
            }
        }
    }
}

TEST_CASE("partition identity and boundary containment over random cut pairs") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (const Graph& g : {icosahedron(), circulant_graph(10, {1, 2}), circulant_graph(12, {1, 3}), petersen_graph()}) {
        const int kappa = vertex_connectivity(g);
        const auto cuts = enumerate_cuts(g, kappa).cuts;
        REQUIRE_FALSE(cuts.empty());
        for (int trial = 0; trial < 250; ++trial) {
            const Cut& t = cuts[rng() % cuts.size()];
            const Cut& s = cuts[rng() % cuts.size()];
            const VertexSet& b = t.components[rng() % t.components.size()];
            const VertexSet& a = s.components[rng() % s.components.size()];
            VertexSet b_bar;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (!std::binary_search(b.begin(), b.end(), v) && !std::binary_search(t.vertices.begin(), t.vertices.end(), v))
                    b_bar.push_back(v);
            }
            auto meet = [](const VertexSet& x, const VertexSet& y) {
                VertexSet out;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
                return out;
            };
            CHECK(meet(s.vertices, b).size() + meet(s.vertices, t.vertices).size() + meet(s.vertices, b_bar).size() ==
                  s.vertices.size());
            const auto ab = meet(a, b);
            if (!ab.empty()) {
                VertexSet allowed;
                for (const auto& part : {meet(s.vertices, b), meet(s.vertices, t.vertices), meet(a, t.vertices)})
                    allowed.insert(allowed.end(), part.begin(), part.end());
                std::sort(allowed.begin(), allowed.end());
                for (Vertex w : g.neighborhood(ab)) CHECK(std::binary_search(allowed.begin(), allowed.end(), w));
            }
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("cuts are relabel equivariant") {
    std::mt19937_64 rng(4);
    const Graph g = circulant_graph(10, {1, 2});
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto base = enumerate_cuts(g, 4).cuts;
    const auto moved = enumerate_cuts(relabel(g, perm), 4).cuts;
    REQUIRE(base.size() == moved.size());
    std::vector<VertexSet> mapped_sets;
    for (const auto& c : base) mapped_sets.push_back(mapped(c.vertices, perm));
    std::sort(mapped_sets.begin(), mapped_sets.end());
    for (std::size_t i = 0; i < moved.size(); ++i) CHECK(moved[i].vertices == mapped_sets[i]);
}
