#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "quasik/campaign.hpp"
#include "quasik/contractibility.hpp"
#include "quasik/corpus.hpp"
#include "quasik/degree_conditions.hpp"
#include "quasik/graph_io.hpp"
#include "quasik/serialize.hpp"
#include "quasik/verification.hpp"

using namespace quasik;
using nlohmann::json;

namespace {

std::vector<json> lines_of(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}

std::string campaign_text(const json& corpus, std::vector<Claim> claims, CampaignSummary* summary = nullptr) {
    CampaignOptions options;
    options.claims = std::move(claims);
    std::ostringstream out;
    const auto s = run_campaign(corpus_from_json(corpus), options, out);
    if (summary) *summary = s;
    return out.str();
}

}  // namespace

TEST_CASE("degree-sum condition") {
    CHECK(check_degree_sum_condition(complete_graph(6)));
    CHECK(check_degree_sum_condition(icosahedron()));
    const auto c8 = check_degree_sum_condition(circulant_graph(8, {1, 2}));
    CHECK_FALSE(c8);
    REQUIRE(c8.violation);
    CHECK(c8.violation == std::pair<Vertex, Vertex>{0, 1});

    // a path 0-1-2 of degree-4 vertices only matters at distance <= max_dist
    CHECK(check_degree_sum_condition(cycle_graph(9), 4, 1));
    CHECK_FALSE(check_degree_sum_condition(cycle_graph(9), 5, 1));
    CHECK(check_degree_sum_condition(Graph(3), 100, 2));
}

TEST_CASE("degree-sum condition matches a direct pair scan") {
    for (const Graph& g : {petersen_graph(), circulant_graph(13, {1, 5}), complete_bipartite_graph(3, 5), path_graph(7)}) {
        for (int bound : {4, 6, 9}) {
            for (int dist : {1, 2}) {
                std::optional<std::pair<Vertex, Vertex>> first;
                for (Vertex x = 0; x < g.order() && !first; ++x) {
                    for (Vertex y = x + 1; y < g.order() && !first; ++y) {
                        const auto d = distance(g, x, y);
                        if (d && *d <= dist && g.degree(x) + g.degree(y) < bound) first = {x, y};
                    }
                }
                const auto got = check_degree_sum_condition(g, bound, dist);
                CHECK(got.holds == !first.has_value());
                CHECK(got.violation == first);
            }
        }
    }
}

TEST_CASE("minimum degree condition") {
    CHECK(five_quarters_floor(4) == 5);
    CHECK(five_quarters_floor(7) == 8);
    CHECK(check_min_degree_condition(complete_graph(6), 4));
    CHECK(check_min_degree_condition(icosahedron(), 4));
    CHECK_FALSE(check_min_degree_condition(circulant_graph(8, {1, 2}), 4));
}

TEST_CASE("generate_corpus families") {
    CorpusSpec k6;
    k6.params = {{"n", 6}};
    const auto k = generate_corpus(k6);
    REQUIRE(k.size() == 1);
    CHECK(k[0].id == "complete_n6");
    CHECK(vertex_connectivity(k[0].graph) == 5);

    CorpusSpec c9;
    c9.family = Family::circulant;
    c9.params = {{"n", 9}, {"jumps", {1, 2}}};
    const auto c = generate_corpus(c9).at(0);
    CHECK(c.id == "circulant_n9_j1-2");
    CHECK(c.graph.is_regular(4));
    REQUIRE(oracle::connectivity(c.graph) == 4);
    CHECK(vertex_connectivity(c.graph) == 4);

    CorpusSpec ico;
    ico.family = Family::icosahedron;
    const auto i = generate_corpus(ico).at(0);
    CHECK(i.graph.order() == 12);
    CHECK(i.graph.size() == 30);
    CHECK(vertex_connectivity(i.graph) == 5);

    CorpusSpec bad;
    bad.family = Family::random_5_connected;
    bad.params = {{"n", 5}};
    CHECK_THROWS_AS(generate_corpus(bad), CorpusError);
    CorpusSpec bad_jump;
    bad_jump.family = Family::circulant;
    bad_jump.params = {{"n", 8}, {"jumps", {5}}};
    CHECK_THROWS_AS(generate_corpus(bad_jump), CorpusError);
    CHECK_THROWS_AS(parse_family("hypercube"), CorpusError);
}

TEST_CASE("random families are deterministic and satisfy their properties") {
    CorpusSpec spec;
    spec.family = Family::random_5_connected;
    spec.params = {{"n", json::array({8, 11})}};
    spec.count = 6;
    spec.seed = 42;
    const auto a = generate_corpus(spec);
    const auto b = generate_corpus(spec);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(to_graph6(a[i].graph) == to_graph6(b[i].graph));
        CHECK(oracle::connectivity(a[i].graph) >= 5);
    }
    CHECK(a[1].graph.order() == 11);

    spec.family = Family::random_quasi_5_connected;
    spec.params = {{"n", json::array({9, 10})}, {"max_light", 2}};
    spec.count = 4;
    for (const auto& e : generate_corpus(spec)) {
        CHECK(oracle::quasi_k_connected(e.graph, 5));
        CHECK(check_degree_sum_condition(e.graph, 9, 2));
        CHECK(e.graph.min_degree() >= 4);
    }
}

TEST_CASE("corpus spec JSON round-trip and file families") {
    const auto specs = corpus_from_json(json::parse(R"({"corpus": [
        {"family": "complete", "params": {"n": [6, 7]}},
        {"family": "graph6_file", "params": {"path": "mindeg7_n9.g6", "limit": 2}}
    ]})"),
                                        QUASIK_FIXTURE_DIR);
    REQUIRE(specs.size() == 2);
    CHECK(corpus_from_json(corpus_spec_to_json(specs[0])).at(0).params == specs[0].params);
    CHECK(generate_corpus(specs[0]).size() == 2);
    const auto file = generate_corpus(specs[1]);
    REQUIRE(file.size() == 2);
    CHECK(file[1].id == "mindeg7_n9.g6:2");
    CHECK(file[0].graph.min_degree() >= 7);

    CHECK_THROWS_AS(corpus_from_json(json::parse(R"({"family": "nope"})")), CorpusError);
    CHECK_THROWS_AS(corpus_from_json(json::parse("42")), CorpusError);
}

TEST_CASE("theorem checks on named graphs") {
    const auto ico = verify_theorem1(icosahedron());
    CHECK(ico.hypotheses_hold);
    CHECK(ico.conclusion_holds);
    CHECK(ico.verdict() == Verdict::verified);
    REQUIRE(ico.witness.contains("edge"));
    const auto e = ico.witness["edge"];
    CHECK(is_quasi_k_contractible(icosahedron(), Edge(e[0].get<int>(), e[1].get<int>())).quasi_k_contractible);

    CHECK(verify_theorem1(complete_graph(6)).verdict() == Verdict::verified);
    CHECK(verify_theorem1(cycle_graph(6)).verdict() == Verdict::vacuous);

    const auto k5 = verify_theorem2(complete_graph(5));
    CHECK_FALSE(k5.hypotheses_hold);
    CHECK(k5.verdict() == Verdict::vacuous);
    CHECK(verify_theorem2(complete_graph(6)).verdict() == Verdict::verified);
    CHECK(verify_theorem2(icosahedron()).verdict() == Verdict::verified);
}

TEST_CASE("lemma checks on named graphs") {
    const auto l2 = verify_lemma(icosahedron(), Claim::lemma2);
    CHECK(l2.verdict() == Verdict::verified);
    CHECK(l2.configurations == 30);

    const auto l4 = verify_lemma(complete_bipartite_graph(4, 4), Claim::lemma4);
    CHECK(l4.verdict() == Verdict::verified);
    CHECK(l4.witness["is_critical"] == false);
    CHECK(l4.witness.contains("contractible_edge"));

    CHECK(verify_lemma(cycle_graph(6), Claim::lemma3).verdict() == Verdict::vacuous);
    CHECK(verify_lemma(icosahedron(), Claim::lemma5).verdict() == Verdict::vacuous);
    CHECK(verify_lemma(icosahedron(), Claim::lemma1).verdict() == Verdict::vacuous);
    CHECK_THROWS_AS(verify_lemma(icosahedron(), Claim::theorem1), std::invalid_argument);
}

TEST_CASE("criticality search is inconclusive above 16 vertices without exhaustive mode") {
    CorpusSpec spec;
    spec.family = Family::random_quasi_5_connected;
    spec.params = {{"n", 17}};
    const Graph g = generate_corpus(spec).at(0).graph;
    const auto r = verify_lemma(g, Claim::lemma5);
    CHECK(r.verdict() == Verdict::inconclusive);
    CHECK(report_to_json(r, g)["conclusion_holds"].is_null());
}

TEST_CASE("degree condition checks") {
    // K_{5,5}: 5-connected, delta 5 < floor(25/4) = 6 at k = 5
    CHECK(verify_degree_condition_A(complete_bipartite_graph(5, 5)).verdict() == Verdict::vacuous);
    // at k = 4 the icosahedron has delta 5 >= 5 and contracting any edge keeps 4-connectivity
    VerifyOptions k4;
    k4.k = 4;
    const auto a = verify_degree_condition_A(icosahedron(), k4);
    CHECK(a.verdict() == Verdict::verified);
    CHECK(a.witness["k"] == 4);
    const auto bc = verify_degree_condition_BC(icosahedron(), k4);
    CHECK(bc.verdict() == Verdict::verified);
    CHECK(bc.witness["form"] == "distance-two");
    CHECK(verify_degree_condition_A(complete_graph(7)).verdict() == Verdict::vacuous);

    VerifyOptions k7;
    k7.k = 7;
    const Graph k88 = complete_bipartite_graph(8, 8);
    CHECK(verify_degree_condition_BC(k88, k7).verdict() == Verdict::vacuous);
}

TEST_CASE("falsified needs exhaustive enumeration") {
    VerificationReport r;
    r.hypotheses_hold = true;
    r.conclusion_holds = false;
    CHECK(r.verdict() == Verdict::falsified);
    r.mode = EnumerationMode::flow_limited;
    CHECK(r.verdict() == Verdict::inconclusive);
    r.mode = EnumerationMode::exhaustive;
    r.timed_out = true;
    CHECK(r.verdict() == Verdict::timeout);
}

TEST_CASE("expired deadlines become timeout reports") {
    VerifyOptions opts;
    opts.deadline = Deadline::after(std::chrono::duration<double>(0));
    const auto r = verify_claim(icosahedron(), Claim::theorem1, opts, "ico");
    CHECK(r.verdict() == Verdict::timeout);
    CHECK(r.graph_id == "ico");
    const auto j = report_to_json(r, icosahedron());
    CHECK(j["verdict"] == "timeout");
    CHECK(j["conclusion_holds"].is_null());
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(report_to_json(r, icosahedron(), true).contains("elapsed_ms"));
}

TEST_CASE("claim names") {
    for (Claim c : all_claims()) CHECK(parse_claim(to_string(c)) == c);
    CHECK(all_claims().size() == 9);
    CHECK(is_lemma(Claim::lemma3));
    CHECK_FALSE(is_lemma(Claim::theorem2));
    CHECK_THROWS_AS(parse_claim("lemma6"), std::invalid_argument);
}

TEST_CASE("campaigns") {
    CampaignSummary s;
    const auto text = campaign_text(json::parse(R"({"family": "complete", "params": {"n": [6, 7, 8, 9]}})"),
                                    {Claim::theorem1}, &s);
    CHECK(s.graphs == 4);
    CHECK(s.verified == 4);
    CHECK(s.falsified == 0);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["graph_id"] == "complete_n6");
    CHECK(lines[3]["graph6"] == to_graph6(complete_graph(9)));
    CHECK(lines[0]["conclusion_holds"] == true);

    campaign_text(json::parse(R"({"family": "circulant", "params": {"n": 8, "jumps": [1, 2]}})"), {Claim::lemma4}, &s);
    CHECK(s.verified == 1);

    campaign_text(json::array(), {Claim::theorem1}, &s);
    CHECK(s.to_json() == json{{"graphs", 0}, {"verified", 0}, {"vacuous", 0}, {"falsified", 0}, {"inconclusive", 0}, {"timeout", 0}});

    const auto corpus = json::parse(R"([{"family": "random_5_connected", "params": {"n": [9, 10]}, "count": 3, "seed": 7},
                                        {"family": "icosahedron"}])");
    CHECK(campaign_text(corpus, all_claims()) == campaign_text(corpus, all_claims()));
}

TEST_CASE("search for contraction-critical quasi 5-connected graphs") {
    std::ostringstream out;
    const auto s = search_contraction_critical_quasi5(
        corpus_from_json(json::parse(R"([{"family": "icosahedron"}, {"family": "circulant", "params": {"n": 10, "jumps": [1, 2]}}])")),
        false, out);
    CHECK(s.graphs == 2);
    CHECK(s.quasi_5_connected >= 1);
    // every hit must really have no quasi 5-contractible edge
    for (const auto& hit : lines_of(out.str())) {
        const Graph g = from_graph6(hit["graph6"].get<std::string>());
        CHECK(is_contraction_critical(g, 5, true));
    }
}

TEST_CASE("serialisation shapes") {
    CHECK(json(Edge(3, 1)) == json::array({1, 3}));
    const Graph c6 = cycle_graph(6);
    const json cut = make_cut(c6, VertexSet{0, 3});
    CHECK(cut["vertices"] == json::array({0, 3}));
    CHECK(cut["nontrivial"] == true);
    const json frag = fragments_of_cut(c6, make_cut(c6, VertexSet{0, 3})).at(0);
    for (const char* key : {"body", "boundary", "complement", "kind", "source_cut"}) CHECK(frag.contains(key));
    const json report = is_quasi_k_contractible(complete_graph(6), Edge(0, 1));
    CHECK(report["quasi_k_contractible"] == true);
    CHECK(report["refuting_cut"].is_null());
}
