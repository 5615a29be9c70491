// quasik: analyze graphs, run verification campaigns, hunt for
// contraction-critical quasi 5-connected graphs, and generate corpora.
//
// Exit codes: 0 clean, 1 a claim was falsified, 2 usage or IO error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasik/campaign.hpp"
#include "quasik/contractibility.hpp"
#include "quasik/corpus.hpp"
#include "quasik/fragments.hpp"
#include "quasik/graph_io.hpp"
#include "quasik/serialize.hpp"
#include "quasik/verification.hpp"

namespace {

using nlohmann::json;
using namespace quasik;

constexpr int kExitClean = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

json analyze_graph(const Graph& g, int k) {
    json j{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"k", k}};
    if (g.order() == 0) return j;
    const auto q = is_quasi_k_connected(g, k);
    j["kappa"] = q.kappa;
    j["quasi_k_connected"] = q.holds;
    j["quasi_failure"] = to_string(q.failure);
    j["enumeration_mode"] = to_string(q.mode);
    j["quasi_witness"] = q.witness ? json(*q.witness) : json(nullptr);

    std::vector<Edge> k_contractible;
    for (const auto& e : g.edges()) {
        if (is_k_contractible(g, e, k)) k_contractible.push_back(e);
    }
    j["k_contractible_edges"] = k_contractible;

    if (q.holds) {
        std::vector<Edge> quasi;
        std::vector<Edge> e0;
        for (const auto& r : contraction_reports(g, k)) {
            if (r.quasi_k_contractible) quasi.push_back(r.edge);
            if (r.in_E0) e0.push_back(r.edge);
        }
        j["quasi_k_contractible_edges"] = quasi;
        j["E0"] = e0;
        const auto edges = g.edges();
        const auto qa = quasi_atom_wrt_edges(g, edges, k);
        j["quasi_atom"] = qa ? json(*qa) : json(nullptr);
    } else {
        j["quasi_k_contractible_edges"] = nullptr;
        j["E0"] = nullptr;
        j["quasi_atom"] = nullptr;
    }
    const auto atom = nontrivial_atom(g);
    j["nontrivial_atom"] = atom ? json(*atom) : json(nullptr);
    return j;
}

void print_text(std::ostream& out, const std::string& id, const json& j) {
    auto edges = [](const json& list) {
        if (list.is_null()) return std::string("n/a");
        std::string s;
        for (const auto& e : list) s += (s.empty() ? "" : " ") + std::to_string(e[0].get<int>()) + "-" + std::to_string(e[1].get<int>());
        return s.empty() ? std::string("none") : s;
    };
    out << id << "  n=" << j["n"] << " m=" << j["m"] << " graph6=" << j["graph6"].get<std::string>() << '\n';
    if (!j.contains("kappa")) return;
    out << "  kappa                     " << j["kappa"] << '\n';
    out << "  quasi " << j["k"] << "-connected         " << (j["quasi_k_connected"].get<bool>() ? "yes" : "no");
    if (!j["quasi_k_connected"].get<bool>()) {
        out << " (" << j["quasi_failure"].get<std::string>() << ")";
        if (!j["quasi_witness"].is_null()) out << " cut " << j["quasi_witness"]["vertices"].dump();
    }
    out << '\n';
    out << "  k-contractible edges      " << edges(j["k_contractible_edges"]) << '\n';
    out << "  quasi-contractible edges  " << edges(j["quasi_k_contractible_edges"]) << '\n';
    out << "  E0                        " << edges(j["E0"]) << '\n';
    out << "  nontrivial atom           "
        << (j["nontrivial_atom"].is_null() ? std::string("none") : j["nontrivial_atom"]["body"].dump()) << '\n';
    out << "  quasi atom                "
        << (j["quasi_atom"].is_null() ? std::string("none") : j["quasi_atom"]["body"].dump()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi k-connectivity and contractible-edge analysis"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Per-graph summary: kappa, quasi verdict, E0, contractible edges, atoms");
    std::string analyze_file;
    int analyze_k = 5;
    bool analyze_json = false;
    analyze->add_option("file", analyze_file, "graph6, edge-list or adjacency JSON file")->required();
    analyze->add_option("--k", analyze_k, "connectivity parameter")->check(CLI::Range(2, 1000));
    analyze->add_flag("--json", analyze_json, "emit one JSON object per graph");

    auto* verify = app.add_subcommand("verify", "Run a verification campaign and write JSON lines");
    std::vector<std::string> claims;
    std::string corpus_path;
    std::string out_path;
    bool exhaustive = false;
    double timeout = 0;
    int verify_k = 0;
    bool timing = false;
    verify->add_option("--claim", claims, "claim id (repeatable) or 'all'")->required();
    verify->add_option("--corpus", corpus_path, "corpus spec JSON")->required();
    verify->add_option("--out", out_path, "report file (JSON lines)")->required();
    verify->add_flag("--exhaustive", exhaustive, "force exhaustive cut enumeration");
    verify->add_option("--timeout", timeout, "per (graph, claim) budget in seconds")->check(CLI::PositiveNumber);
    verify->add_option("--k", verify_k, "k for the degree-condition claims (default: kappa)")->check(CLI::Range(2, 1000));
    verify->add_flag("--timing", timing, "include elapsed_ms in each report line");

    auto* search = app.add_subcommand("search", "Hunt for graphs without a quasi 5-contractible edge");
    std::string target;
    std::string search_corpus;
    std::string search_out;
    bool search_exhaustive = false;
    search->add_option("--target", target, "search target")->required()->check(CLI::IsMember({"contraction-critical-quasi-5"}));
    search->add_option("--corpus", search_corpus, "corpus spec JSON")->required();
    search->add_option("--out", search_out, "write hits here instead of stdout");
    search->add_flag("--exhaustive", search_exhaustive, "force exhaustive cut enumeration");

    auto* generate = app.add_subcommand("generate", "Write a generated corpus as graph6");
    std::string family;
    std::string params = "{}";
    std::uint64_t seed = 0;
    int count = 1;
    std::string out_dir;
    generate->add_option("--family", family, "generator family")->required();
    generate->add_option("--params", params, "family parameters as JSON");
    generate->add_option("--seed", seed, "random seed");
    generate->add_option("--count", count, "number of graphs for random families")->check(CLI::NonNegativeNumber);
    generate->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (*analyze) {
            const auto graphs = read_graph_file(analyze_file);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const std::string id = std::filesystem::path(analyze_file).filename().string() + ":" + std::to_string(i + 1);
                auto j = analyze_graph(graphs[i], analyze_k);
                if (analyze_json) {
                    j["graph_id"] = id;
                    std::cout << j.dump() << '\n';
                } else {
                    print_text(std::cout, id, j);
                }
            }
            return kExitClean;
        }

        if (*verify) {
            CampaignOptions options;
            for (const auto& c : claims) {
                if (c == "all") {
                    options.claims = all_claims();
                } else {
                    options.claims.push_back(parse_claim(c));
                }
            }
            options.force_exhaustive = exhaustive;
            if (timeout > 0) options.timeout_seconds = timeout;
            if (verify_k > 0) options.k = verify_k;
            options.include_timing = timing;
            const auto summary = run_campaign(load_corpus_file(corpus_path), options, std::filesystem::path(out_path));
            std::cerr << summary.to_json().dump() << '\n';
            return summary.falsified > 0 ? kExitFalsified : kExitClean;
        }

        if (*search) {
            const auto corpus = load_corpus_file(search_corpus);
            SearchSummary summary;
            if (search_out.empty()) {
                summary = search_contraction_critical_quasi5(corpus, search_exhaustive, std::cout);
            } else {
                std::ofstream out(search_out, std::ios::binary | std::ios::trunc);
                if (!out) throw std::runtime_error("cannot open " + search_out + " for writing");
                summary = search_contraction_critical_quasi5(corpus, search_exhaustive, out);
            }
            std::cerr << json{{"graphs", summary.graphs}, {"quasi_5_connected", summary.quasi_5_connected}, {"hits", summary.hits}}.dump()
                      << '\n';
            return kExitClean;
        }

        if (*generate) {
            CorpusSpec spec;
            spec.family = parse_family(family);
            spec.params = json::parse(params);
            spec.seed = seed;
            spec.count = count;
            const auto entries = generate_corpus(spec);
            std::filesystem::create_directories(out_dir);
            const auto file = std::filesystem::path(out_dir) / (family + ".g6");
            std::ofstream out(file, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
            for (const auto& entry : entries) out << to_graph6(entry.graph) << '\n';
            if (!out) throw std::runtime_error("failed writing " + file.string());
            std::cout << file.string() << '\n';
            return kExitClean;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitClean;
}
