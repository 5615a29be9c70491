#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasik/graph.hpp"

namespace quasik {

class CorpusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    complete,
    complete_bipartite,
    circulant,
    icosahedron,
    random_5_connected,
    random_quasi_5_connected,
    graph6_file,
    edge_list_file,
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// One generator invocation.
///
/// Parameters by family (n may be a number or a list of numbers):
///   complete                  {"n"}
///   complete_bipartite        {"a", "b"}
///   circulant                 {"n", "jumps": [...]}
///   icosahedron               {}
///   random_5_connected        {"n"}                 count graphs, cycling through n
///   random_quasi_5_connected  {"n", "max_light": 2, "degree_sum": true}
///   graph6_file               {"path", "limit"?}
///   edge_list_file            {"path"}
/// Relative paths resolve against base_dir.
struct CorpusSpec {
    Family family = Family::complete;
    nlohmann::json params = nlohmann::json::object();
    int count = 1;
    std::uint64_t seed = 0;
    std::filesystem::path base_dir;
};

/// Accepts a single spec object, an array of them, or {"corpus": [...]}.
std::vector<CorpusSpec> corpus_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
std::vector<CorpusSpec> load_corpus_file(const std::filesystem::path& path);
nlohmann::json corpus_spec_to_json(const CorpusSpec& spec);

struct CorpusEntry {
    std::string id;
    Graph graph;
};

/// Deterministic for a fixed spec. Every generated graph is re-checked against
/// its family's defining property; CorpusError on unsatisfiable specs.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph circulant_graph(int n, const std::vector<int>& jumps);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph icosahedron();
Graph petersen_graph();

/// Random graph with kappa >= 5: a near 5-regular pairing, then edges across
/// minimum cuts until 5-connected.
Graph random_5_connected(int n, std::uint64_t seed);

/// Random quasi 5-connected graph with minimum degree 4 and at most max_light
/// vertices of degree four; with degree_sum, also d(x)+d(y) >= 9 for every
/// pair at distance one or two. Throws CorpusError after too many rejections.
Graph random_quasi_5_connected(int n, int max_light, bool degree_sum, std::uint64_t seed);

/// splitmix64 step, used to derive per-graph seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace quasik
