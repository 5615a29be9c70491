#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasik/graph.hpp"

namespace quasik {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 string (no trailing newline). An optional ">>graph6<<"
/// header is accepted. Nonzero padding bits are rejected so that
/// to_graph6(from_graph6(s)) == s for every accepted s.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

/// "u v" per line, '#' starts a comment. A "# vertices: N" comment fixes the
/// order, otherwise it is one more than the largest id seen.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// {"n": N, "adjacency": [[...], ...], "labels": [...]}; labels optional.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

enum class GraphFileFormat { graph6, edge_list, json };

GraphFileFormat detect_format(const std::filesystem::path& path);

/// Reads every graph in a file. Throws ParseError or std::runtime_error on IO failure.
std::vector<Graph> read_graph_file(const std::filesystem::path& path);

}  // namespace quasik
