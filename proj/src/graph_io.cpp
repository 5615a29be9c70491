#include "quasik/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace quasik {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

int decode_char(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) {
        throw ParseError(std::string("graph6: byte out of range: 0x") +
                         std::to_string(static_cast<unsigned char>(c)));
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6 input is not supported");
    if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported");

    std::size_t pos = 0;
    long long n = 0;
    auto take = [&](int count) {
        long long value = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size()) throw ParseError("graph6: truncated order field");
            value = (value << 6) | decode_char(text[pos++]);
        }
        return value;
    };
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > 100000) throw ParseError("graph6: order too large");

    const auto order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                         std::to_string(text.size() - pos));
    }

    Graph g(order);
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = decode_char(text[pos + bit / 6]);
            if (chunk & (1 << (5 - bit % 6))) g.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        const int chunk = decode_char(text[pos + bit / 6]);
        if (chunk & ((1 << (6 - bit % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        const auto& nj = g.neighbors(j);
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (std::binary_search(nj.begin(), nj.end(), i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int declared = -1;
    int max_id = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            auto comment = trim(view.substr(hash + 1));
            if (comment.starts_with("vertices:")) {
                comment = trim(comment.substr(9));
                auto [p, ec] = std::from_chars(comment.data(), comment.data() + comment.size(), declared);
                if (ec != std::errc{} || declared < 0) throw ParseError("edge list: bad vertex count on line " + std::to_string(lineno));
            }
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;
        std::istringstream fields{std::string(view)};
        long long a = 0;
        long long b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0 || a > 1000000 || b > 1000000) {
            throw ParseError("edge list: malformed line " + std::to_string(lineno) + ": '" + line + "'");
        }
        if (a == b) throw ParseError("edge list: self-loop on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        max_id = std::max<int>(max_id, static_cast<int>(std::max(a, b)));
    }
    const int n = declared >= 0 ? declared : max_id + 1;
    if (max_id >= n) throw ParseError("edge list: vertex id exceeds declared vertex count");
    return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# vertices: " << g.order() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const auto& adjacency = j.at("adjacency");
        const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(adjacency.size());
        if (n < 0 || static_cast<std::size_t>(n) != adjacency.size()) {
            throw ParseError("adjacency JSON: 'n' does not match adjacency length");
        }
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            for (const auto& w : adjacency[v]) {
                const int u = w.get<int>();
                if (u < 0 || u >= n) throw ParseError("adjacency JSON: neighbour out of range");
                if (u == v) throw ParseError("adjacency JSON: self-loop");
                g.add_edge(v, u);
            }
        }
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) {
                const auto& back = adjacency[u];
                if (std::find(back.begin(), back.end(), nlohmann::json(v)) == back.end()) {
                    throw ParseError("adjacency JSON: asymmetric adjacency between " + std::to_string(v) +
                                     " and " + std::to_string(u));
                }
            }
        }
        if (j.contains("labels")) {
            const auto& labels = j.at("labels");
            if (labels.size() != static_cast<std::size_t>(n)) throw ParseError("adjacency JSON: label count mismatch");
            for (int v = 0; v < n; ++v) g.set_label(v, labels[v].get<std::string>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("adjacency JSON: ") + e.what());
    }
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json adjacency = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    bool default_labels = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        adjacency.push_back(g.neighbors(v));
        labels.push_back(g.label(v));
        default_labels = default_labels && g.label(v) == std::to_string(v);
    }
    nlohmann::json j{{"n", g.order()}, {"adjacency", std::move(adjacency)}};
    if (!default_labels) j["labels"] = std::move(labels);
    return j;
}

GraphFileFormat detect_format(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".g6" || ext == ".graph6") return GraphFileFormat::graph6;
    if (ext == ".json") return GraphFileFormat::json;
    if (ext == ".txt" || ext == ".edges" || ext == ".el") return GraphFileFormat::edge_list;

    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '{' || t.front() == '[') return GraphFileFormat::json;
        if (t.starts_with(kGraph6Header)) return GraphFileFormat::graph6;
        if (t.front() == '#' || std::isdigit(static_cast<unsigned char>(t.front())) != 0) {
            // graph6 bytes start at '?', so a leading digit can only be an edge list.
            return GraphFileFormat::edge_list;
        }
        return GraphFileFormat::graph6;
    }
    return GraphFileFormat::edge_list;
}

std::vector<Graph> read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    switch (detect_format(path)) {
        case GraphFileFormat::graph6: return read_graph6_stream(in);
        case GraphFileFormat::edge_list: return {read_edge_list(in)};
        case GraphFileFormat::json: {
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(path.string() + ": " + e.what());
            }
            std::vector<Graph> graphs;
            if (j.is_array()) {
                for (const auto& item : j) graphs.push_back(graph_from_json(item));
            } else {
                graphs.push_back(graph_from_json(j));
            }
            return graphs;
        }
    }
    return {};
}

}  // namespace quasik
