#ifndef MDIM_IO_HPP
#define MDIM_IO_HPP

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Result of reading an edge-list file.
///
/// Format: a header line "graph" or "digraph" (a digraph header may carry a
/// "loops" token), then one edge per line as two whitespace-separated
/// vertex labels. Lines whose first non-blank character is '#' are
/// comments. Labels are arbitrary strings, mapped to dense ids in
/// first-appearance order. Exactly one of `graph` / `digraph` is set.
struct ParsedGraph {
    bool directed = false;
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::optional<Graph> graph;
    std::optional<DiGraph> digraph;

    VertexId id_of(const std::string& label) const {
        auto it = ids.find(label);
        if (it == ids.end()) throw unsupported_error("unknown vertex label: " + label);
        return it->second;
    }

    int vertex_count() const { return directed ? digraph->vertex_count() : graph->vertex_count(); }
    int edge_count() const { return directed ? digraph->edge_count() : graph->edge_count(); }
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

} // namespace detail

inline ParsedGraph parse_graph_file(std::istream& in) {
    ParsedGraph parsed;
    bool have_header = false;
    bool allow_loops = false;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;

    auto intern = [&](const std::string& label) {
        auto it = parsed.ids.find(label);
        if (it != parsed.ids.end()) return it->second;
        VertexId id = static_cast<VertexId>(parsed.labels.size());
        parsed.labels.push_back(label);
        parsed.ids.emplace(label, id);
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        if (!have_header) {
            if (tokens[0] == "graph")
                parsed.directed = false;
            else if (tokens[0] == "digraph")
                parsed.directed = true;
            else
                throw parse_error("expected header 'graph' or 'digraph', got '" + tokens[0] + "'",
                                  line_no);
            if (tokens.size() == 2 && tokens[1] == "loops") {
                if (!parsed.directed)
                    throw parse_error("loops are not supported on undirected graphs", line_no);
                allow_loops = true;
            } else if (tokens.size() > 1) {
                throw parse_error("unexpected token after header: '" + tokens[1] + "'", line_no);
            }
            have_header = true;
            continue;
        }

        if (tokens.size() != 2)
            throw parse_error("expected two vertex labels, got " + std::to_string(tokens.size()),
                              line_no);
        VertexId u = intern(tokens[0]);
        VertexId v = intern(tokens[1]);
        if (u == v && !(parsed.directed && allow_loops))
            throw parse_error("self-loop '" + tokens[0] + " " + tokens[1] + "'", line_no);
        std::pair<VertexId, VertexId> key =
            parsed.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw parse_error("duplicate edge '" + tokens[0] + " " + tokens[1] + "'", line_no);
        edges.emplace_back(u, v);
    }

    if (!have_header) throw parse_error("missing 'graph' or 'digraph' header");
    if (edges.empty()) throw parse_error("no edges");

    int n = static_cast<int>(parsed.labels.size());
    try {
        if (parsed.directed)
            parsed.digraph.emplace(n, std::move(edges), allow_loops);
        else
            parsed.graph.emplace(n, std::move(edges));
    } catch (const invalid_graph_error& e) {
        throw parse_error(e.what());
    }
    return parsed;
}

inline ParsedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return parse_graph_file(in);
}

/// Canonical edge-list serialization: header, then edges in id order.
/// Byte-deterministic for a fixed graph and labeling.
inline void write_edge_list(std::ostream& out, const DiGraph& g,
                            const std::vector<std::string>& labels) {
    out << "digraph" << (g.loop_count() > 0 ? " loops" : "") << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << labels[g.head(e)] << " " << labels[g.tail(e)] << "\n";
}

/// Display label of an original edge used as a line-graph landmark:
/// "u→v" for digraphs, "u—v" for graphs.
inline std::string edge_label(const std::vector<std::string>& labels, VertexId a, VertexId b,
                              bool directed) {
    return labels[a] + (directed ? "→" : "—") + labels[b];
}

/// Splits an edge token like "a->b" / "a→b" (directed) or "a-b" / "a—b"
/// (undirected) at the first separator occurrence.
inline std::pair<std::string, std::string> split_edge_token(const std::string& token,
                                                            bool directed) {
    const std::vector<std::string> seps =
        directed ? std::vector<std::string>{"→", "->"} : std::vector<std::string>{"—", "-"};
    for (const auto& sep : seps) {
        auto pos = token.find(sep);
        if (pos != std::string::npos)
            return {token.substr(0, pos), token.substr(pos + sep.size())};
    }
    throw unsupported_error("cannot split edge token '" + token + "'; expected '" +
                            (directed ? "u->v" : "u-v") + "'");
}

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

} // namespace mdim

#endif // MDIM_IO_HPP
