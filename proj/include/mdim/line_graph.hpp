#ifndef MDIM_LINE_GRAPH_HPP
#define MDIM_LINE_GRAPH_HPP

#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

/// Line digraph L(g) together with the edge <-> vertex bijection.
///
/// Line-graph vertex ids equal original edge ids, so `to_line` is the
/// identity; both directions are stored anyway so callers never depend on
/// that choice.
struct DirectedLineGraph {
    DiGraph line;
    std::vector<EdgeId> to_line;   // original edge id -> line vertex id
    std::vector<EdgeId> from_line; // line vertex id -> original edge id
    /// line vertex id -> (head, tail) of the original edge.
    std::vector<std::pair<VertexId, VertexId>> source_edge;
};

/// Line graph of an undirected graph, same bijection bookkeeping.
struct UndirectedLineGraph {
    Graph line;
    std::vector<EdgeId> to_line;
    std::vector<EdgeId> from_line;
    /// line vertex id -> {u, v} of the original edge, as stored.
    std::vector<std::pair<VertexId, VertexId>> source_edge;
};

/// L(g) for a digraph: vertices are the edges of g, and (a, b) is an edge
/// of L(g) iff the tail of a is the head of b. A loop of g becomes a loop
/// of L(g). |E(L)| = sum over x of in_degree(x) * out_degree(x).
inline DirectedLineGraph directed_line_graph(const DiGraph& g) {
    const int m = g.edge_count();
    if (m == 0) throw invalid_graph_error("line digraph needs at least one edge");
    std::vector<std::pair<VertexId, VertexId>> line_edges;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (EdgeId a : g.in_edges(x))
            for (EdgeId b : g.out_edges(x)) line_edges.emplace_back(a, b);
    }
    bool loops = g.loop_count() > 0;
    DirectedLineGraph result{DiGraph(m, std::move(line_edges), loops), {}, {}, {}};
    result.to_line.resize(m);
    result.from_line.resize(m);
    result.source_edge.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        result.to_line[e] = e;
        result.from_line[e] = e;
        result.source_edge[e] = g.edge(e);
    }
    return result;
}

/// L(g) for an undirected graph: vertices are the edges of g, adjacent in
/// L(g) iff they share an endpoint. |E(L)| = sum over v of C(deg(v), 2).
inline UndirectedLineGraph undirected_line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m < 2) throw invalid_graph_error("line graph needs at least two edges");
    std::vector<std::pair<VertexId, VertexId>> line_edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        // Two simple edges share at most one endpoint, so each adjacent
        // pair is generated at exactly one vertex.
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) line_edges.emplace_back(inc[i], inc[j]);
    }
    UndirectedLineGraph result{Graph(m, std::move(line_edges)), {}, {}, {}};
    result.to_line.resize(m);
    result.from_line.resize(m);
    result.source_edge.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        result.to_line[e] = e;
        result.from_line[e] = e;
        result.source_edge[e] = g.edge(e);
    }
    return result;
}

struct DistanceIdentityViolation {
    EdgeId a;
    EdgeId b;
    int line_distance; // d_{L(g)}(a, b)
    int expected;      // d_g(tail(a), head(b)) + 1
};

/// For every ordered pair of distinct line vertices a, b, the line-digraph
/// distance must equal d_g(tail(a), head(b)) + 1. Returns all violations
/// (empty on success). Requires g strongly connected so both sides are
/// finite.
inline std::vector<DistanceIdentityViolation> check_distance_identity(
    const DiGraph& g, const DirectedLineGraph& lgm) {
    if (!is_strongly_connected(g))
        throw disconnected_error("distance identity requires a strongly connected digraph");
    const auto dg = all_pairs_distances(g);
    const auto dl = all_pairs_distances(lgm.line);
    std::vector<DistanceIdentityViolation> violations;
    const int m = lgm.line.vertex_count();
    for (EdgeId a = 0; a < m; ++a) {
        for (EdgeId b = 0; b < m; ++b) {
            if (a == b) continue;
            int lhs = dl(a, b);
            int rhs = dg(lgm.source_edge[a].second, lgm.source_edge[b].first) + 1;
            if (lhs != rhs) violations.push_back({a, b, lhs, rhs});
        }
    }
    return violations;
}

} // namespace mdim

#endif // MDIM_LINE_GRAPH_HPP
