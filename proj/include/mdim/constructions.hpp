#ifndef MDIM_CONSTRUCTIONS_HPP
#define MDIM_CONSTRUCTIONS_HPP

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/line_graph.hpp"
#include "mdim/metric.hpp"

namespace mdim {

/// Resolving set of L(g) for a strongly connected non-cycle digraph g,
/// built by deleting one in-coming edge of every vertex (the one with the
/// smallest edge id). The result has exactly |E(g)| - |V(g)| landmarks,
/// given as line-graph vertex ids, and is verified before being returned.
inline std::vector<EdgeId> digraph_line_resolving_set(const DiGraph& g) {
    if (!is_strongly_connected(g))
        throw disconnected_error("digraph is not strongly connected");
    if (is_directed_cycle(g))
        throw unsupported_error(
            "directed cycle: its line digraph has metric dimension 1, no deletion set applies");

    std::vector<bool> deleted(g.edge_count(), false);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        // in_edges is ascending by edge id; strong connectivity makes it
        // nonempty.
        deleted[g.in_edges(x).front()] = true;
    }
    std::vector<EdgeId> landmarks;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!deleted[e]) landmarks.push_back(e);

    auto lgm = directed_line_graph(g);
    if (!is_resolving_set(lgm.line, landmarks).resolving)
        throw std::logic_error("in-edge deletion set failed to resolve the line digraph");
    return landmarks;
}

/// ceil(log2(max_degree)): every resolving set of L(g) needs at least this
/// many landmarks. Defined for connected graphs on five or more vertices.
inline int log2_degree_lower_bound(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("graph is not connected");
    if (g.vertex_count() < 5)
        throw unsupported_error("degree lower bound is not applicable below five vertices");
    int delta = g.max_degree();
    return delta <= 1 ? 0 : std::bit_width(static_cast<unsigned>(delta - 1));
}

struct LineGraphBounds {
    int lower_log;   // ceil(log2(max_degree))
    int upper;       // |V| - 2
    bool applicable; // |V| >= 5
};

inline LineGraphBounds line_graph_mu_bounds(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("graph is not connected");
    int delta = g.max_degree();
    int lower = delta <= 1 ? 0 : std::bit_width(static_cast<unsigned>(delta - 1));
    return {lower, g.vertex_count() - 2, g.vertex_count() >= 5};
}

namespace detail {

struct BfsTree {
    std::vector<EdgeId> edges;               // the n-1 tree edges of g
    std::vector<std::vector<EdgeId>> at;     // tree edges incident to each vertex
};

inline BfsTree bfs_spanning_tree(const Graph& g) {
    const int n = g.vertex_count();
    BfsTree tree;
    tree.at.resize(n);
    std::vector<bool> seen(n, false);
    std::queue<VertexId> queue;
    seen[0] = true;
    queue.push(0);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop();
        const auto& inc = g.incident_edges(u);
        for (EdgeId e : inc) {
            VertexId v = g.other_end(e, u);
            if (!seen[v]) {
                seen[v] = true;
                tree.edges.push_back(e);
                tree.at[u].push_back(e);
                tree.at[v].push_back(e);
                queue.push(v);
            }
        }
    }
    return tree;
}

} // namespace detail

/// Resolving set of L(g) of size |V(g)| - 2 for connected g on six or more
/// vertices: the edges of a BFS spanning tree minus the pendant tree edge
/// at the smallest-id tree leaf. For exactly five vertices the exhaustive
/// solver stands in, with the |V|-2 bound checked. Verified before return.
inline std::vector<EdgeId> spanning_tree_resolving_set(const Graph& g,
                                                       const SolverOptions& options = {}) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw disconnected_error("graph is not connected");
    if (n < 5) throw unsupported_error("spanning-tree landmarks need at least five vertices");

    if (n == 5) {
        auto lgm = undirected_line_graph(g);
        auto cert = exact_metric_dimension(lgm.line, options);
        if (static_cast<int>(cert.landmarks.size()) > n - 2)
            throw std::logic_error("five-vertex case exceeded the |V|-2 bound");
        return cert.landmarks;
    }

    auto tree = detail::bfs_spanning_tree(g);
    VertexId leaf = -1;
    for (VertexId v = 0; v < n; ++v)
        if (tree.at[v].size() == 1) {
            leaf = v;
            break;
        }
    EdgeId drop = tree.at[leaf].front();
    std::vector<EdgeId> landmarks;
    for (EdgeId e : tree.edges)
        if (e != drop) landmarks.push_back(e);
    std::sort(landmarks.begin(), landmarks.end());

    auto lgm = undirected_line_graph(g);
    if (!is_resolving_set(lgm.line, landmarks).resolving)
        throw std::logic_error("spanning-tree edge set failed to resolve the line graph");
    return landmarks;
}

/// End-vertex / major-vertex decomposition of a tree that is not a path.
///
/// An end-vertex u is a terminal vertex of a major vertex v when u is
/// strictly closer to v than to every other major vertex; v is exterior
/// when it owns at least one terminal vertex.
struct TreeProfile {
    std::vector<VertexId> end_vertices;    // degree 1
    std::vector<VertexId> major_vertices;  // degree >= 3
    std::vector<VertexId> exterior_major;  // EX(T)
    std::map<VertexId, std::vector<VertexId>> terminal_map; // v in EX(T) -> TER(v)
    int sigma; // sum of |TER(v)| over EX(T)
    int ex;    // |EX(T)|
};

inline TreeProfile tree_profile(const Graph& t) {
    auto pred = structural_predicates(t);
    if (!pred.is_tree) throw unsupported_error("input is not a tree");
    if (pred.is_path) throw unsupported_error("tree decomposition is undefined for paths");

    TreeProfile profile{};
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (t.degree(v) == 1) profile.end_vertices.push_back(v);
        if (t.degree(v) >= 3) profile.major_vertices.push_back(v);
    }

    auto dm = all_pairs_distances(t);
    for (VertexId u : profile.end_vertices) {
        VertexId nearest = -1;
        int best = kUnreachable;
        bool tie = false;
        for (VertexId v : profile.major_vertices) {
            int d = dm(u, v);
            if (nearest == -1 || d < best) {
                nearest = v;
                best = d;
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        // Strictly-nearest wins; a tie leaves the end-vertex unassigned
        // (cannot happen in a tree, where all majors see u through the
        // same branch vertex).
        if (!tie) profile.terminal_map[nearest].push_back(u);
    }

    for (auto& [v, ter] : profile.terminal_map) {
        profile.exterior_major.push_back(v);
        profile.sigma += static_cast<int>(ter.size());
    }
    profile.ex = static_cast<int>(profile.exterior_major.size());
    return profile;
}

/// Metric dimension of a tree that is not a path: sigma(T) - ex(T).
inline int tree_metric_dimension(const Graph& t) {
    auto profile = tree_profile(t);
    return profile.sigma - profile.ex;
}

struct TreeLineResult {
    int mu;                       // sigma(T) - ex(T)
    std::vector<EdgeId> landmarks; // pendant edges, as line-graph vertex ids
};

/// Metric dimension of L(T) with a witnessing landmark set: take every
/// end-vertex except one terminal vertex of each exterior major vertex
/// (smallest id dropped), and use the pendant edge at each remaining
/// end-vertex. Verified resolving before return.
inline TreeLineResult tree_line_metric_dimension(const Graph& t) {
    auto profile = tree_profile(t);

    std::vector<bool> dropped(t.vertex_count(), false);
    for (const auto& [v, ter] : profile.terminal_map)
        dropped[*std::min_element(ter.begin(), ter.end())] = true;

    std::vector<EdgeId> landmarks;
    for (VertexId u : profile.end_vertices) {
        if (dropped[u]) continue;
        landmarks.push_back(t.incident_edges(u).front()); // unique pendant edge
    }
    std::sort(landmarks.begin(), landmarks.end());

    int mu = profile.sigma - profile.ex;
    if (static_cast<int>(landmarks.size()) != mu)
        throw std::logic_error("pendant landmark count disagrees with sigma - ex");

    auto lgm = undirected_line_graph(t);
    if (!is_resolving_set(lgm.line, landmarks).resolving)
        throw std::logic_error("pendant-edge set failed to resolve the line graph of the tree");
    return {mu, std::move(landmarks)};
}

enum class LineMuFamily { complete, complete_bipartite, star, path, directed_cycle };

/// Published closed-form values of mu(L(G)) for specific families; used as
/// oracle expectations, never inside the solvers. Parameters outside the
/// cited ranges are refused rather than extrapolated.
///
///   complete n (n >= 6):            ceil(2n/3)
///   complete_bipartite m,n (n >= 2): floor(2(m+n-1)/3) if n <= 2m-1, else n-1
///   star n (n >= 2):                n - 1
///   path n (n >= 2):                1
///   directed_cycle n (n >= 2):      1
inline int known_line_mu(LineMuFamily family, int a, int b = 0) {
    switch (family) {
        case LineMuFamily::complete: {
            if (a < 6) throw unsupported_error("complete-graph value is cited only for n >= 6");
            return (2 * a + 2) / 3; // ceil(2n/3)
        }
        case LineMuFamily::complete_bipartite: {
            int m = std::min(a, b), n = std::max(a, b);
            if (m < 1 || n < 2)
                throw unsupported_error("complete-bipartite value needs m >= 1 and n >= 2");
            if (n <= 2 * m - 1) return (2 * (m + n - 1)) / 3;
            return n - 1;
        }
        case LineMuFamily::star: {
            if (a < 2) throw unsupported_error("star value needs n >= 2 leaves");
            return a - 1;
        }
        case LineMuFamily::path: {
            if (a < 2) throw unsupported_error("path needs at least two vertices");
            return 1;
        }
        case LineMuFamily::directed_cycle: {
            if (a < 2) throw unsupported_error("directed cycle needs at least two vertices");
            return 1;
        }
    }
    throw unsupported_error("unknown family");
}

} // namespace mdim

#endif // MDIM_CONSTRUCTIONS_HPP
