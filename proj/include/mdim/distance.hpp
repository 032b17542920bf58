#ifndef MDIM_DISTANCE_HPP
#define MDIM_DISTANCE_HPP

#include <queue>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Sentinel for "no path". Kept distinct from every finite length so that
/// distance-vector equality stays exact integer equality.
inline constexpr int kUnreachable = -1;

inline bool reachable(int d) { return d != kUnreachable; }

/// Dense n x n matrix of unweighted shortest-path lengths.
class DistanceMatrix {
public:
    DistanceMatrix(int n, bool directed)
        : n_(n), directed_(directed), data_(static_cast<size_t>(n) * n, kUnreachable) {}

    int size() const { return n_; }
    bool directed() const { return directed_; }

    int operator()(VertexId u, VertexId v) const { return data_[static_cast<size_t>(u) * n_ + v]; }
    int& at(VertexId u, VertexId v) { return data_[static_cast<size_t>(u) * n_ + v]; }

    /// Row of distances from u, in vertex-id order.
    const int* row(VertexId u) const { return data_.data() + static_cast<size_t>(u) * n_; }

    bool all_reachable() const {
        for (int d : data_)
            if (!mdim::reachable(d)) return false;
        return true;
    }

private:
    int n_;
    bool directed_;
    std::vector<int> data_;
};

namespace detail {

template <typename NeighborFn>
std::vector<int> bfs_row(int n, VertexId source, NeighborFn&& neighbors_of) {
    if (source < 0 || source >= n)
        throw error("bfs source out of range: " + std::to_string(source));
    std::vector<int> dist(n, kUnreachable);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop();
        for (VertexId v : neighbors_of(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

} // namespace detail

/// Distances from `source` to every vertex; kUnreachable where no path.
inline std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    return detail::bfs_row(g.vertex_count(), source,
                           [&](VertexId u) -> const std::vector<VertexId>& { return g.neighbors(u); });
}

inline std::vector<int> bfs_distances(const DiGraph& g, VertexId source) {
    return detail::bfs_row(g.vertex_count(), source, [&](VertexId u) {
        std::vector<VertexId> next;
        next.reserve(g.out_edges(u).size());
        for (EdgeId e : g.out_edges(u)) next.push_back(g.tail(e));
        return next;
    });
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm(g.vertex_count(), false);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto row = bfs_distances(g, u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) dm.at(u, v) = row[v];
    }
    return dm;
}

inline DistanceMatrix all_pairs_distances(const DiGraph& g) {
    DistanceMatrix dm(g.vertex_count(), true);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto row = bfs_distances(g, u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) dm.at(u, v) = row[v];
    }
    return dm;
}

/// True iff every ordered vertex pair is joined by a directed path.
/// One forward and one reverse BFS from vertex 0.
inline bool is_strongly_connected(const DiGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    auto fwd = bfs_distances(g, 0);
    for (int d : fwd)
        if (!reachable(d)) return false;
    auto bwd = detail::bfs_row(n, 0, [&](VertexId u) {
        std::vector<VertexId> next;
        next.reserve(g.in_edges(u).size());
        for (EdgeId e : g.in_edges(u)) next.push_back(g.head(e));
        return next;
    });
    for (int d : bwd)
        if (!reachable(d)) return false;
    return true;
}

/// True iff g is a single directed cycle: strongly connected with every
/// in-degree and out-degree equal to 1.
inline bool is_directed_cycle(const DiGraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) != 1 || g.out_degree(v) != 1) return false;
    return is_strongly_connected(g);
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto row = bfs_distances(g, 0);
    for (int d : row)
        if (!reachable(d)) return false;
    return true;
}

struct StructuralPredicates {
    bool is_connected;
    bool is_tree;
    bool is_path;
    int max_degree;
};

inline StructuralPredicates structural_predicates(const Graph& g) {
    StructuralPredicates p{};
    p.is_connected = is_connected(g);
    p.is_tree = p.is_connected && g.edge_count() == g.vertex_count() - 1;
    p.max_degree = g.max_degree();
    p.is_path = p.is_tree && p.max_degree <= 2;
    return p;
}

} // namespace mdim

#endif // MDIM_DISTANCE_HPP
