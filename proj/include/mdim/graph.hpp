#ifndef MDIM_GRAPH_HPP
#define MDIM_GRAPH_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"

namespace mdim {

using VertexId = int;
using EdgeId = int;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges keep stable ids 0..m-1 in construction order; endpoints are stored
/// as given (useful for label-preserving output) but deduplicated as
/// unordered pairs. Self-loops and parallel edges are rejected.
class Graph {
public:
    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edges)
        : n_(n), edges_(std::move(edges)), incident_(n < 0 ? 0 : n) {
        if (n < 0) throw invalid_graph_error("vertex count must be non-negative");
        std::set<std::pair<VertexId, VertexId>> seen;
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw invalid_graph_error("edge endpoint out of range: (" +
                                          std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw invalid_graph_error("self-loop not allowed in undirected graph: " +
                                          std::to_string(u));
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw invalid_graph_error("parallel edge: (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
            incident_[u].push_back(e);
            incident_[v].push_back(e);
        }
        // Canonical neighbor order: ascending vertex id.
        neighbors_.resize(n_);
        for (VertexId v = 0; v < n_; ++v) {
            std::sort(incident_[v].begin(), incident_[v].end(),
                      [&](EdgeId a, EdgeId b) { return other_end(a, v) < other_end(b, v); });
            neighbors_[v].reserve(incident_[v].size());
            for (EdgeId e : incident_[v]) neighbors_[v].push_back(other_end(e, v));
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
    /// Edge ids incident to v, ordered like neighbors(v).
    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[v]; }
    int degree(VertexId v) const { return static_cast<int>(neighbors_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    VertexId other_end(EdgeId e, VertexId v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

private:
    int n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<std::vector<VertexId>> neighbors_;
};

/// Immutable simple digraph on vertices 0..n-1 with stable edge ids.
///
/// An edge (head, tail) points head -> tail: it is an out-going edge of its
/// head and an in-coming edge of its tail. Self-loops are permitted only
/// when `allow_loops` is set; parallel edges are always rejected.
class DiGraph {
public:
    DiGraph(int n, std::vector<std::pair<VertexId, VertexId>> edges, bool allow_loops = false)
        : n_(n), allows_loops_(allow_loops), edges_(std::move(edges)) {
        if (n < 0) throw invalid_graph_error("vertex count must be non-negative");
        out_.resize(n_);
        in_.resize(n_);
        std::set<std::pair<VertexId, VertexId>> seen;
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
            auto [head, tail] = edges_[e];
            if (head < 0 || head >= n_ || tail < 0 || tail >= n_)
                throw invalid_graph_error("edge endpoint out of range: (" +
                                          std::to_string(head) + "," + std::to_string(tail) + ")");
            if (head == tail) {
                if (!allows_loops_)
                    throw invalid_graph_error("self-loop not allowed: " + std::to_string(head));
                ++loop_count_;
            }
            if (!seen.insert({head, tail}).second)
                throw invalid_graph_error("parallel edge: (" + std::to_string(head) + "," +
                                          std::to_string(tail) + ")");
            out_[head].push_back(e);
            in_[tail].push_back(e);
        }
        // Adjacency lists stay in ascending edge-id order (push order).
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool allows_loops() const { return allows_loops_; }
    int loop_count() const { return loop_count_; }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    VertexId head(EdgeId e) const { return edges_[e].first; }
    VertexId tail(EdgeId e) const { return edges_[e].second; }

    /// Out-going edges of x (edges whose head is x), ascending edge id.
    const std::vector<EdgeId>& out_edges(VertexId x) const { return out_[x]; }
    /// In-coming edges of x (edges whose tail is x), ascending edge id.
    const std::vector<EdgeId>& in_edges(VertexId x) const { return in_[x]; }

    int out_degree(VertexId x) const { return static_cast<int>(out_[x].size()); }
    int in_degree(VertexId x) const { return static_cast<int>(in_[x].size()); }

private:
    int n_;
    bool allows_loops_;
    int loop_count_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

} // namespace mdim

#endif // MDIM_GRAPH_HPP
