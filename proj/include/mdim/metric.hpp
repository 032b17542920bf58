#ifndef MDIM_METRIC_HPP
#define MDIM_METRIC_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

/// D(u|W): distances from u to each landmark, in landmark order.
inline std::vector<int> distance_vector(const DistanceMatrix& dm, VertexId u,
                                        const std::vector<VertexId>& landmarks) {
    std::vector<int> vec;
    vec.reserve(landmarks.size());
    for (VertexId w : landmarks) {
        int d = dm(u, w);
        if (!reachable(d))
            throw disconnected_error("no path from " + std::to_string(u) + " to landmark " +
                                     std::to_string(w));
        vec.push_back(d);
    }
    return vec;
}

struct ResolveCheck {
    bool resolving;
    /// On failure: the lexicographically smallest pair (u, v), u < v, with
    /// D(u|W) = D(v|W).
    std::optional<std::pair<VertexId, VertexId>> witness;
};

/// A landmark set W plus the full map u -> D(u|W); the proof object that W
/// resolves the graph it was computed from.
struct ResolvingCertificate {
    std::vector<VertexId> landmarks;
    std::vector<std::vector<int>> vectors; // indexed by vertex id
    std::optional<int> mu_claimed;
};

/// Partition of V into twin blocks: u, v share a block iff their distance
/// rows agree everywhere off {u, v} and d(u,v) = d(v,u). Every resolving
/// set must contain all but at most one vertex of each block.
struct TwinPartition {
    std::vector<std::vector<VertexId>> blocks;

    int lower_bound() const {
        int bound = 0;
        for (const auto& block : blocks) bound += static_cast<int>(block.size()) - 1;
        return bound;
    }
};

namespace detail {

inline bool twin_related(const DistanceMatrix& dm, VertexId u, VertexId v) {
    if (dm(u, v) != dm(v, u)) return false;
    const int n = dm.size();
    for (VertexId x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        if (dm(u, x) != dm(v, x)) return false;
    }
    return true;
}

inline void require_all_reachable(const DistanceMatrix& dm) {
    if (!dm.all_reachable())
        throw disconnected_error(dm.directed() ? "digraph is not strongly connected"
                                               : "graph is not connected");
}

} // namespace detail

inline TwinPartition twin_classes(const DistanceMatrix& dm) {
    detail::require_all_reachable(dm);
    const int n = dm.size();
    std::vector<bool> assigned(n, false);
    TwinPartition partition;
    for (VertexId u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<VertexId> block{u};
        assigned[u] = true;
        for (VertexId v = u + 1; v < n; ++v) {
            if (assigned[v]) continue;
            // Keep blocks pairwise related so the all-but-one lower bound
            // is sound even if the relation fails transitivity somewhere.
            bool ok = true;
            for (VertexId b : block)
                if (!detail::twin_related(dm, b, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                block.push_back(v);
                assigned[v] = true;
            }
        }
        partition.blocks.push_back(std::move(block));
    }
    return partition;
}

inline TwinPartition twin_classes(const Graph& g) { return twin_classes(all_pairs_distances(g)); }
inline TwinPartition twin_classes(const DiGraph& g) { return twin_classes(all_pairs_distances(g)); }

/// True iff all |V| vectors D(u|W) are pairwise distinct; witness on failure.
inline ResolveCheck is_resolving_set(const DistanceMatrix& dm,
                                     const std::vector<VertexId>& landmarks) {
    detail::require_all_reachable(dm);
    if (landmarks.empty()) throw unsupported_error("landmark set must be nonempty");
    const int n = dm.size();
    for (VertexId w : landmarks)
        if (w < 0 || w >= n) throw unsupported_error("landmark out of range: " + std::to_string(w));

    auto row_less = [&](VertexId a, VertexId b) {
        for (VertexId w : landmarks) {
            if (dm(a, w) != dm(b, w)) return dm(a, w) < dm(b, w);
        }
        return a < b;
    };
    auto row_equal = [&](VertexId a, VertexId b) {
        for (VertexId w : landmarks)
            if (dm(a, w) != dm(b, w)) return false;
        return true;
    };

    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), row_less);

    std::optional<std::pair<VertexId, VertexId>> witness;
    for (int i = 0; i + 1 < n;) {
        int j = i + 1;
        while (j < n && row_equal(order[i], order[j])) ++j;
        if (j > i + 1) {
            // Vertices within a run are ascending (row_less ties on id), so
            // the run's smallest pair is (order[i], order[i+1]).
            std::pair<VertexId, VertexId> candidate{order[i], order[i + 1]};
            if (!witness || candidate < *witness) witness = candidate;
        }
        i = j;
    }
    if (witness) return {false, witness};
    return {true, std::nullopt};
}

inline ResolveCheck is_resolving_set(const Graph& g, const std::vector<VertexId>& landmarks) {
    return is_resolving_set(all_pairs_distances(g), landmarks);
}
inline ResolveCheck is_resolving_set(const DiGraph& g, const std::vector<VertexId>& landmarks) {
    return is_resolving_set(all_pairs_distances(g), landmarks);
}

struct SolverOptions {
    int cap = 22;        // hard bound on |V|; exceeding it is an error
    int threads = 1;     // candidate subsets are range-split across threads
    bool use_twin_bound = true;
};

namespace detail {

/// Binomial table with saturation; ranks only drive work splitting, and
/// splitting is skipped once values saturate.
class BinomialTable {
public:
    static constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max() / 4;

    explicit BinomialTable(int n) : n_(n), c_((n + 1) * (n + 1), 0) {
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= i; ++j) {
                uint64_t v = at(i - 1, j - 1) + at(i - 1, j);
                at(i, j) = std::min(v, kSaturated);
            }
        }
    }

    uint64_t operator()(int n, int k) const {
        if (k < 0 || k > n || n < 0) return 0;
        return c_[static_cast<size_t>(n) * (n_ + 1) + k];
    }

private:
    uint64_t& at(int n, int k) { return c_[static_cast<size_t>(n) * (n_ + 1) + k]; }
    int n_;
    std::vector<uint64_t> c_;
};

/// Advance a sorted k-combination of {0..n-1} to its lexicographic
/// successor; false when exhausted.
inline bool next_combination(std::vector<VertexId>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Combination with lexicographic rank r among k-subsets of {0..n-1}.
inline std::vector<VertexId> unrank_combination(const BinomialTable& binom, int n, int k,
                                                uint64_t r) {
    std::vector<VertexId> comb(k);
    VertexId v = 0;
    for (int i = 0; i < k; ++i) {
        while (binom(n - 1 - v, k - 1 - i) <= r) {
            r -= binom(n - 1 - v, k - 1 - i);
            ++v;
        }
        comb[i] = v++;
    }
    return comb;
}

/// Per-thread scratch: open-addressed hash table over distance vectors,
/// reset by epoch stamping instead of clearing.
struct ResolveWorkspace {
    explicit ResolveWorkspace(int n) {
        int target = 2 * std::max(n, 4);
        size_t cap = 8;
        while (cap < static_cast<size_t>(target)) cap <<= 1;
        mask = cap - 1;
        stamp.assign(cap, 0);
        owner.assign(cap, -1);
        hash.assign(cap, 0);
    }
    std::vector<uint64_t> stamp;
    std::vector<VertexId> owner;
    std::vector<uint64_t> hash;
    size_t mask;
    uint64_t epoch = 0;
};

/// Exact all-distinct test for the vectors D(u|comb): hashes each vector
/// to a bucket, confirming equal-hash pairs entry by entry.
inline bool vectors_all_distinct(const DistanceMatrix& dm, const std::vector<VertexId>& comb,
                                 ResolveWorkspace& ws) {
    const int n = dm.size();
    ++ws.epoch;
    for (VertexId u = 0; u < n; ++u) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (VertexId w : comb) {
            h ^= static_cast<uint64_t>(dm(u, w)) + 0x9e3779b97f4a7c15ULL;
            h *= 0x100000001b3ULL;
        }
        size_t slot = h & ws.mask;
        for (;;) {
            if (ws.stamp[slot] != ws.epoch) {
                ws.stamp[slot] = ws.epoch;
                ws.owner[slot] = u;
                ws.hash[slot] = h;
                break;
            }
            if (ws.hash[slot] == h) {
                VertexId v = ws.owner[slot];
                bool equal = true;
                for (VertexId w : comb)
                    if (dm(u, w) != dm(v, w)) {
                        equal = false;
                        break;
                    }
                if (equal) return false;
            }
            slot = (slot + 1) & ws.mask;
        }
    }
    return true;
}

struct RangeHit {
    uint64_t rank;
    std::vector<VertexId> comb;
};

/// Lexicographically least resolving k-subset, or nullopt. Ranks
/// [0, C(n,k)) are split into contiguous chunks, one thread each; the
/// winner is the hit with the least rank, so the result does not depend
/// on the schedule.
inline std::optional<std::vector<VertexId>> first_resolving_subset(const DistanceMatrix& dm, int k,
                                                                   int threads) {
    const int n = dm.size();
    BinomialTable binom(n);
    const uint64_t total = binom(n, k);
    // Splitting multiplies total by the thread index; anything this large
    // is not enumerable in reasonable time anyway, so stay serial.
    const bool can_split = total < (uint64_t(1) << 40);

    if (threads <= 1 || !can_split || total < 64) {
        ResolveWorkspace ws(n);
        std::vector<VertexId> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (vectors_all_distinct(dm, comb, ws)) return comb;
        } while (next_combination(comb, n));
        return std::nullopt;
    }

    const int t = static_cast<int>(std::min<uint64_t>(threads, total));
    std::vector<std::optional<RangeHit>> hits(t);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int i = 0; i < t; ++i) {
        uint64_t lo = total * static_cast<uint64_t>(i) / t;
        uint64_t hi = total * static_cast<uint64_t>(i + 1) / t;
        pool.emplace_back([&, i, lo, hi] {
            ResolveWorkspace ws(n);
            auto comb = unrank_combination(binom, n, k, lo);
            for (uint64_t r = lo; r < hi; ++r) {
                if (vectors_all_distinct(dm, comb, ws)) {
                    hits[i] = RangeHit{r, comb};
                    return;
                }
                next_combination(comb, n);
            }
        });
    }
    for (auto& th : pool) th.join();
    std::optional<RangeHit> best;
    for (auto& hit : hits)
        if (hit && (!best || hit->rank < best->rank)) best = std::move(hit);
    if (best) return std::move(best->comb);
    return std::nullopt;
}

} // namespace detail

/// Minimum resolving set by exhaustive subset search: cardinalities ascend
/// from the twin lower bound, subsets of each cardinality in lexicographic
/// order, first success returned. Deterministic regardless of thread count.
inline ResolvingCertificate exact_metric_dimension(const DistanceMatrix& dm,
                                                   const SolverOptions& options = {}) {
    const int n = dm.size();
    if (n < 1) throw unsupported_error("metric dimension of an empty graph is undefined");
    if (n > options.cap)
        throw cap_exceeded_error("instance has " + std::to_string(n) +
                                 " vertices, exceeding the search cap of " +
                                 std::to_string(options.cap));
    detail::require_all_reachable(dm);

    int start = 1;
    if (options.use_twin_bound) start = std::max(1, twin_classes(dm).lower_bound());

    for (int k = start; k <= n; ++k) {
        auto found = detail::first_resolving_subset(dm, k, options.threads);
        if (found) {
            ResolvingCertificate cert;
            cert.landmarks = std::move(*found);
            cert.vectors.reserve(n);
            for (VertexId u = 0; u < n; ++u)
                cert.vectors.push_back(distance_vector(dm, u, cert.landmarks));
            cert.mu_claimed = k;
            return cert;
        }
    }
    // W = V always resolves: position u of D(u|V) is the unique zero.
    throw std::logic_error("subset search exhausted without a resolving set");
}

inline ResolvingCertificate exact_metric_dimension(const Graph& g,
                                                   const SolverOptions& options = {}) {
    return exact_metric_dimension(all_pairs_distances(g), options);
}
inline ResolvingCertificate exact_metric_dimension(const DiGraph& g,
                                                   const SolverOptions& options = {}) {
    return exact_metric_dimension(all_pairs_distances(g), options);
}

} // namespace mdim

#endif // MDIM_METRIC_HPP
