#ifndef MDIM_TOPOLOGIES_HPP
#define MDIM_TOPOLOGIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mdim/line_graph.hpp"
#include "mdim/metric.hpp"

namespace mdim {

/// A generated digraph plus the canonical word label of each vertex.
/// Labels are lexicographically sorted, so vertex ids are reproducible.
struct LabeledDiGraph {
    DiGraph graph;
    std::vector<std::string> labels;
};

namespace detail {

inline char topology_symbol(int i) {
    if (i < 10) return static_cast<char>('0' + i);
    if (i < 36) return static_cast<char>('a' + i - 10);
    throw unsupported_error("alphabet limited to 36 symbols");
}

inline void check_generated_size(long long vertices, long long edges) {
    if (vertices > 1'000'000 || edges > 4'000'000)
        throw unsupported_error("generated topology too large");
}

/// All length-n words over `alphabet` symbols in lexicographic order;
/// `distinct_adjacent` forbids equal neighboring symbols.
inline std::vector<std::string> enumerate_words(int alphabet, int n, bool distinct_adjacent) {
    std::vector<std::string> words;
    std::string word;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            words.push_back(word);
            return;
        }
        for (int s = 0; s < alphabet; ++s) {
            char c = topology_symbol(s);
            if (distinct_adjacent && !word.empty() && word.back() == c) continue;
            word.push_back(c);
            self(self, depth + 1);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return words;
}

/// Shift-register digraph: word s1..sn points to s2..sn a for each symbol a
/// (subject to the adjacency constraint). Works for n = 1 as well, where
/// every word maps to every admissible single symbol.
inline LabeledDiGraph shift_digraph(int alphabet, int n, bool distinct_adjacent) {
    auto words = enumerate_words(alphabet, n, distinct_adjacent);
    std::map<std::string, VertexId> id_of;
    for (VertexId i = 0; i < static_cast<VertexId>(words.size()); ++i) id_of[words[i]] = i;

    std::vector<std::pair<VertexId, VertexId>> edges;
    bool loops = false;
    for (VertexId u = 0; u < static_cast<VertexId>(words.size()); ++u) {
        std::string next = words[u].substr(1);
        for (int s = 0; s < alphabet; ++s) {
            char c = topology_symbol(s);
            // The appended symbol must differ from the last symbol of the
            // source word; at n = 1 this is what removes the loops.
            if (distinct_adjacent && words[u].back() == c) continue;
            next.push_back(c);
            VertexId v = id_of.at(next);
            next.pop_back();
            if (u == v) loops = true;
            edges.emplace_back(u, v);
        }
    }
    check_generated_size(static_cast<long long>(words.size()), static_cast<long long>(edges.size()));
    return {DiGraph(static_cast<int>(words.size()), std::move(edges), loops), std::move(words)};
}

} // namespace detail

/// Complete digraph on d vertices with a self-loop at every vertex; equal
/// (not just isomorphic) to the order-1 de Bruijn digraph under the
/// canonical labeling.
inline LabeledDiGraph flowered_complete(int d) {
    if (d < 1) throw unsupported_error("flowered complete digraph needs d >= 1");
    detail::check_generated_size(d, static_cast<long long>(d) * d);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(std::string(1, detail::topology_symbol(i)));
    for (VertexId i = 0; i < d; ++i)
        for (VertexId j = 0; j < d; ++j) edges.emplace_back(i, j);
    return {DiGraph(d, std::move(edges), true), std::move(labels)};
}

/// Complete digraph on d vertices (all ordered pairs, no loops).
inline LabeledDiGraph complete_digraph(int d) {
    if (d < 1) throw unsupported_error("complete digraph needs d >= 1");
    detail::check_generated_size(d, static_cast<long long>(d) * (d - 1));
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(std::string(1, detail::topology_symbol(i)));
    for (VertexId i = 0; i < d; ++i)
        for (VertexId j = 0; j < d; ++j)
            if (i != j) edges.emplace_back(i, j);
    return {DiGraph(d, std::move(edges), false), std::move(labels)};
}

/// De Bruijn digraph B(d, n): length-n words over d symbols with shift
/// edges. d^n vertices, d^(n+1) edges, d loops (the constant words).
inline LabeledDiGraph de_bruijn(int d, int n) {
    if (d < 2 || n < 1) throw unsupported_error("de Bruijn digraph needs d >= 2 and n >= 1");
    return detail::shift_digraph(d, n, false);
}

/// Kautz digraph K(d, n): length-n words over d+1 symbols with distinct
/// adjacent symbols. d^n + d^(n-1) vertices, d^(n+1) + d^n edges, no loops.
inline LabeledDiGraph kautz(int d, int n) {
    if (d < 2 || n < 1) throw unsupported_error("Kautz digraph needs d >= 2 and n >= 1");
    return detail::shift_digraph(d + 1, n, true);
}

enum class TopologyFamily { de_bruijn, kautz, flowered_complete, complete_digraph };

/// Closed-form metric dimension of de Bruijn and Kautz digraphs:
///   mu(B(d,n)) = d^(n-1) (d-1)
///   mu(K(d,n)) = d          if n = 1
///              = d^(n-2) (d^2 - 1)  if n >= 2
inline long long known_topology_mu(TopologyFamily family, int d, int n) {
    if (d < 2 || n < 1) throw unsupported_error("closed form needs d >= 2 and n >= 1");
    auto pow_ll = [](long long base, int exp) {
        long long r = 1;
        for (int i = 0; i < exp; ++i) {
            if (r > (1LL << 60) / base) throw unsupported_error("value overflow");
            r *= base;
        }
        return r;
    };
    switch (family) {
        case TopologyFamily::de_bruijn:
            return pow_ll(d, n - 1) * (d - 1);
        case TopologyFamily::kautz:
            if (n == 1) return d;
            return pow_ll(d, n - 2) * (static_cast<long long>(d) * d - 1);
        default:
            throw unsupported_error("closed form available for de Bruijn and Kautz only");
    }
}

struct RecursionCheck {
    std::string name;
    bool pass;
};

struct RecursionReport {
    std::vector<RecursionCheck> checks;
    bool all_pass;
};

/// Compares the string-built order-n digraph against the line digraph of
/// the string-built order-(n-1) digraph: vertex/edge/loop counts, sorted
/// degree sequences, and (when within the solver cap) exact metric
/// dimension. Fingerprint evidence, not an isomorphism proof.
inline RecursionReport line_recursion_report(TopologyFamily family, int d, int n,
                                             const SolverOptions& options = {}) {
    if (n < 2) throw unsupported_error("recursion check needs n >= 2");
    if (family != TopologyFamily::de_bruijn && family != TopologyFamily::kautz)
        throw unsupported_error("recursion defined for de Bruijn and Kautz only");
    auto build = [&](int order) {
        return family == TopologyFamily::de_bruijn ? de_bruijn(d, order) : kautz(d, order);
    };
    LabeledDiGraph direct = build(n);
    LabeledDiGraph previous = build(n - 1);
    auto lifted = directed_line_graph(previous.graph);

    RecursionReport report;
    auto add = [&](std::string name, bool pass) { report.checks.push_back({std::move(name), pass}); };

    const DiGraph& a = direct.graph;
    const DiGraph& b = lifted.line;
    add("vertex_count", a.vertex_count() == b.vertex_count());
    add("edge_count", a.edge_count() == b.edge_count());
    add("loop_count", a.loop_count() == b.loop_count());

    auto degree_sequence = [](const DiGraph& g, bool out) {
        std::vector<int> seq;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            seq.push_back(out ? g.out_degree(v) : g.in_degree(v));
        std::sort(seq.begin(), seq.end());
        return seq;
    };
    add("in_degree_sequence", degree_sequence(a, false) == degree_sequence(b, false));
    add("out_degree_sequence", degree_sequence(a, true) == degree_sequence(b, true));

    if (a.vertex_count() <= options.cap && b.vertex_count() <= options.cap) {
        auto mu_a = exact_metric_dimension(a, options).mu_claimed;
        auto mu_b = exact_metric_dimension(b, options).mu_claimed;
        add("mu_exact", mu_a == mu_b);
    }

    report.all_pass = true;
    for (const auto& check : report.checks) report.all_pass = report.all_pass && check.pass;
    return report;
}

} // namespace mdim

#endif // MDIM_TOPOLOGIES_HPP
