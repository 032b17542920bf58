#include <catch2/catch_amalgamated.hpp>

#include "mdim/mdim.hpp"
#include "testutil.hpp"

using namespace mdim;
using namespace testutil;

TEST_CASE("line digraph of a directed cycle is a directed cycle", "[line_graph]") {
    for (int n : {2, 3, 5, 7}) {
        auto lgm = directed_line_graph(directed_cycle(n));
        CHECK(lgm.line.vertex_count() == n);
        CHECK(is_directed_cycle(lgm.line));
    }
}

TEST_CASE("line digraph of the order-2 flowered complete digraph", "[line_graph]") {
    // K_2 with loops: 2 vertices, 4 edges of which 2 loops.
    auto k2 = flowered_complete(2);
    auto lgm = directed_line_graph(k2.graph);
    CHECK(lgm.line.vertex_count() == 4);
    CHECK(lgm.line.edge_count() == 8);
    CHECK(lgm.line.loop_count() == 2);

    // oracle: count ordered pairs (a, b) with tail(a) = head(b)
    int pairs = 0, loops = 0;
    for (EdgeId a = 0; a < k2.graph.edge_count(); ++a)
        for (EdgeId b = 0; b < k2.graph.edge_count(); ++b)
            if (k2.graph.tail(a) == k2.graph.head(b)) {
                ++pairs;
                if (a == b) ++loops;
            }
    CHECK(pairs == 8);
    CHECK(loops == 2);
}

TEST_CASE("line digraph of the complete digraph on 3 vertices", "[line_graph]") {
    auto lgm = directed_line_graph(complete_digraph(3).graph);
    CHECK(lgm.line.vertex_count() == 6);
    CHECK(lgm.line.edge_count() == 12); // sum over x of in(x) * out(x) = 3 * 2 * 2
    CHECK(lgm.line.loop_count() == 0);
}

TEST_CASE("directed edge-count identity", "[line_graph][property]") {
    TestRng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        DiGraph g = random_strongly_connected_digraph(rng, 3 + rng.below(3), 12, true);
        auto lgm = directed_line_graph(g);
        int expected = 0;
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            expected += g.in_degree(x) * g.out_degree(x);
        CHECK(lgm.line.edge_count() == expected);
        CHECK(lgm.line.vertex_count() == g.edge_count());
    }
}

TEST_CASE("line graph of named undirected graphs", "[line_graph]") {
    SECTION("star becomes a clique") {
        auto lgm = undirected_line_graph(star_graph(3));
        CHECK(lgm.line.vertex_count() == 3);
        CHECK(lgm.line.edge_count() == 3); // K_3
    }
    SECTION("path shortens by one") {
        auto lgm = undirected_line_graph(path_graph(5));
        auto pred = structural_predicates(lgm.line);
        CHECK(lgm.line.vertex_count() == 4);
        CHECK(pred.is_path);
    }
    SECTION("complete graph degree-sum count") {
        auto lgm = undirected_line_graph(complete_graph(4));
        CHECK(lgm.line.vertex_count() == 6);
        CHECK(lgm.line.edge_count() == 12); // 4 * C(3,2)
    }
}

TEST_CASE("undirected edge-count identity and connectivity", "[line_graph][property]") {
    TestRng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 4 + rng.below(4), 40);
        if (g.edge_count() < 2) continue;
        auto lgm = undirected_line_graph(g);
        int expected = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            expected += g.degree(v) * (g.degree(v) - 1) / 2;
        CHECK(lgm.line.edge_count() == expected);
        CHECK(lgm.line.vertex_count() == g.edge_count());
        CHECK(is_connected(lgm.line));
    }
}

TEST_CASE("edge-vertex bijection round trip", "[line_graph][property]") {
    TestRng rng(79);
    DiGraph g = random_strongly_connected_digraph(rng, 4, 12);
    auto lgm = directed_line_graph(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(lgm.from_line[lgm.to_line[e]] == e);
        CHECK(lgm.source_edge[lgm.to_line[e]] == g.edge(e));
    }
    Graph h = random_connected_graph(rng, 5, 50);
    auto ulgm = undirected_line_graph(h);
    for (EdgeId e = 0; e < h.edge_count(); ++e) CHECK(ulgm.from_line[ulgm.to_line[e]] == e);
}

TEST_CASE("preconditions on edge counts", "[line_graph]") {
    CHECK_THROWS_AS(directed_line_graph(DiGraph(2, {})), invalid_graph_error);
    CHECK_THROWS_AS(undirected_line_graph(Graph(2, {{0, 1}})), invalid_graph_error);
}

TEST_CASE("line-distance identity on named digraphs", "[line_graph]") {
    CHECK(check_distance_identity(directed_cycle(3), directed_line_graph(directed_cycle(3)))
              .empty());
    auto k3 = complete_digraph(3).graph;
    CHECK(check_distance_identity(k3, directed_line_graph(k3)).empty());
    auto b22 = de_bruijn(2, 2).graph;
    CHECK(check_distance_identity(b22, directed_line_graph(b22)).empty());
}

TEST_CASE("line-distance identity on random strongly connected digraphs", "[line_graph][property]") {
    TestRng rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        DiGraph g = random_strongly_connected_digraph(rng, 3 + rng.below(4), 14, trial % 3 == 0);
        CHECK(check_distance_identity(g, directed_line_graph(g)).empty());
    }
}

TEST_CASE("line-distance identity requires strong connectivity", "[line_graph]") {
    DiGraph weak(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(check_distance_identity(weak, directed_line_graph(weak)), disconnected_error);
}
