#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "mdim/mdim.hpp"
#include "testutil.hpp"

using namespace mdim;
using namespace testutil;
using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(MDIM_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("edge-list parsing", "[io]") {
    SECTION("labels are interned in first-appearance order") {
        std::istringstream in("# a comment\ngraph\nb a\na c\n");
        auto parsed = parse_graph_file(in);
        CHECK_FALSE(parsed.directed);
        CHECK(parsed.labels == std::vector<std::string>{"b", "a", "c"});
        CHECK(parsed.graph->edge_count() == 2);
        CHECK(parsed.id_of("c") == 2);
        CHECK_THROWS_AS(parsed.id_of("z"), unsupported_error);
    }
    SECTION("digraph with loops") {
        std::istringstream in("digraph loops\nx x\nx y\ny x\n");
        auto parsed = parse_graph_file(in);
        CHECK(parsed.directed);
        CHECK(parsed.digraph->loop_count() == 1);
    }
    SECTION("duplicate edges are rejected with the line number") {
        std::istringstream in("graph\na b\nb a\n");
        CHECK_THROWS_WITH(parse_graph_file(in), Catch::Matchers::ContainsSubstring("line 3"));
    }
    SECTION("loops need the header token") {
        std::istringstream in("digraph\nx x\n");
        CHECK_THROWS_AS(parse_graph_file(in), mdim::parse_error);
        std::istringstream und("graph loops\n");
        CHECK_THROWS_AS(parse_graph_file(und), mdim::parse_error);
    }
    SECTION("missing header or edges") {
        std::istringstream empty("");
        CHECK_THROWS_AS(parse_graph_file(empty), mdim::parse_error);
        std::istringstream no_edges("graph\n");
        CHECK_THROWS_AS(parse_graph_file(no_edges), mdim::parse_error);
        std::istringstream bad("graph\na b c\n");
        CHECK_THROWS_WITH(parse_graph_file(bad), Catch::Matchers::ContainsSubstring("line 2"));
    }
}

TEST_CASE("generated files re-parse to the same labeled edge set", "[io][property]") {
    for (const auto& make : {de_bruijn(2, 2), kautz(2, 2), flowered_complete(3)}) {
        std::ostringstream out;
        write_edge_list(out, make.graph, make.labels);
        std::istringstream in(out.str());
        auto parsed = parse_graph_file(in);
        REQUIRE(parsed.directed);
        std::set<std::pair<std::string, std::string>> original, reparsed;
        for (EdgeId e = 0; e < make.graph.edge_count(); ++e)
            original.insert({make.labels[make.graph.head(e)], make.labels[make.graph.tail(e)]});
        for (EdgeId e = 0; e < parsed.digraph->edge_count(); ++e)
            reparsed.insert(
                {parsed.labels[parsed.digraph->head(e)], parsed.labels[parsed.digraph->tail(e)]});
        CHECK(original == reparsed);
        CHECK(parsed.digraph->loop_count() == make.graph.loop_count());
    }
}

TEST_CASE("edge tokens split at the first separator", "[io]") {
    CHECK(split_edge_token("a->b", true) == std::pair<std::string, std::string>{"a", "b"});
    CHECK(split_edge_token("00→01", true) == std::pair<std::string, std::string>{"00", "01"});
    CHECK(split_edge_token("a-b", false) == std::pair<std::string, std::string>{"a", "b"});
    CHECK(split_edge_token("u—v", false) == std::pair<std::string, std::string>{"u", "v"});
    CHECK_THROWS_AS(split_edge_token("ab", false), unsupported_error);
}

TEST_CASE("cli mu", "[cli]") {
    SECTION("directed 4-cycle, line mode") {
        auto path = temp_file("mdim_c4.txt", "digraph\na b\nb c\nc d\nd a\n");
        auto result = run_cli("mu " + path.string() + " --line --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["schema"] == 1);
        CHECK(cert["mode"] == "mu-line");
        CHECK(cert["mu"] == 1);
        CHECK(cert["input_summary"]["n"] == 4);
        CHECK(cert["input_summary"]["directed"] == true);
    }
    SECTION("complete bipartite K_{2,3}, line mode") {
        auto path = temp_file("mdim_k23.txt", "graph\nu1 v1\nu1 v2\nu1 v3\nu2 v1\nu2 v2\nu2 v3\n");
        auto result = run_cli("mu " + path.string() + " --line --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["mu"] == 2);
        CHECK(cert["bounds"]["lower_log"] == 2); // max degree 3
        CHECK(cert["bounds"]["upper"] == 3);
        for (const auto& check : cert["checks"]) CHECK(check["pass"] == true);
    }
    SECTION("path P_5, line mode, exact flag tolerated") {
        auto path = temp_file("mdim_p5.txt", "graph\na b\nb c\nc d\nd e\n");
        auto result = run_cli("mu " + path.string() + " --line --exact --json");
        REQUIRE(result.exit_code == 0);
        CHECK(json::parse(result.out)["mu"] == 1);
    }
    SECTION("exit codes") {
        auto bad = temp_file("mdim_bad.txt", "graph\na b\na b\n");
        CHECK(run_cli("mu " + bad.string()).exit_code == 2);
        auto weak = temp_file("mdim_weak.txt", "digraph\na b\nb c\n");
        CHECK(run_cli("mu " + weak.string()).exit_code == 3);
        auto big = temp_file("mdim_big.txt", "graph\na b\nb c\nc d\nd e\ne f\n");
        CHECK(run_cli("mu " + big.string() + " --cap 3").exit_code == 4);
        CHECK(run_cli("mu /nonexistent/file").exit_code == 2);
    }
}

TEST_CASE("cli certificates re-verify against recomputed distances", "[cli]") {
    auto path = temp_file("mdim_reverify.txt", "graph\nu1 v1\nu1 v2\nu1 v3\nu2 v1\nu2 v2\nu2 v3\n");
    auto result = run_cli("mu " + path.string() + " --line --json");
    REQUIRE(result.exit_code == 0);
    auto cert = json::parse(result.out);
    REQUIRE_FALSE(cert["mu"].is_null());

    // rebuild the line graph independently and replay the vectors
    auto parsed = load_graph_file(path.string());
    auto lgm = undirected_line_graph(*parsed.graph);
    auto dm = all_pairs_distances(lgm.line);
    std::vector<std::string> labels;
    for (auto [a, b] : parsed.graph->edges())
        labels.push_back(edge_label(parsed.labels, a, b, false));

    std::vector<VertexId> landmarks;
    for (const auto& label : cert["landmarks"]) {
        auto it = std::find(labels.begin(), labels.end(), label.get<std::string>());
        REQUIRE(it != labels.end());
        landmarks.push_back(static_cast<VertexId>(it - labels.begin()));
    }
    REQUIRE(static_cast<int>(cert["vectors"].size()) == dm.size());
    std::set<std::vector<int>> distinct;
    for (EdgeId e = 0; e < dm.size(); ++e) {
        auto expected = distance_vector(dm, e, landmarks);
        CHECK(cert["vectors"][labels[e]].get<std::vector<int>>() == expected);
        distinct.insert(expected);
    }
    CHECK(static_cast<int>(distinct.size()) == dm.size());
}

TEST_CASE("cli construct", "[cli]") {
    SECTION("theorem1 on the complete digraph") {
        auto path = temp_file("mdim_k3d.txt", "digraph\na b\na c\nb a\nb c\nc a\nc b\n");
        auto result = run_cli("construct " + path.string() + " --method theorem1 --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["mu"] == 3);
        CHECK(cert["landmarks"].size() == 3);
        for (const auto& check : cert["checks"]) CHECK(check["pass"] == true);
        // landmarks are arrow-labeled original edges
        CHECK(cert["landmarks"][0].get<std::string>().find("→") != std::string::npos);
    }
    SECTION("tree method on a star") {
        auto path = temp_file("mdim_star.txt", "graph\nc l1\nc l2\nc l3\n");
        auto result = run_cli("construct " + path.string() + " --method tree --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["mu"] == 2);
        CHECK(cert["landmarks"].size() == 2);
    }
    SECTION("spantree on the six-cycle") {
        auto path = temp_file("mdim_c6.txt", "graph\na b\nb c\nc d\nd e\ne f\nf a\n");
        auto result = run_cli("construct " + path.string() + " --method spantree --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["mu"].is_null());
        CHECK(cert["landmarks"].size() == 4);
        for (const auto& check : cert["checks"]) CHECK(check["pass"] == true);
    }
    SECTION("method preconditions produce messages") {
        auto path = temp_file("mdim_c4u.txt", "graph\na b\nb c\nc d\nd a\n");
        CHECK(run_cli("construct " + path.string() + " --method theorem1").exit_code == 1);
        CHECK(run_cli("construct " + path.string() + " --method tree").exit_code == 1);
    }
}

TEST_CASE("cli gen", "[cli]") {
    SECTION("de Bruijn B(2,2) as documented") {
        auto result = run_cli("gen de_bruijn 2 2");
        REQUIRE(result.exit_code == 0);
        CHECK(result.out ==
              "digraph loops\n00 00\n00 01\n01 10\n01 11\n10 00\n10 01\n11 10\n11 11\n");
    }
    SECTION("kautz K(2,1) over three labels") {
        auto result = run_cli("gen kautz 2 1");
        REQUIRE(result.exit_code == 0);
        CHECK(result.out == "digraph\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n");
    }
    SECTION("flowered d=2 includes both loops") {
        auto result = run_cli("gen flowered 2");
        REQUIRE(result.exit_code == 0);
        CHECK(result.out == "digraph loops\n0 0\n0 1\n1 0\n1 1\n");
    }
    SECTION("bad parameters") {
        CHECK(run_cli("gen de_bruijn 1 2").exit_code == 1);
        CHECK(run_cli("gen nosuch 2 2").exit_code == 1);
    }
    SECTION("gen then mu reproduces the closed forms") {
        struct Case {
            std::string family;
            int d, n;
            TopologyFamily enum_family;
        };
        for (const auto& c : {Case{"de_bruijn", 2, 1, TopologyFamily::de_bruijn},
                              Case{"de_bruijn", 2, 2, TopologyFamily::de_bruijn},
                              Case{"de_bruijn", 3, 1, TopologyFamily::de_bruijn},
                              Case{"kautz", 2, 1, TopologyFamily::kautz},
                              Case{"kautz", 2, 2, TopologyFamily::kautz}}) {
            auto path = std::filesystem::temp_directory_path() /
                        ("mdim_gen_" + c.family + std::to_string(c.d) + std::to_string(c.n));
            auto gen = run_cli("gen " + c.family + " " + std::to_string(c.d) + " " +
                               std::to_string(c.n) + " --out " + path.string());
            REQUIRE(gen.exit_code == 0);
            auto result = run_cli("mu " + path.string() + " --json");
            REQUIRE(result.exit_code == 0);
            CHECK(json::parse(result.out)["mu"] ==
                  known_topology_mu(c.enum_family, c.d, c.n));
        }
    }
}

TEST_CASE("cli verify", "[cli]") {
    SECTION("path end resolves") {
        auto path = temp_file("mdim_p3.txt", "graph\na b\nb c\n");
        auto result = run_cli("verify " + path.string() + " --landmarks a --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["checks"][0]["pass"] == true);
        CHECK(cert["vectors"]["c"] == json::array({2}));
    }
    SECTION("five-cycle single landmark fails with a witness") {
        auto path = temp_file("mdim_c5.txt", "graph\nv0 v1\nv1 v2\nv2 v3\nv3 v4\nv4 v0\n");
        auto result = run_cli("verify " + path.string() + " --landmarks v0 --json");
        CHECK(result.exit_code == 1);
        auto cert = json::parse(result.out);
        CHECK(cert["checks"][0]["pass"] == false);
        CHECK(cert["witness"] == json::array({"v1", "v4"}));
        CHECK_FALSE(cert.contains("vectors"));
    }
    SECTION("line-graph landmarks by edge token") {
        auto path = temp_file("mdim_k14.txt", "graph\nc l1\nc l2\nc l3\nc l4\n");
        auto result =
            run_cli("verify " + path.string() + " --line --landmarks c-l1,c-l2,c-l3 --json");
        REQUIRE(result.exit_code == 0);
        auto cert = json::parse(result.out);
        CHECK(cert["mode"] == "verify-line");
        CHECK(cert["checks"][0]["pass"] == true);
    }
    SECTION("unknown labels error") {
        auto path = temp_file("mdim_p3b.txt", "graph\na b\nb c\n");
        CHECK(run_cli("verify " + path.string() + " --landmarks q").exit_code == 1);
    }
}

TEST_CASE("cli output is byte-deterministic", "[cli]") {
    auto path = temp_file("mdim_det.txt", "graph\nu1 v1\nu1 v2\nu1 v3\nu2 v1\nu2 v2\nu2 v3\n");
    auto first = run_cli("mu " + path.string() + " --line --json");
    auto second = run_cli("mu " + path.string() + " --line --json");
    auto threaded = run_cli("mu " + path.string() + " --line --json --threads 4");
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == threaded.out);

    auto gen_a = run_cli("gen kautz 2 2");
    auto gen_b = run_cli("gen kautz 2 2");
    CHECK(gen_a.out == gen_b.out);
}
