// mdim: metric dimension toolkit for graphs, digraphs, and their line
// graphs. Reads edge-list files, emits human-readable text or versioned
// JSON certificates.
//
// Exit codes: 0 success, 2 file parse error, 3 disconnected input,
// 4 search cap exceeded, 1 anything else.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/mdim.hpp"

using json = nlohmann::ordered_json;
using namespace mdim;

namespace {

struct CommonFlags {
    bool as_json = false;
    int cap = 22;
    int threads = 1;
};

SolverOptions solver_options(const CommonFlags& flags) {
    SolverOptions options;
    options.cap = flags.cap;
    options.threads = std::max(1, flags.threads);
    return options;
}

json input_summary(const ParsedGraph& input) {
    return json{{"n", input.vertex_count()}, {"m", input.edge_count()}, {"directed", input.directed}};
}

json certificate_skeleton(const std::string& mode, const ParsedGraph& input) {
    json cert;
    cert["schema"] = 1;
    cert["mode"] = mode;
    cert["input_summary"] = input_summary(input);
    cert["mu"] = nullptr;
    cert["landmarks"] = json::array();
    cert["bounds"] = nullptr;
    cert["checks"] = json::array();
    return cert;
}

void add_check(json& cert, const std::string& name, bool pass) {
    cert["checks"].push_back(json{{"name", name}, {"pass", pass}});
}

/// Labels of the graph a computation ran on: the file's own labels, or the
/// edge labels of the original graph when the line graph was solved.
std::vector<std::string> line_vertex_labels(const ParsedGraph& input) {
    std::vector<std::string> labels;
    const auto& edges = input.directed ? input.digraph->edges() : input.graph->edges();
    labels.reserve(edges.size());
    for (auto [a, b] : edges) labels.push_back(edge_label(input.labels, a, b, input.directed));
    return labels;
}

void attach_vectors(json& cert, const DistanceMatrix& dm, const std::vector<VertexId>& landmarks,
                    const std::vector<std::string>& labels) {
    json vectors = json::object();
    for (VertexId u = 0; u < dm.size(); ++u)
        vectors[labels[u]] = distance_vector(dm, u, landmarks);
    cert["vectors"] = std::move(vectors);
}

void print_human(const json& cert) {
    const auto& summary = cert["input_summary"];
    std::cout << "input: n=" << summary["n"] << " m=" << summary["m"]
              << (summary["directed"].get<bool>() ? " digraph" : " graph") << "\n";
    std::cout << "mode: " << cert["mode"].get<std::string>() << "\n";
    if (!cert["mu"].is_null()) std::cout << "mu = " << cert["mu"] << "\n";
    if (!cert["landmarks"].empty()) {
        std::cout << "landmarks (" << cert["landmarks"].size() << "):";
        for (const auto& label : cert["landmarks"]) std::cout << " " << label.get<std::string>();
        std::cout << "\n";
    }
    if (!cert["bounds"].is_null())
        std::cout << "bounds: " << cert["bounds"]["lower_log"] << " <= mu(L) <= "
                  << cert["bounds"]["upper"] << "\n";
    if (cert.contains("witness"))
        std::cout << "witness: " << cert["witness"][0].get<std::string>() << " ~ "
                  << cert["witness"][1].get<std::string>() << "\n";
    for (const auto& check : cert["checks"])
        std::cout << "check " << check["name"].get<std::string>() << ": "
                  << (check["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
}

void emit(const json& cert, bool as_json) {
    if (as_json)
        std::cout << cert.dump(2) << "\n";
    else
        print_human(cert);
}

int cmd_mu(const std::string& path, bool line_mode, const CommonFlags& flags) {
    ParsedGraph input = load_graph_file(path);
    json cert = certificate_skeleton(line_mode ? "mu-line" : "mu", input);

    DistanceMatrix dm(1, false);
    std::vector<std::string> labels;
    if (line_mode) {
        labels = line_vertex_labels(input);
        if (input.directed)
            dm = all_pairs_distances(directed_line_graph(*input.digraph).line);
        else
            dm = all_pairs_distances(undirected_line_graph(*input.graph).line);
        if (!input.directed) {
            auto bounds = line_graph_mu_bounds(*input.graph);
            if (bounds.applicable)
                cert["bounds"] = json{{"lower_log", bounds.lower_log}, {"upper", bounds.upper}};
        }
    } else {
        labels = input.labels;
        dm = input.directed ? all_pairs_distances(*input.digraph)
                            : all_pairs_distances(*input.graph);
    }

    auto certificate = exact_metric_dimension(dm, solver_options(flags));
    cert["mu"] = *certificate.mu_claimed;
    for (VertexId w : certificate.landmarks) cert["landmarks"].push_back(labels[w]);
    attach_vectors(cert, dm, certificate.landmarks, labels);
    add_check(cert, "certificate_verifies", is_resolving_set(dm, certificate.landmarks).resolving);
    if (!cert["bounds"].is_null()) {
        int mu = *certificate.mu_claimed;
        add_check(cert, "bounds_sandwich",
                  cert["bounds"]["lower_log"].get<int>() <= mu &&
                      mu <= cert["bounds"]["upper"].get<int>());
    }
    emit(cert, flags.as_json);
    return 0;
}

int cmd_construct(const std::string& path, const std::string& method, const CommonFlags& flags) {
    ParsedGraph input = load_graph_file(path);
    json cert = certificate_skeleton("construct-" + method, input);

    std::vector<EdgeId> landmarks;
    std::optional<int> mu;
    std::optional<int> expected_size;
    if (method == "theorem1") {
        if (!input.directed)
            throw unsupported_error("method theorem1 needs a digraph input");
        landmarks = digraph_line_resolving_set(*input.digraph);
        mu = input.digraph->edge_count() - input.digraph->vertex_count();
        expected_size = *mu;
    } else if (method == "spantree") {
        if (input.directed)
            throw unsupported_error("method spantree needs an undirected graph input");
        landmarks = spanning_tree_resolving_set(*input.graph, solver_options(flags));
        if (input.graph->vertex_count() >= 6) expected_size = input.graph->vertex_count() - 2;
    } else if (method == "tree") {
        if (input.directed)
            throw unsupported_error("method tree needs an undirected tree input");
        auto result = tree_line_metric_dimension(*input.graph);
        landmarks = std::move(result.landmarks);
        mu = result.mu;
        expected_size = result.mu;
    } else {
        throw unsupported_error("unknown method: " + method);
    }

    auto labels = line_vertex_labels(input);
    DistanceMatrix dm = input.directed
                            ? all_pairs_distances(directed_line_graph(*input.digraph).line)
                            : all_pairs_distances(undirected_line_graph(*input.graph).line);
    if (mu) cert["mu"] = *mu;
    for (EdgeId e : landmarks) cert["landmarks"].push_back(labels[e]);
    bool resolving = is_resolving_set(dm, landmarks).resolving;
    if (resolving) attach_vectors(cert, dm, landmarks, labels);
    add_check(cert, "resolving", resolving);
    if (expected_size)
        add_check(cert, "size_matches_formula",
                  static_cast<int>(landmarks.size()) == *expected_size);
    emit(cert, flags.as_json);
    return 0;
}

int cmd_gen(const std::string& family, int d, std::optional<int> n, const std::string& out_path) {
    LabeledDiGraph generated = [&] {
        if (family == "de_bruijn") {
            if (!n) throw unsupported_error("de_bruijn needs both d and n");
            return de_bruijn(d, *n);
        }
        if (family == "kautz") {
            if (!n) throw unsupported_error("kautz needs both d and n");
            return kautz(d, *n);
        }
        if (family == "flowered") return flowered_complete(d);
        if (family == "complete") return complete_digraph(d);
        throw unsupported_error("unknown family: " + family +
                                " (expected de_bruijn, kautz, flowered, complete)");
    }();

    if (out_path.empty()) {
        write_edge_list(std::cout, generated.graph, generated.labels);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw error("cannot write file: " + out_path);
        write_edge_list(out, generated.graph, generated.labels);
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& landmarks_csv, bool line_mode,
               const CommonFlags& flags) {
    ParsedGraph input = load_graph_file(path);
    json cert = certificate_skeleton(line_mode ? "verify-line" : "verify", input);

    std::vector<VertexId> landmarks;
    std::vector<std::string> labels;
    DistanceMatrix dm(1, false);
    if (line_mode) {
        labels = line_vertex_labels(input);
        std::map<std::pair<VertexId, VertexId>, EdgeId> edge_ids;
        const auto& edges = input.directed ? input.digraph->edges() : input.graph->edges();
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
            auto [a, b] = edges[e];
            if (input.directed)
                edge_ids[{a, b}] = e;
            else
                edge_ids[{std::min(a, b), std::max(a, b)}] = e;
        }
        for (const auto& token : split_csv(landmarks_csv)) {
            auto [left, right] = split_edge_token(token, input.directed);
            VertexId a = input.id_of(left);
            VertexId b = input.id_of(right);
            auto key = input.directed ? std::pair{a, b} : std::pair{std::min(a, b), std::max(a, b)};
            auto it = edge_ids.find(key);
            if (it == edge_ids.end()) throw unsupported_error("no such edge: " + token);
            landmarks.push_back(it->second);
        }
        dm = input.directed ? all_pairs_distances(directed_line_graph(*input.digraph).line)
                            : all_pairs_distances(undirected_line_graph(*input.graph).line);
    } else {
        labels = input.labels;
        for (const auto& token : split_csv(landmarks_csv)) landmarks.push_back(input.id_of(token));
        dm = input.directed ? all_pairs_distances(*input.digraph)
                            : all_pairs_distances(*input.graph);
    }

    auto check = is_resolving_set(dm, landmarks);
    for (VertexId w : landmarks) cert["landmarks"].push_back(labels[w]);
    if (check.resolving) attach_vectors(cert, dm, landmarks, labels);
    if (check.witness)
        cert["witness"] = json::array({labels[check.witness->first], labels[check.witness->second]});
    add_check(cert, "resolving", check.resolving);
    emit(cert, flags.as_json);
    return check.resolving ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension of graphs, digraphs, and line graphs"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* mu = app.add_subcommand("mu", "exact metric dimension of a graph file");
    std::string mu_file;
    bool mu_line = false;
    bool mu_exact = false;
    mu->add_option("file", mu_file, "edge-list file")->required();
    mu->add_flag("--line", mu_line, "solve the line graph of the input");
    mu->add_flag("--exact", mu_exact, "exhaustive solve (the default and only mode)");
    mu->add_option("--cap", flags.cap, "vertex cap for the exhaustive search");
    mu->add_option("--threads", flags.threads, "worker threads for the subset search");
    mu->add_flag("--json", flags.as_json, "emit a JSON certificate");

    auto* construct = app.add_subcommand("construct", "build a resolving set of the line graph");
    std::string construct_file;
    std::string method;
    construct->add_option("file", construct_file, "edge-list file")->required();
    construct->add_option("--method", method, "theorem1 | spantree | tree")->required();
    construct->add_option("--cap", flags.cap, "vertex cap for fallback exact solves");
    construct->add_option("--threads", flags.threads, "worker threads");
    construct->add_flag("--json", flags.as_json, "emit a JSON certificate");

    auto* gen = app.add_subcommand("gen", "generate a network topology as an edge-list file");
    std::string family;
    int gen_d = 0;
    int gen_n = -1;
    std::string out_path;
    gen->add_option("family", family, "de_bruijn | kautz | flowered | complete")->required();
    gen->add_option("d", gen_d, "degree parameter")->required();
    gen->add_option("n", gen_n, "order parameter (de_bruijn and kautz)");
    gen->add_option("--out", out_path, "output path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "check whether a landmark set resolves");
    std::string verify_file;
    std::string landmarks_csv;
    bool verify_line = false;
    verify->add_option("file", verify_file, "edge-list file")->required();
    verify->add_option("--landmarks", landmarks_csv, "comma-separated labels (or u-v / u->v edges with --line)")
        ->required();
    verify->add_flag("--line", verify_line, "landmarks are edges, verified on the line graph");
    verify->add_flag("--json", flags.as_json, "emit a JSON certificate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mu->parsed()) return cmd_mu(mu_file, mu_line, flags);
        if (construct->parsed()) return cmd_construct(construct_file, method, flags);
        if (gen->parsed())
            return cmd_gen(family, gen_d, gen_n >= 0 ? std::optional<int>(gen_n) : std::nullopt,
                           out_path);
        if (verify->parsed()) return cmd_verify(verify_file, landmarks_csv, verify_line, flags);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
