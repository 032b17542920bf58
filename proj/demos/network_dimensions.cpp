// Walkthrough of the library on the interconnection-network families:
// builds small de Bruijn and Kautz digraphs, solves their metric dimension
// exactly, and checks the answers against the closed forms and the
// in-edge-deletion construction.

#include <iostream>

#include "mdim/mdim.hpp"

using namespace mdim;

int main() {
    for (auto [d, n] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        auto b = de_bruijn(d, n);
        auto cert = exact_metric_dimension(b.graph);
        std::cout << "B(" << d << "," << n << "): " << b.graph.vertex_count() << " vertices, "
                  << b.graph.edge_count() << " edges, mu = " << *cert.mu_claimed
                  << " (closed form " << known_topology_mu(TopologyFamily::de_bruijn, d, n)
                  << "), landmarks:";
        for (VertexId w : cert.landmarks) std::cout << " " << b.labels[w];
        std::cout << "\n";
    }

    auto k = kautz(2, 2);
    std::cout << "K(2,2): mu = " << *exact_metric_dimension(k.graph).mu_claimed
              << " (closed form " << known_topology_mu(TopologyFamily::kautz, 2, 2) << ")\n";

    // the deletion construction certifies the next order without solving it
    auto b22 = de_bruijn(2, 2);
    auto landmarks = digraph_line_resolving_set(b22.graph);
    std::cout << "deletion set on B(2,2) has " << landmarks.size()
              << " edges, so mu(B(2,3)) = " << landmarks.size() << "; edges:";
    for (EdgeId e : landmarks)
        std::cout << " " << b22.labels[b22.graph.head(e)] << "->"
                  << b22.labels[b22.graph.tail(e)];
    std::cout << "\n";

    auto report = line_recursion_report(TopologyFamily::kautz, 2, 2);
    std::cout << "K(2,2) vs L(K(2,1)) fingerprints: " << (report.all_pass ? "match" : "differ")
              << "\n";
    return 0;
}
