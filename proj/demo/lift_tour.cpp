// A short tour of the library: build a small molecule-like graph, lift it a
// few different ways, and print what comes out.

#include <iostream>

#include "topolift/topolift.hpp"

using namespace topolift;

int main() {
    // two fused triangles sharing the edge {1,2}, plus a tail vertex
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});

    SimplicialComplex flag = lift_clique(g, 2);
    std::cout << "clique complex: ";
    for (int d = 0; d <= flag.max_dim(); ++d) std::cout << flag.count(d) << ' ';
    std::cout << "(chi " << euler_characteristic(flag) << ")\n";

    CellComplex rings = lift_cycles_to_cells(g, 6);
    std::cout << "chordless cycles as 2-cells: " << rings.two_cells.size() << '\n';

    Hypergraph hoods = lift_khop_hypergraph(g, 1);
    std::cout << "1-hop hyperedges: " << hoods.hyperedges.size() << '\n';

    Matrix features{{1.0}, {2.0}, {3.0}, {4.0}, {5.0}};
    FeatureMatrix fm = lift_features(flag, features, Aggregation::Mean);
    std::cout << "feature rows over all simplices: " << fm.rows.size() << '\n';

    std::cout << "registered liftings: " << registry_list().size() << '\n';
    return 0;
}
