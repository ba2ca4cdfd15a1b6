#pragma once

// Liftings whose source is already a complex: the rank-preserving inclusion
// of a simplicial complex into a combinatorial complex, and the encoding of
// a cell complex as its boundary-incidence graph.

#include <algorithm>
#include <vector>

#include "topolift/domains.hpp"

namespace topolift {

/// Every k-simplex becomes a cell of rank k; monotonicity is inherited from
/// downward closure.
inline CombinatorialComplex lift_sc_inclusion(const SimplicialComplex& sc) {
    std::vector<std::pair<VertexSet, int>> cells;
    for (int d = 1; d <= sc.max_dim(); ++d)
        for (const auto& s : sc.simplices[static_cast<size_t>(d)]) cells.push_back({s, d});
    return make_combinatorial_complex(sc.n, cells);
}

/// Boundary-incidence graph of a cell complex: one graph vertex per cell
/// (vertices, then edges, then 2-cells, canonical order), one graph edge per
/// (cell, boundary cell of one rank lower) incidence. Node features are the
/// one-hot rank tag of width 3.
inline Graph lift_cell_encoding(const CellComplex& cc) {
    const int ne = static_cast<int>(cc.edges.size());
    const int nc = static_cast<int>(cc.two_cells.size());
    const int total = cc.n + ne + nc;

    std::vector<std::array<Vertex, 2>> out;
    for (int e = 0; e < ne; ++e) {
        const int id = cc.n + e;
        out.push_back({cc.edges[static_cast<size_t>(e)][0], id});
        out.push_back({cc.edges[static_cast<size_t>(e)][1], id});
    }
    for (int c = 0; c < nc; ++c) {
        const int id = cc.n + ne + c;
        const auto& cyc = cc.two_cells[static_cast<size_t>(c)];
        for (size_t j = 0; j < cyc.size(); ++j) {
            const Vertex a = cyc[j], b = cyc[(j + 1) % cyc.size()];
            const std::array<Vertex, 2> edge{std::min(a, b), std::max(a, b)};
            const auto it = std::lower_bound(cc.edges.begin(), cc.edges.end(), edge);
            out.push_back({cc.n + static_cast<int>(it - cc.edges.begin()), id});
        }
    }

    Matrix features(static_cast<size_t>(total), std::vector<double>(3, 0.0));
    for (int i = 0; i < total; ++i) {
        const int rank = i < cc.n ? 0 : (i < cc.n + ne ? 1 : 2);
        features[static_cast<size_t>(i)][static_cast<size_t>(rank)] = 1.0;
    }
    return make_graph(total, std::move(out), std::move(features), std::nullopt);
}

} // namespace topolift
