#pragma once

// Liftings with a hypergraph source.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "topolift/domains.hpp"

namespace topolift {

/// Dowker-style closure: every subset of size <= max_dim+1 of each hyperedge
/// becomes a simplex; all n vertices are kept at dimension 0.
inline SimplicialComplex lift_downward_closure(const Hypergraph& hg, int max_dim) {
    if (max_dim < 1) throw UsageError("downward_closure: max_dim must be >= 1");
    const size_t max_size = static_cast<size_t>(max_dim) + 1;
    std::set<VertexSet> found;
    VertexSet subset;
    std::function<void(const VertexSet&, size_t)> grow = [&](const VertexSet& pool, size_t from) {
        if (subset.size() >= 2) found.insert(subset);
        if (subset.size() == max_size) return;
        for (size_t i = from; i < pool.size(); ++i) {
            subset.push_back(pool[i]);
            grow(pool, i + 1);
            subset.pop_back();
        }
    };
    for (const auto& he : hg.hyperedges) grow(he, 0);

    std::vector<std::vector<VertexSet>> by_dim(max_size);
    for (const auto& s : found) by_dim[s.size() - 1].push_back(s);
    return assemble_closed_complex(hg.n, std::move(by_dim));
}

/// Universal strict lifting: each hyperedge e becomes a cell of rank |e|-1,
/// so strictly contained cells have strictly smaller rank.
inline CombinatorialComplex lift_strict_ccc(const Hypergraph& hg) {
    std::vector<std::pair<VertexSet, int>> cells;
    cells.reserve(hg.hyperedges.size());
    for (const auto& he : hg.hyperedges)
        cells.push_back({he, static_cast<int>(he.size()) - 1});
    return make_combinatorial_complex(hg.n, cells);
}

} // namespace topolift
