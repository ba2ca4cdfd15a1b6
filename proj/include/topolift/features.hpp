#pragma once

// Feature liftings: pushing per-vertex features to every cell of a lifted
// object by aggregating over the cell's constituent vertices. Rank-0 cells
// keep the input rows unchanged.

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "topolift/domains.hpp"

namespace topolift {

enum class Aggregation { Sum, Mean, Max };

inline std::optional<Aggregation> parse_aggregation(std::string_view s) {
    if (s == "sum") return Aggregation::Sum;
    if (s == "mean") return Aggregation::Mean;
    if (s == "max") return Aggregation::Max;
    return std::nullopt;
}

inline std::string_view aggregation_name(Aggregation a) {
    switch (a) {
        case Aggregation::Sum: return "sum";
        case Aggregation::Mean: return "mean";
        case Aggregation::Max: return "max";
    }
    return "?";
}

namespace detail {

/// Calls fn(rank, key, vertices) for every cell of the target object.
/// For 2-cells of a cell complex the key is the boundary cycle while the
/// vertex list is its sorted support.
template <typename Fn>
void for_each_cell(const SimplicialComplex& sc, Fn&& fn) {
    for (int d = 0; d <= sc.max_dim(); ++d)
        for (const auto& s : sc.simplices[static_cast<size_t>(d)]) fn(d, s, s);
}

template <typename Fn>
void for_each_cell(const Hypergraph& hg, Fn&& fn) {
    for (Vertex v = 0; v < hg.n; ++v) {
        VertexSet s{v};
        fn(0, s, s);
    }
    for (const auto& he : hg.hyperedges) fn(1, he, he);
}

template <typename Fn>
void for_each_cell(const CellComplex& cc, Fn&& fn) {
    for (Vertex v = 0; v < cc.n; ++v) {
        VertexSet s{v};
        fn(0, s, s);
    }
    for (const auto& e : cc.edges) {
        VertexSet s{e[0], e[1]};
        fn(1, s, s);
    }
    for (const auto& cyc : cc.two_cells) {
        VertexSet support(cyc.begin(), cyc.end());
        std::sort(support.begin(), support.end());
        fn(2, cyc, support);
    }
}

template <typename Fn>
void for_each_cell(const CombinatorialComplex& ccc, Fn&& fn) {
    // rank ascending then lexicographic, matching the serialized cell order
    std::vector<std::pair<int, const VertexSet*>> cells;
    cells.reserve(ccc.cells.size());
    for (const auto& [verts, rank] : ccc.cells) cells.push_back({rank, &verts});
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : *a.second < *b.second;
    });
    for (const auto& [rank, verts] : cells) fn(rank, *verts, *verts);
}

inline std::vector<double> aggregate_rows(const Matrix& rows, const VertexSet& verts,
                                          Aggregation agg) {
    const size_t width = rows.empty() ? 0 : rows[0].size();
    std::vector<double> out(width, agg == Aggregation::Max
                                       ? -std::numeric_limits<double>::infinity()
                                       : 0.0);
    for (Vertex v : verts) {
        const auto& row = rows[static_cast<size_t>(v)];
        for (size_t j = 0; j < width; ++j) {
            if (agg == Aggregation::Max)
                out[j] = std::max(out[j], row[j]);
            else
                out[j] += row[j];
        }
    }
    if (agg == Aggregation::Mean && !verts.empty())
        for (double& x : out) x /= static_cast<double>(verts.size());
    return out;
}

template <typename Target>
FeatureMatrix lift_features_impl(const Target& target, int n, const Matrix& node_features,
                                 Aggregation agg) {
    if (static_cast<int>(node_features.size()) != n)
        throw DomainError("lift_features: feature row count (" +
                          std::to_string(node_features.size()) + ") != vertex count (" +
                          std::to_string(n) + ")");
    const size_t width = node_features.empty() ? 0 : node_features[0].size();
    if (width == 0) throw DomainError("lift_features: empty feature rows");
    if (!rectangular(node_features, width))
        throw DomainError("lift_features: ragged feature matrix");
    FeatureMatrix fm;
    fm.feature_dim = static_cast<int>(width);
    for_each_cell(target, [&](int rank, const std::vector<Vertex>& key, const VertexSet& verts) {
        if (verts.size() == 1)
            fm.rows.emplace(CellRef{rank, key}, node_features[static_cast<size_t>(verts[0])]);
        else
            fm.rows.emplace(CellRef{rank, key}, aggregate_rows(node_features, verts, agg));
    });
    return fm;
}

} // namespace detail

inline FeatureMatrix lift_features(const SimplicialComplex& sc, const Matrix& node_features,
                                   Aggregation agg) {
    return detail::lift_features_impl(sc, sc.n, node_features, agg);
}

inline FeatureMatrix lift_features(const Hypergraph& hg, const Matrix& node_features,
                                   Aggregation agg) {
    return detail::lift_features_impl(hg, hg.n, node_features, agg);
}

inline FeatureMatrix lift_features(const CellComplex& cc, const Matrix& node_features,
                                   Aggregation agg) {
    return detail::lift_features_impl(cc, cc.n, node_features, agg);
}

inline FeatureMatrix lift_features(const CombinatorialComplex& ccc, const Matrix& node_features,
                                   Aggregation agg) {
    return detail::lift_features_impl(ccc, ccc.n, node_features, agg);
}

/// Dispatch over a domain object; only complex-like and hypergraph targets
/// carry per-cell features (graphs and pointclouds store node features
/// inline instead).
inline FeatureMatrix lift_features(const DomainObject& obj, const Matrix& node_features,
                                   Aggregation agg) {
    return std::visit(
        [&](const auto& x) -> FeatureMatrix {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SimplicialComplex> || std::is_same_v<T, Hypergraph> ||
                          std::is_same_v<T, CellComplex> ||
                          std::is_same_v<T, CombinatorialComplex>)
                return lift_features(x, node_features, agg);
            else
                throw UsageError(std::string("lift_features: target kind '") +
                                 std::string(kind_name(kind_of(obj))) +
                                 "' keeps node features inline; feature lifting applies to "
                                 "simplicial/cell/combinatorial/hypergraph targets");
        },
        obj);
}

inline int feature_dim(const FeatureMatrix& fm) {
    if (fm.rows.empty()) throw DomainError("feature_dim: empty feature matrix");
    return fm.feature_dim;
}

/// Every keyed cell must exist in the complex the features were lifted for.
template <typename Target>
std::vector<std::string> validate_against(const FeatureMatrix& fm, const Target& target) {
    std::vector<std::string> out = validate(fm);
    std::map<CellRef, bool> known;
    detail::for_each_cell(target,
                          [&](int rank, const std::vector<Vertex>& key, const VertexSet&) {
                              known.emplace(CellRef{rank, key}, true);
                          });
    for (const auto& [ref, row] : fm.rows)
        if (!known.count(ref))
            out.push_back("features: keyed cell " + detail::show_set(ref.key) + " at rank " +
                          std::to_string(ref.rank) + " does not exist in the target");
    return out;
}

} // namespace topolift
