#pragma once

// Liftings with a graph source: clique/flag complexes, neighborhood and line
// complexes, chordless-cycle cell complexes, k-hop and curvature-filtered
// hypergraphs, n-hop combinatorial complexes, and a Laplacian-eigenmap
// embedding back to a pointcloud.

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "topolift/domains.hpp"
#include "topolift/operators.hpp"
#include "topolift/queries.hpp"

namespace topolift {

/// Flag (clique) complex: k-simplices are the (k+1)-cliques of g, capped at
/// max_dim.
inline SimplicialComplex lift_clique(const Graph& g, int max_dim) {
    if (max_dim < 1) throw UsageError("clique: max_dim must be >= 1");
    Adjacency adj(g);
    std::vector<std::vector<VertexSet>> by_dim(static_cast<size_t>(max_dim) + 1);
    detail::enumerate_cliques(adj, max_dim + 1, [&](const VertexSet& clique) {
        by_dim[clique.size() - 1].push_back(clique);
    });
    return assemble_closed_complex(g.n, std::move(by_dim));
}

/// Simplices are the vertex sets dominated by some common neighbor: S is a
/// simplex iff a vertex w is adjacent to every member of S. Capped at
/// max_dim; every vertex is kept as a 0-simplex.
inline SimplicialComplex lift_neighborhood_complex(const Graph& g, int max_dim) {
    if (max_dim < 1) throw UsageError("neighborhood_complex: max_dim must be >= 1");
    const size_t max_size = static_cast<size_t>(max_dim) + 1;
    Adjacency adj(g);
    std::set<VertexSet> found;
    VertexSet subset;
    // all subsets of N(w) of size <= max_dim+1, for every w
    std::function<void(const std::vector<Vertex>&, size_t)> grow =
        [&](const std::vector<Vertex>& pool, size_t from) {
            if (!subset.empty()) found.insert(subset);
            if (subset.size() == max_size) return;
            for (size_t i = from; i < pool.size(); ++i) {
                subset.push_back(pool[i]);
                grow(pool, i + 1);
                subset.pop_back();
            }
        };
    for (Vertex w = 0; w < g.n; ++w) grow(adj.neighbors(w), 0);

    std::vector<std::vector<VertexSet>> by_dim(max_size);
    for (const auto& s : found) by_dim[s.size() - 1].push_back(s);
    return assemble_closed_complex(g.n, std::move(by_dim));
}

/// Line graph of g: one vertex per edge (in canonical edge order), edges
/// between source edges sharing an endpoint.
inline Graph line_graph(const Graph& g) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::array<Vertex, 2>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto &a = g.edges[static_cast<size_t>(i)], &b = g.edges[static_cast<size_t>(j)];
            if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1])
                edges.push_back({i, j});
        }
    return make_graph(m, std::move(edges));
}

/// Clique complex of the line graph.
inline SimplicialComplex lift_line(const Graph& g, int max_dim) {
    if (g.edges.empty()) throw DomainError("line: graph has no edges");
    return lift_clique(line_graph(g), max_dim);
}

namespace detail {

/// Enumerates every chordless cycle of length 3..max_len exactly once, as
/// the canonical sequence (smallest vertex first, smaller neighbor second).
/// Paths grow from the smallest cycle vertex s through vertices > s; a
/// candidate adjacent to s can only close the cycle (an edge back to s would
/// chord any longer cycle), and candidates adjacent to an interior vertex
/// are chords and die immediately.
inline std::vector<std::vector<Vertex>> chordless_cycles(const Graph& g, int max_len) {
    Adjacency adj(g);
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<size_t>(g.n), 0);

    std::function<void()> extend = [&]() {
        const Vertex s = path.front();
        const Vertex last = path.back();
        for (Vertex u : adj.neighbors(last)) {
            if (u <= s || on_path[static_cast<size_t>(u)]) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (adj.adjacent(u, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (adj.adjacent(u, s)) {
                // closing edge; keep one direction per cycle: second < last
                if (static_cast<int>(path.size()) + 1 >= 3 && path[1] < u &&
                    static_cast<int>(path.size()) + 1 <= max_len) {
                    std::vector<Vertex> cycle = path;
                    cycle.push_back(u);
                    cycles.push_back(std::move(cycle));
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 2 > max_len) continue;
            path.push_back(u);
            on_path[static_cast<size_t>(u)] = 1;
            extend();
            path.pop_back();
            on_path[static_cast<size_t>(u)] = 0;
        }
    };

    for (Vertex s = 0; s < g.n; ++s) {
        for (Vertex a : adj.neighbors(s)) {
            if (a <= s) continue;
            path = {s, a};
            on_path[static_cast<size_t>(s)] = on_path[static_cast<size_t>(a)] = 1;
            extend();
            on_path[static_cast<size_t>(s)] = on_path[static_cast<size_t>(a)] = 0;
        }
    }
    return cycles;
}

} // namespace detail

/// 2-cells are the chordless cycles of g up to max_len, attached to g as the
/// 1-skeleton.
inline CellComplex lift_cycles_to_cells(const Graph& g, int max_len) {
    if (max_len < 3) throw UsageError("cycles_to_cells: max_len must be >= 3");
    return make_cell_complex(g.n, g.edges, detail::chordless_cycles(g, max_len));
}

/// One candidate hyperedge per vertex: its k-hop neighborhood. Candidates of
/// size <= 1 are dropped, duplicates merged.
inline Hypergraph lift_khop_hypergraph(const Graph& g, int k) {
    if (k < 1) throw UsageError("khop_hypergraph: k must be >= 1");
    std::vector<VertexSet> candidates;
    for (Vertex v = 0; v < g.n; ++v) {
        VertexSet hood = k_hop_neighborhood(g, v, k);
        if (hood.size() >= 2) candidates.push_back(std::move(hood));
    }
    return make_hypergraph(g.n, std::move(candidates));
}

/// Forman curvature of an edge (u,v) in an unweighted graph without higher
/// cells: F = 4 - deg(u) - deg(v).
inline double forman_curvature(const Graph& g, const std::array<Vertex, 2>& edge) {
    Adjacency adj(g);
    return 4.0 - adj.degree(edge[0]) - adj.degree(edge[1]);
}

/// Deletes edges of curvature below the threshold; the surviving connected
/// components of size >= 2 become hyperedges.
inline Hypergraph lift_forman_ricci(const Graph& g, double threshold) {
    Adjacency adj(g);
    std::vector<std::array<Vertex, 2>> kept;
    for (const auto& e : g.edges)
        if (4.0 - adj.degree(e[0]) - adj.degree(e[1]) >= threshold) kept.push_back(e);
    Components comp = connected_components(g.n, kept);
    std::vector<VertexSet> groups(static_cast<size_t>(comp.count));
    for (Vertex v = 0; v < g.n; ++v) groups[static_cast<size_t>(comp.label[static_cast<size_t>(v)])].push_back(v);
    std::vector<VertexSet> hyperedges;
    for (auto& grp : groups)
        if (grp.size() >= 2) hyperedges.push_back(std::move(grp));
    return make_hypergraph(g.n, std::move(hyperedges));
}

/// Rank-0 singletons, rank-1 edges, rank-2 k-hop neighborhoods of size >= 3
/// (deduplicated, and skipped when the vertex set already appears at a lower
/// rank). Monotone by construction.
inline CombinatorialComplex lift_nhop_ccc(const Graph& g, int k) {
    if (k < 1) throw UsageError("nhop_ccc: k must be >= 1");
    std::vector<std::pair<VertexSet, int>> cells;
    std::set<VertexSet> lower;
    for (const auto& e : g.edges) {
        VertexSet s{e[0], e[1]};
        cells.push_back({s, 1});
        lower.insert(std::move(s));
    }
    for (Vertex v = 0; v < g.n; ++v) {
        VertexSet hood = k_hop_neighborhood(g, v, k);
        if (hood.size() >= 3 && !lower.count(hood)) cells.push_back({std::move(hood), 2});
    }
    return make_combinatorial_complex(g.n, cells);
}

/// Laplacian eigenmap: rows of the eigenvectors for the d smallest nonzero
/// Laplacian eigenvalues, each unit-norm with the first largest-magnitude
/// component made positive.
inline PointCloud lift_spectral_embedding(const Graph& g, int d) {
    if (d < 1) throw UsageError("spectral_embedding: d must be >= 1");
    if (g.n < 2 || connected_components(g).count != 1)
        throw DomainError("spectral_embedding: graph must be connected");
    if (d > g.n - 1) throw DomainError("spectral_embedding: d must be <= n - 1");

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n, g.n);
    for (const auto& e : graph_laplacian(g).entries) lap(e.row, e.col) = e.value;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success)
        throw DomainError("spectral_embedding: eigendecomposition failed");

    // eigenvalues ascending; skip the constant eigenvector at eigenvalue 0
    std::vector<std::vector<double>> points(static_cast<size_t>(g.n),
                                            std::vector<double>(static_cast<size_t>(d), 0.0));
    for (int c = 0; c < d; ++c) {
        Eigen::VectorXd vec = solver.eigenvectors().col(c + 1);
        vec.normalize();
        // leading component: first index whose magnitude ties the maximum
        // (within a small tolerance, so symmetric vectors pick a stable sign)
        double max_abs = 0.0;
        for (int i = 0; i < g.n; ++i) max_abs = std::max(max_abs, std::abs(vec(i)));
        int lead = 0;
        for (int i = 0; i < g.n; ++i)
            if (std::abs(vec(i)) >= max_abs - 1e-12) {
                lead = i;
                break;
            }
        if (vec(lead) < 0) vec = -vec;
        for (int i = 0; i < g.n; ++i) points[static_cast<size_t>(i)][static_cast<size_t>(c)] = vec(i);
    }
    return make_pointcloud(d, std::move(points));
}

} // namespace topolift
