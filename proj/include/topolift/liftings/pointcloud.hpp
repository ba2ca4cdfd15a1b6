#pragma once

// Liftings with a pointcloud source: k-nearest-neighbor graphs, Vietoris-Rips
// and Delaunay complexes, and Voronoi landmark hypergraphs. All tie-breaking
// is by lowest index so outputs are reproducible byte for byte.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "topolift/domains.hpp"
#include "topolift/queries.hpp"

namespace topolift {

enum class KnnMode { Union, Mutual };

inline std::optional<KnnMode> parse_knn_mode(std::string_view s) {
    if (s == "union") return KnnMode::Union;
    if (s == "mutual") return KnnMode::Mutual;
    return std::nullopt;
}

namespace detail {

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        d += t * t;
    }
    return d;
}

} // namespace detail

/// Connects each point to its k nearest other points (Euclidean, ties broken
/// by lower index). Union mode keeps a pair if either direction selected it,
/// mutual mode only if both did. Node features are copied from the source.
inline Graph lift_knn_graph(const PointCloud& pc, int k, KnnMode mode) {
    const int n = pc.size();
    if (n < 2) throw DomainError("knn_graph: needs at least 2 points");
    if (k < 1) throw UsageError("knn_graph: k must be >= 1");
    if (k >= n) throw DomainError("knn_graph: k must be < point count");

    std::vector<std::vector<char>> chose(static_cast<size_t>(n),
                                         std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> dist;
        dist.reserve(static_cast<size_t>(n) - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) dist.push_back({detail::squared_distance(pc.points[static_cast<size_t>(i)],
                                                                 pc.points[static_cast<size_t>(j)]),
                                        j});
        std::sort(dist.begin(), dist.end());  // (distance, index): ties go to lower index
        for (int t = 0; t < k; ++t) chose[static_cast<size_t>(i)][static_cast<size_t>(dist[static_cast<size_t>(t)].second)] = 1;
    }
    std::vector<std::array<Vertex, 2>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool ij = chose[static_cast<size_t>(i)][static_cast<size_t>(j)];
            const bool ji = chose[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if ((mode == KnnMode::Union && (ij || ji)) || (mode == KnnMode::Mutual && ij && ji))
                edges.push_back({i, j});
        }
    return make_graph(n, std::move(edges), pc.node_features, std::nullopt);
}

/// Pairs at distance <= eps form the 1-skeleton; higher simplices up to
/// max_dim are the cliques of that skeleton (flag completion).
inline SimplicialComplex lift_vietoris_rips(const PointCloud& pc, double eps, int max_dim) {
    if (!(eps > 0.0)) throw UsageError("vietoris_rips: eps must be positive");
    if (max_dim < 1) throw UsageError("vietoris_rips: max_dim must be >= 1");
    const int n = pc.size();
    const double eps2 = eps * eps;
    std::vector<std::array<Vertex, 2>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (detail::squared_distance(pc.points[static_cast<size_t>(i)],
                                         pc.points[static_cast<size_t>(j)]) <= eps2)
                edges.push_back({i, j});

    Adjacency adj(n, edges);
    std::vector<std::vector<VertexSet>> by_dim(static_cast<size_t>(max_dim) + 1);
    detail::enumerate_cliques(adj, max_dim + 1, [&](const VertexSet& clique) {
        by_dim[clique.size() - 1].push_back(clique);
    });
    return assemble_closed_complex(n, std::move(by_dim));
}

namespace detail {

struct Tri {
    std::array<int, 3> v;   // vertex indices into the working point list
    bool has_super(int first_super) const {
        return v[0] >= first_super || v[1] >= first_super || v[2] >= first_super;
    }
};

/// Sign of the in-circle determinant for triangle (a,b,c) and query p;
/// positive when p lies strictly inside the circumcircle of a
/// counterclockwise triangle.
inline double incircle_det(const std::array<double, 2>& a, const std::array<double, 2>& b,
                           const std::array<double, 2>& c, const std::array<double, 2>& p) {
    const double ax = a[0] - p[0], ay = a[1] - p[1];
    const double bx = b[0] - p[0], by = b[1] - p[1];
    const double cx = c[0] - p[0], cy = c[1] - p[1];
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

inline double orient2d(const std::array<double, 2>& a, const std::array<double, 2>& b,
                       const std::array<double, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

} // namespace detail

/// Bowyer-Watson incremental Delaunay triangulation in the plane. Points are
/// inserted in index order inside an enclosing super-triangle; triangles
/// whose circumcircle contains the new point are removed and their boundary
/// re-triangulated. Degeneracies among input points (four nearly cocircular,
/// duplicates, all collinear) are reported as errors rather than tie-broken.
inline SimplicialComplex lift_delaunay(const PointCloud& pc) {
    constexpr double kDegenerateTol = 1e-9;
    if (pc.dim != 2) throw DomainError("delaunay: requires 2-dimensional points");
    const int n = pc.size();
    if (n < 3) throw DomainError("delaunay: needs at least 3 points");

    std::vector<std::array<double, 2>> pts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        pts[static_cast<size_t>(i)] = {pc.points[static_cast<size_t>(i)][0],
                                       pc.points[static_cast<size_t>(i)][1]};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)])
                throw DomainError("delaunay: duplicate points " + std::to_string(i) + " and " +
                                  std::to_string(j));

    double cross_max = 0.0;
    for (int i = 2; i < n; ++i)
        cross_max = std::max(cross_max, std::abs(detail::orient2d(pts[0], pts[1],
                                                                  pts[static_cast<size_t>(i)])));
    if (cross_max <= kDegenerateTol) throw DomainError("delaunay: input points are collinear");

    // enclosing super-triangle, far enough out not to disturb interior circles
    double lo_x = pts[0][0], hi_x = pts[0][0], lo_y = pts[0][1], hi_y = pts[0][1];
    for (const auto& p : pts) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
    const double mid_x = (lo_x + hi_x) / 2, mid_y = (lo_y + hi_y) / 2;
    const int first_super = n;
    pts.push_back({mid_x - 30 * span, mid_y - 10 * span});
    pts.push_back({mid_x + 30 * span, mid_y - 10 * span});
    pts.push_back({mid_x, mid_y + 30 * span});

    std::vector<detail::Tri> tris{{{first_super, first_super + 1, first_super + 2}}};
    for (int p = 0; p < n; ++p) {
        const auto& q = pts[static_cast<size_t>(p)];
        std::vector<size_t> bad;
        for (size_t t = 0; t < tris.size(); ++t) {
            auto [i, j, k] = tris[t].v;
            auto a = pts[static_cast<size_t>(i)], b = pts[static_cast<size_t>(j)],
                 c = pts[static_cast<size_t>(k)];
            if (detail::orient2d(a, b, c) < 0) std::swap(b, c);  // incircle_det expects CCW
            const double det = detail::incircle_det(a, b, c, q);
            if (!tris[t].has_super(first_super) && std::abs(det) <= kDegenerateTol)
                throw DomainError("delaunay: cocircular degeneracy at point " +
                                  std::to_string(p));
            if (det > kDegenerateTol) bad.push_back(t);
        }
        // boundary of the bad region = edges appearing in exactly one bad triangle
        std::map<std::array<int, 2>, int> edge_count;
        for (size_t t : bad)
            for (int e = 0; e < 3; ++e) {
                int u = tris[t].v[static_cast<size_t>(e)];
                int v = tris[t].v[static_cast<size_t>((e + 1) % 3)];
                edge_count[{std::min(u, v), std::max(u, v)}] += 1;
            }
        std::vector<detail::Tri> next;
        next.reserve(tris.size());
        for (size_t t = 0; t < tris.size(); ++t)
            if (std::find(bad.begin(), bad.end(), t) == bad.end()) next.push_back(tris[t]);
        for (const auto& [edge, cnt] : edge_count) {
            if (cnt != 1) continue;
            // a zero-area fill triangle (p collinear with the boundary edge)
            // contributes nothing to the cavity tiling; creating it would let
            // a degenerate triangle survive to the output
            if (std::abs(detail::orient2d(pts[static_cast<size_t>(edge[0])],
                                          pts[static_cast<size_t>(edge[1])], q)) <=
                kDegenerateTol * span)
                continue;
            next.push_back({{edge[0], edge[1], p}});
        }
        tris = std::move(next);
    }

    std::vector<VertexSet> triangles;
    for (const auto& t : tris)
        if (!t.has_super(first_super)) {
            VertexSet s{t.v[0], t.v[1], t.v[2]};
            std::sort(s.begin(), s.end());
            triangles.push_back(std::move(s));
        }
    return make_simplicial_complex(n, std::move(triangles));
}

/// Greedy farthest-point sampling seeded at index 0: each step adds the
/// point maximizing the minimum distance to the chosen set (ties to the
/// lower index).
inline std::vector<int> farthest_point_landmarks(const PointCloud& pc, int m) {
    const int n = pc.size();
    if (m < 1) throw UsageError("farthest_point_landmarks: m must be >= 1");
    if (m > n) throw DomainError("farthest_point_landmarks: m exceeds point count");
    std::vector<int> landmarks{0};
    std::vector<double> min_dist(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        min_dist[static_cast<size_t>(i)] =
            detail::squared_distance(pc.points[0], pc.points[static_cast<size_t>(i)]);
    while (static_cast<int>(landmarks.size()) < m) {
        int far = 0;
        for (int i = 1; i < n; ++i)
            if (min_dist[static_cast<size_t>(i)] > min_dist[static_cast<size_t>(far)]) far = i;
        landmarks.push_back(far);
        for (int i = 0; i < n; ++i)
            min_dist[static_cast<size_t>(i)] =
                std::min(min_dist[static_cast<size_t>(i)],
                         detail::squared_distance(pc.points[static_cast<size_t>(far)],
                                                  pc.points[static_cast<size_t>(i)]));
    }
    return landmarks;
}

/// Farthest-point sampling picks m landmarks; every point joins its nearest
/// landmark's cell and cells of size >= 2 become hyperedges.
inline Hypergraph lift_voronoi_landmarks(const PointCloud& pc, int m) {
    const int n = pc.size();
    if (m < 1) throw UsageError("voronoi_landmarks: m must be >= 1");
    if (m > n) throw DomainError("voronoi_landmarks: m exceeds point count");
    const std::vector<int> landmarks = farthest_point_landmarks(pc, m);

    std::vector<VertexSet> cells(landmarks.size());
    for (int i = 0; i < n; ++i) {
        size_t best = 0;
        double best_d = detail::squared_distance(pc.points[static_cast<size_t>(landmarks[0])],
                                                 pc.points[static_cast<size_t>(i)]);
        for (size_t l = 1; l < landmarks.size(); ++l) {
            const double d = detail::squared_distance(
                pc.points[static_cast<size_t>(landmarks[l])], pc.points[static_cast<size_t>(i)]);
            if (d < best_d) {  // ties stay with the earlier landmark
                best_d = d;
                best = l;
            }
        }
        cells[best].push_back(i);
    }
    std::vector<VertexSet> hyperedges;
    for (auto& cell : cells)
        if (cell.size() >= 2) hyperedges.push_back(std::move(cell));
    return make_hypergraph(n, std::move(hyperedges));
}

} // namespace topolift
