#pragma once

// Independent brute-force oracles for the property tests. These deliberately
// avoid the library's algorithms: cliques come from subset enumeration,
// connectivity from a fresh union-find, circumcircles from explicit center /
// radius arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "topolift/domains.hpp"

namespace oracle {

inline bool pair_adjacent(const topolift::Graph& g, int u, int v) {
    const std::array<int, 2> e{std::min(u, v), std::max(u, v)};
    return std::binary_search(g.edges.begin(), g.edges.end(), e);
}

/// All cliques grouped by size, via enumeration of every vertex subset.
/// Only usable for small n.
inline std::vector<std::vector<topolift::VertexSet>> all_cliques_by_size(
    const topolift::Graph& g, int max_size) {
    std::vector<std::vector<topolift::VertexSet>> by_size(static_cast<size_t>(max_size) + 1);
    const std::uint32_t limit = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        topolift::VertexSet subset;
        for (int v = 0; v < g.n; ++v)
            if (mask & (std::uint32_t{1} << v)) subset.push_back(v);
        if (static_cast<int>(subset.size()) > max_size) continue;
        bool clique = true;
        for (size_t i = 0; i < subset.size() && clique; ++i)
            for (size_t j = i + 1; j < subset.size() && clique; ++j)
                if (!pair_adjacent(g, subset[i], subset[j])) clique = false;
        if (clique) by_size[subset.size()].push_back(std::move(subset));
    }
    for (auto& layer : by_size) std::sort(layer.begin(), layer.end());
    return by_size;
}

/// Maximal cliques: every clique with no single-vertex extension.
inline std::vector<topolift::VertexSet> maximal_cliques_brute(const topolift::Graph& g) {
    auto by_size = all_cliques_by_size(g, g.n);
    std::vector<topolift::VertexSet> out;
    for (const auto& layer : by_size)
        for (const auto& c : layer) {
            bool extensible = false;
            for (int v = 0; v < g.n && !extensible; ++v) {
                if (std::binary_search(c.begin(), c.end(), v)) continue;
                bool adj_all = true;
                for (int u : c)
                    if (!pair_adjacent(g, u, v)) {
                        adj_all = false;
                        break;
                    }
                extensible = adj_all;
            }
            if (!extensible) out.push_back(c);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Chordless cycles by brute force: every vertex subset, every cyclic order
/// (fixed to start at the minimum with second < last), kept when consecutive
/// pairs are edges and non-consecutive pairs are not. Only for tiny n.
inline std::vector<std::vector<int>> chordless_cycles_brute(const topolift::Graph& g,
                                                            int max_len) {
    std::vector<std::vector<int>> out;
    const std::uint32_t limit = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (mask & (std::uint32_t{1} << v)) verts.push_back(v);
        const int len = static_cast<int>(verts.size());
        if (len < 3 || len > max_len) continue;
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back()) continue;  // reflection dedup
            std::vector<int> cycle{verts[0]};
            cycle.insert(cycle.end(), rest.begin(), rest.end());
            bool ok = true;
            for (int i = 0; i < len && ok; ++i)
                for (int j = i + 1; j < len && ok; ++j) {
                    const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                    if (pair_adjacent(g, cycle[static_cast<size_t>(i)],
                                      cycle[static_cast<size_t>(j)]) != consecutive)
                        ok = false;
                }
            if (ok) out.push_back(cycle);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int component_count_brute(int n, const std::vector<std::array<int, 2>>& edges) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] =
                                                        parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& e : edges) parent[static_cast<size_t>(find(e[0]))] = find(e[1]);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++count;
    return count;
}

/// Circumcircle of a triangle by explicit center/radius; returns whether the
/// query point lies strictly inside within the tolerance.
inline bool circumcircle_contains(const std::array<double, 2>& a, const std::array<double, 2>& b,
                                  const std::array<double, 2>& c, const std::array<double, 2>& p,
                                  double tol) {
    const double d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
    if (d == 0.0) return true;  // degenerate triangle: treat as containing everything
    const double a2 = a[0] * a[0] + a[1] * a[1];
    const double b2 = b[0] * b[0] + b[1] * b[1];
    const double c2 = c[0] * c[0] + c[1] * c[1];
    const double ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d;
    const double uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d;
    const double r2 = (a[0] - ux) * (a[0] - ux) + (a[1] - uy) * (a[1] - uy);
    const double p2 = (p[0] - ux) * (p[0] - ux) + (p[1] - uy) * (p[1] - uy);
    return p2 < r2 - tol;
}

/// Rank over the reals by Gaussian elimination with partial pivoting.
inline int dense_rank(topolift::Matrix m, double tol = 1e-9) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        for (size_t r = row + 1; r < rows; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) <= tol) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const double f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace oracle
