#pragma once

// Signed boundary matrices, incidence matrices and Laplacians in coordinate
// (triplet) form. Simplices are oriented by ascending vertex order; the face
// obtained by deleting the i-th vertex of a sorted simplex carries sign
// (-1)^i. Values stay exact for boundary/incidence matrices (entries in
// {-1,0,+1}) and for their small integer products.

#include <algorithm>
#include <map>
#include <vector>

#include "topolift/domains.hpp"

namespace topolift {

struct SparseEntry {
    int row = 0;
    int col = 0;
    double value = 0.0;

    bool operator==(const SparseEntry&) const = default;
};

/// Coordinate-form sparse matrix; entries sorted by (row, col), one entry
/// per coordinate, exact zeros dropped.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseEntry> entries;

    double at(int r, int c) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{r, c},
                                   [](const SparseEntry& e, const std::pair<int, int>& key) {
                                       return std::pair{e.row, e.col} < key;
                                   });
        if (it != entries.end() && it->row == r && it->col == c) return it->value;
        return 0.0;
    }
    bool operator==(const SparseMatrix&) const = default;
};

inline SparseMatrix sparse_from_triplets(int rows, int cols, std::vector<SparseEntry> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return std::pair{a.row, a.col} < std::pair{b.row, b.col};
    });
    std::vector<SparseEntry> merged;
    for (const auto& t : triplets) {
        if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
            merged.back().value += t.value;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const SparseEntry& e) { return e.value == 0.0; });
    return SparseMatrix{rows, cols, std::move(merged)};
}

inline SparseMatrix transpose(const SparseMatrix& m) {
    std::vector<SparseEntry> t;
    t.reserve(m.entries.size());
    for (const auto& e : m.entries) t.push_back({e.col, e.row, e.value});
    return sparse_from_triplets(m.cols, m.rows, std::move(t));
}

inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("sparse multiply: shape mismatch");
    // b.entries sorted by (row, col): locate each row's range by binary search
    std::map<std::pair<int, int>, double> acc;
    for (const auto& ea : a.entries) {
        auto lo = std::lower_bound(b.entries.begin(), b.entries.end(), ea.col,
                                   [](const SparseEntry& e, int row) { return e.row < row; });
        for (auto it = lo; it != b.entries.end() && it->row == ea.col; ++it)
            acc[{ea.row, it->col}] += ea.value * it->value;
    }
    std::vector<SparseEntry> out;
    out.reserve(acc.size());
    for (const auto& [rc, v] : acc)
        if (v != 0.0) out.push_back({rc.first, rc.second, v});
    return SparseMatrix{a.rows, b.cols, std::move(out)};
}

inline SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("sparse add: shape mismatch");
    std::vector<SparseEntry> t = a.entries;
    t.insert(t.end(), b.entries.begin(), b.entries.end());
    return sparse_from_triplets(a.rows, a.cols, std::move(t));
}

inline Matrix to_dense(const SparseMatrix& m) {
    Matrix d(static_cast<size_t>(m.rows), std::vector<double>(static_cast<size_t>(m.cols), 0.0));
    for (const auto& e : m.entries)
        d[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] = e.value;
    return d;
}

/// Signed boundary operator from k-simplices to (k-1)-simplices. Rows and
/// columns follow the complex's canonical simplex order. k may exceed
/// max_dim, in which case the matrix has zero columns.
inline SparseMatrix boundary_matrix(const SimplicialComplex& sc, int k) {
    if (k < 1) throw UsageError("boundary_matrix: k must be >= 1");
    const int rows = sc.count(k - 1);
    const int cols = sc.count(k);
    if (cols == 0) return SparseMatrix{rows, 0, {}};
    const auto& faces = sc.simplices[static_cast<size_t>(k - 1)];
    const auto& cells = sc.simplices[static_cast<size_t>(k)];
    std::vector<SparseEntry> t;
    t.reserve(cells.size() * static_cast<size_t>(k + 1));
    for (size_t c = 0; c < cells.size(); ++c) {
        const auto& s = cells[c];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            VertexSet face;
            face.reserve(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j)
                if (j != drop) face.push_back(s[j]);
            auto it = std::lower_bound(faces.begin(), faces.end(), face);
            const int r = static_cast<int>(it - faces.begin());
            const double sign = (drop % 2 == 0) ? 1.0 : -1.0;
            t.push_back({r, static_cast<int>(c), sign});
        }
    }
    return sparse_from_triplets(rows, cols, std::move(t));
}

/// L_k = B_k^T B_k + B_{k+1} B_{k+1}^T with B_0 and B_{max_dim+1} empty.
inline SparseMatrix hodge_laplacian(const SimplicialComplex& sc, int k) {
    if (k < 0 || k > sc.max_dim()) throw UsageError("hodge_laplacian: k out of range");
    const int nk = sc.count(k);
    SparseMatrix lap{nk, nk, {}};
    if (k >= 1) {
        SparseMatrix bk = boundary_matrix(sc, k);
        lap = add(lap, multiply(transpose(bk), bk));
    }
    SparseMatrix bk1 = boundary_matrix(sc, k + 1);
    lap = add(lap, multiply(bk1, transpose(bk1)));
    return lap;
}

/// Vertex-hyperedge incidence; columns follow the canonical hyperedge order.
inline SparseMatrix incidence_matrix(const Hypergraph& hg) {
    std::vector<SparseEntry> t;
    for (size_t j = 0; j < hg.hyperedges.size(); ++j)
        for (Vertex v : hg.hyperedges[j]) t.push_back({v, static_cast<int>(j), 1.0});
    return sparse_from_triplets(hg.n, static_cast<int>(hg.hyperedges.size()), std::move(t));
}

/// Combinatorial Laplacian L = D - A.
inline SparseMatrix graph_laplacian(const Graph& g) {
    std::vector<SparseEntry> t;
    std::vector<double> deg(static_cast<size_t>(g.n), 0.0);
    for (const auto& e : g.edges) {
        deg[static_cast<size_t>(e[0])] += 1.0;
        deg[static_cast<size_t>(e[1])] += 1.0;
        t.push_back({e[0], e[1], -1.0});
        t.push_back({e[1], e[0], -1.0});
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (deg[static_cast<size_t>(v)] != 0.0) t.push_back({v, v, deg[static_cast<size_t>(v)]});
    return sparse_from_triplets(g.n, g.n, std::move(t));
}

} // namespace topolift
