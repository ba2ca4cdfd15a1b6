#pragma once

// Core data types for the discrete domains handled by this library:
// pointclouds, graphs, hypergraphs, simplicial complexes, 2-dimensional cell
// complexes, and combinatorial complexes. All types are plain value types
// with a canonical representation (sorted elements, dense vertex ids in
// [0, n)) so that equality and serialization are deterministic. Invariant
// checking lives in the validate() overloads; the make_* builders construct
// canonical instances and reject malformed input outright.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topolift/errors.hpp"

namespace topolift {

using Vertex = int;
using VertexSet = std::vector<Vertex>;              // sorted ascending, unique
using Matrix = std::vector<std::vector<double>>;    // rectangular, row-major

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct PointCloud {
    int dim = 0;
    std::vector<std::vector<double>> points;        // each of size dim
    std::optional<Matrix> node_features;            // one row per point

    int size() const { return static_cast<int>(points.size()); }
    bool operator==(const PointCloud&) const = default;
};

struct Graph {
    int n = 0;
    std::vector<std::array<Vertex, 2>> edges;       // each {u,v} with u < v, sorted
    std::optional<Matrix> node_features;
    std::optional<Matrix> edge_features;            // rows follow edge order

    bool operator==(const Graph&) const = default;
};

struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> hyperedges;              // each sorted, list sorted, size >= 2

    bool operator==(const Hypergraph&) const = default;
};

/// simplices[k] holds the k-simplices as sorted (k+1)-element vertex sets;
/// dimension 0 always lists every vertex. Trailing empty dimensions are
/// trimmed so max_dim() is the highest populated dimension.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::vector<VertexSet>> simplices;

    int max_dim() const { return static_cast<int>(simplices.size()) - 1; }
    int count(int dim) const {
        if (dim < 0 || dim > max_dim()) return 0;
        return static_cast<int>(simplices[static_cast<size_t>(dim)].size());
    }
    bool operator==(const SimplicialComplex&) const = default;
};

/// Regular 2-dimensional cell complex: a 1-skeleton plus 2-cells given by
/// their boundary cycles. Cycles are stored in canonical rotation/reflection
/// (smallest vertex first, then the smaller of its two neighbors).
struct CellComplex {
    int n = 0;
    std::vector<std::array<Vertex, 2>> edges;
    std::vector<std::vector<Vertex>> two_cells;     // canonical cycles, sorted

    bool operator==(const CellComplex&) const = default;
};

/// Vertex subsets with a monotone rank function. Singletons are stored
/// explicitly with rank 0; the map keeps cells unique and ordered.
struct CombinatorialComplex {
    int n = 0;
    std::map<VertexSet, int> cells;

    int max_rank() const {
        int r = 0;
        for (const auto& [verts, rank] : cells) r = std::max(r, rank);
        return r;
    }
    bool operator==(const CombinatorialComplex&) const = default;
};

/// Identifies one cell of any domain object: its rank plus a key vector.
/// The key is the sorted vertex set, except for 2-cells of a CellComplex
/// where it is the canonical boundary cycle (two distinct cells may share a
/// vertex set but never a canonical cycle).
struct CellRef {
    int rank = 0;
    std::vector<Vertex> key;

    auto operator<=>(const CellRef&) const = default;
};

/// Feature vectors attached to every cell of a lifted object.
struct FeatureMatrix {
    int feature_dim = 0;
    std::map<CellRef, std::vector<double>> rows;

    bool operator==(const FeatureMatrix&) const = default;
};

// ---------------------------------------------------------------------------
// Domain kinds and the polymorphic object
// ---------------------------------------------------------------------------

enum class DomainKind { PointCloud, Graph, Hypergraph, Simplicial, Cell, Combinatorial };

using DomainObject = std::variant<PointCloud, Graph, Hypergraph, SimplicialComplex,
                                  CellComplex, CombinatorialComplex>;

inline DomainKind kind_of(const DomainObject& obj) {
    return static_cast<DomainKind>(obj.index());
}

inline std::string_view kind_name(DomainKind k) {
    switch (k) {
        case DomainKind::PointCloud: return "pointcloud";
        case DomainKind::Graph: return "graph";
        case DomainKind::Hypergraph: return "hypergraph";
        case DomainKind::Simplicial: return "simplicial";
        case DomainKind::Cell: return "cell";
        case DomainKind::Combinatorial: return "combinatorial";
    }
    return "?";
}

inline std::string_view kind_code(DomainKind k) {
    switch (k) {
        case DomainKind::PointCloud: return "PC";
        case DomainKind::Graph: return "G";
        case DomainKind::Hypergraph: return "HG";
        case DomainKind::Simplicial: return "SC";
        case DomainKind::Cell: return "CC";
        case DomainKind::Combinatorial: return "CCC";
    }
    return "?";
}

/// Accepts either the long name ("graph") or the short code ("G").
inline std::optional<DomainKind> parse_kind(std::string_view s) {
    for (DomainKind k : {DomainKind::PointCloud, DomainKind::Graph, DomainKind::Hypergraph,
                         DomainKind::Simplicial, DomainKind::Cell, DomainKind::Combinatorial}) {
        if (s == kind_name(k) || s == kind_code(k)) return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Small formatting / canonicalization helpers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string show_set(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

inline bool sorted_unique(const std::vector<Vertex>& vs) {
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i - 1] >= vs[i]) return false;
    return true;
}

inline bool in_range(const std::vector<Vertex>& vs, int n) {
    for (Vertex v : vs)
        if (v < 0 || v >= n) return false;
    return true;
}

/// True iff a is a subset of b; both sorted ascending.
inline bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool rectangular(const Matrix& m, size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) return false;
    return true;
}

} // namespace detail

/// Canonical form of a boundary cycle: rotate so the smallest vertex is
/// first, then pick the direction whose second vertex is smaller.
inline std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
    const size_t len = cycle.size();
    if (len < 3) return cycle;
    size_t start = static_cast<size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<Vertex> fwd(len), bwd(len);
    for (size_t i = 0; i < len; ++i) {
        fwd[i] = cycle[(start + i) % len];
        bwd[i] = cycle[(start + len - i) % len];
    }
    return fwd[1] < bwd[1] ? fwd : bwd;
}

// ---------------------------------------------------------------------------
// Builders. Each produces the canonical representation and throws
// std::invalid_argument on irreparably malformed input (self-loops, wrong
// coordinate counts, out-of-range vertices). Liftings construct through
// these so that their outputs validate by construction.
// ---------------------------------------------------------------------------

inline PointCloud make_pointcloud(int dim, std::vector<std::vector<double>> points,
                                  std::optional<Matrix> node_features = std::nullopt) {
    if (dim < 1) throw std::invalid_argument("pointcloud: dim must be positive");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("pointcloud: point with wrong coordinate count");
        for (double c : p)
            if (!std::isfinite(c)) throw std::invalid_argument("pointcloud: non-finite coordinate");
    }
    if (node_features && node_features->size() != points.size())
        throw std::invalid_argument("pointcloud: feature row count != point count");
    return PointCloud{dim, std::move(points), std::move(node_features)};
}

inline Graph make_graph(int n, std::vector<std::array<Vertex, 2>> edges,
                        std::optional<Matrix> node_features = std::nullopt,
                        std::optional<Matrix> edge_features = std::nullopt) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges) {
        if (e[0] == e[1]) throw std::invalid_argument("graph: self-loop rejected");
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] < 0 || e[1] >= n) throw std::invalid_argument("graph: endpoint out of range");
    }
    if (edge_features) {
        if (edge_features->size() != edges.size())
            throw std::invalid_argument("graph: edge feature row count != edge count");
        // keep feature rows attached to their edges through the sort
        std::vector<size_t> order(edges.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return edges[a] < edges[b]; });
        std::vector<std::array<Vertex, 2>> se(edges.size());
        Matrix sf(edges.size());
        for (size_t i = 0; i < order.size(); ++i) {
            se[i] = edges[order[i]];
            sf[i] = std::move((*edge_features)[order[i]]);
        }
        edges = std::move(se);
        edge_features = std::move(sf);
    } else {
        std::sort(edges.begin(), edges.end());
    }
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge rejected");
    if (node_features && static_cast<int>(node_features->size()) != n)
        throw std::invalid_argument("graph: node feature row count != n");
    return Graph{n, std::move(edges), std::move(node_features), std::move(edge_features)};
}

/// Builds a hypergraph from candidate vertex sets. Candidates are sorted and
/// identical sets are merged silently (hyperedges are sets of sets); sets of
/// size < 2 are rejected.
inline Hypergraph make_hypergraph(int n, std::vector<VertexSet> hyperedges) {
    if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    for (auto& he : hyperedges) {
        std::sort(he.begin(), he.end());
        he.erase(std::unique(he.begin(), he.end()), he.end());
        if (he.size() < 2) throw std::invalid_argument("hypergraph: hyperedge of size < 2");
        if (!detail::in_range(he, n))
            throw std::invalid_argument("hypergraph: vertex out of range");
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
    return Hypergraph{n, std::move(hyperedges)};
}

/// Builds a simplicial complex from arbitrary simplices, adding every face
/// and every vertex so the result is downward closed.
inline SimplicialComplex make_simplicial_complex(int n, std::vector<VertexSet> simplices) {
    if (n < 0) throw std::invalid_argument("simplicial: negative vertex count");
    std::vector<std::vector<VertexSet>> by_dim(1);
    by_dim[0].reserve(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) by_dim[0].push_back({v});

    // Expand each simplex into all of its non-empty subsets.
    std::vector<VertexSet> stack = std::move(simplices);
    std::vector<std::vector<VertexSet>> pending;
    for (auto& s : stack) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw std::invalid_argument("simplicial: empty simplex");
        if (!detail::in_range(s, n))
            throw std::invalid_argument("simplicial: vertex out of range");
        const size_t k = s.size();
        if (pending.size() < k) pending.resize(k);
        const uint64_t subsets = uint64_t{1} << k;
        for (uint64_t mask = 1; mask < subsets; ++mask) {
            VertexSet face;
            for (size_t i = 0; i < k; ++i)
                if (mask & (uint64_t{1} << i)) face.push_back(s[i]);
            pending[face.size() - 1].push_back(std::move(face));
        }
    }
    if (by_dim.size() < pending.size() + 0) by_dim.resize(std::max(by_dim.size(), pending.size()));
    for (size_t d = 1; d < pending.size(); ++d) {
        auto& layer = pending[d];
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        by_dim[d] = std::move(layer);
    }
    while (by_dim.size() > 1 && by_dim.back().empty()) by_dim.pop_back();
    return SimplicialComplex{n, std::move(by_dim)};
}

/// Assembles a simplicial complex from per-dimension layers that are already
/// downward closed (e.g. full clique enumerations). Only sorts and dedups.
inline SimplicialComplex assemble_closed_complex(int n,
                                                 std::vector<std::vector<VertexSet>> by_dim) {
    if (by_dim.empty()) by_dim.resize(1);
    by_dim[0].clear();
    by_dim[0].reserve(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) by_dim[0].push_back({v});
    for (size_t d = 1; d < by_dim.size(); ++d) {
        std::sort(by_dim[d].begin(), by_dim[d].end());
        by_dim[d].erase(std::unique(by_dim[d].begin(), by_dim[d].end()), by_dim[d].end());
    }
    while (by_dim.size() > 1 && by_dim.back().empty()) by_dim.pop_back();
    return SimplicialComplex{n, std::move(by_dim)};
}

inline CellComplex make_cell_complex(int n, std::vector<std::array<Vertex, 2>> edges,
                                     std::vector<std::vector<Vertex>> cycles) {
    Graph skeleton = make_graph(n, std::move(edges));
    for (auto& c : cycles) {
        if (c.size() < 3) throw std::invalid_argument("cell: boundary cycle shorter than 3");
        c = canonical_cycle(c);
    }
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    return CellComplex{n, std::move(skeleton.edges), std::move(cycles)};
}

/// Builds a combinatorial complex from (vertex set, rank) pairs; singletons
/// of rank 0 are added for every vertex. A set assigned two different ranks
/// is rejected; an identical (set, rank) pair is merged silently.
inline CombinatorialComplex make_combinatorial_complex(
    int n, const std::vector<std::pair<VertexSet, int>>& ranked_cells) {
    if (n < 0) throw std::invalid_argument("combinatorial: negative vertex count");
    CombinatorialComplex ccc;
    ccc.n = n;
    for (Vertex v = 0; v < n; ++v) ccc.cells.emplace(VertexSet{v}, 0);
    for (auto [verts, rank] : ranked_cells) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.empty()) throw std::invalid_argument("combinatorial: empty cell");
        if (!detail::in_range(verts, n))
            throw std::invalid_argument("combinatorial: vertex out of range");
        auto [it, inserted] = ccc.cells.emplace(std::move(verts), rank);
        if (!inserted && it->second != rank)
            throw std::invalid_argument("combinatorial: cell assigned conflicting ranks");
    }
    return ccc;
}

// ---------------------------------------------------------------------------
// Validation. Returns every invariant violation with a readable location;
// an empty report means the object is valid. Violations are data, not
// errors: these functions never throw.
// ---------------------------------------------------------------------------

inline std::vector<std::string> validate(const PointCloud& pc) {
    std::vector<std::string> out;
    if (pc.dim < 1) out.push_back("pointcloud: dim must be positive");
    for (size_t i = 0; i < pc.points.size(); ++i) {
        const auto& p = pc.points[i];
        if (static_cast<int>(p.size()) != pc.dim)
            out.push_back("pointcloud: point " + std::to_string(i) + " has " +
                          std::to_string(p.size()) + " coordinates, expected " +
                          std::to_string(pc.dim));
        for (double c : p)
            if (!std::isfinite(c)) {
                out.push_back("pointcloud: point " + std::to_string(i) +
                              " has a non-finite coordinate");
                break;
            }
    }
    if (pc.node_features) {
        if (pc.node_features->size() != pc.points.size())
            out.push_back("pointcloud: feature rows (" + std::to_string(pc.node_features->size()) +
                          ") != point count (" + std::to_string(pc.points.size()) + ")");
    }
    return out;
}

inline std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> out;
    if (g.n < 0) out.push_back("graph: negative vertex count");
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e[0] == e[1])
            out.push_back("graph: edge " + std::to_string(i) + " is a self-loop on vertex " +
                          std::to_string(e[0]));
        if (e[0] > e[1])
            out.push_back("graph: edge " + std::to_string(i) + " not stored as (min,max)");
        if (e[0] < 0 || e[1] >= g.n)
            out.push_back("graph: edge " + std::to_string(i) + " endpoint out of range [0," +
                          std::to_string(g.n) + ")");
        if (i > 0 && !(g.edges[i - 1] < e))
            out.push_back("graph: edge list not sorted/unique at position " + std::to_string(i));
    }
    if (g.node_features && static_cast<int>(g.node_features->size()) != g.n)
        out.push_back("graph: node feature rows != n");
    if (g.edge_features && g.edge_features->size() != g.edges.size())
        out.push_back("graph: edge feature rows != edge count");
    return out;
}

inline std::vector<std::string> validate(const Hypergraph& hg) {
    std::vector<std::string> out;
    if (hg.n < 0) out.push_back("hypergraph: negative vertex count");
    for (size_t i = 0; i < hg.hyperedges.size(); ++i) {
        const auto& he = hg.hyperedges[i];
        if (he.size() < 2)
            out.push_back("hypergraph: hyperedge " + std::to_string(i) + " has size < 2");
        if (!detail::sorted_unique(he))
            out.push_back("hypergraph: hyperedge " + std::to_string(i) +
                          " vertices not sorted/unique");
        if (!detail::in_range(he, hg.n))
            out.push_back("hypergraph: hyperedge " + std::to_string(i) + " = " +
                          detail::show_set(he) + " has a vertex out of range [0," +
                          std::to_string(hg.n) + ")");
        if (i > 0 && !(hg.hyperedges[i - 1] < he))
            out.push_back("hypergraph: hyperedge list not sorted/unique at position " +
                          std::to_string(i));
    }
    return out;
}

inline std::vector<std::string> validate(const SimplicialComplex& sc) {
    std::vector<std::string> out;
    if (sc.n < 0) out.push_back("simplicial: negative vertex count");
    if (sc.simplices.empty()) {
        if (sc.n > 0) out.push_back("simplicial: missing dimension-0 layer");
        return out;
    }
    // dimension 0 must be exactly the n vertices
    const auto& verts = sc.simplices[0];
    if (static_cast<int>(verts.size()) != sc.n)
        out.push_back("simplicial: dimension 0 holds " + std::to_string(verts.size()) +
                      " vertices, expected " + std::to_string(sc.n));
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].size() != 1 || verts[i][0] != static_cast<Vertex>(i)) {
            out.push_back("simplicial: dimension 0 is not the canonical vertex list");
            break;
        }
    if (sc.simplices.size() > 1 && sc.simplices.back().empty())
        out.push_back("simplicial: trailing empty dimension " +
                      std::to_string(sc.max_dim()));
    for (size_t d = 1; d < sc.simplices.size(); ++d) {
        const auto& layer = sc.simplices[d];
        const auto& faces = sc.simplices[d - 1];
        for (size_t i = 0; i < layer.size(); ++i) {
            const auto& s = layer[i];
            if (s.size() != d + 1)
                out.push_back("simplicial: dim-" + std::to_string(d) + " simplex " +
                              detail::show_set(s) + " has wrong vertex count");
            if (!detail::sorted_unique(s))
                out.push_back("simplicial: simplex " + detail::show_set(s) +
                              " vertices not sorted/unique");
            if (!detail::in_range(s, sc.n))
                out.push_back("simplicial: simplex " + detail::show_set(s) +
                              " has a vertex out of range [0," + std::to_string(sc.n) + ")");
            if (i > 0 && !(layer[i - 1] < s))
                out.push_back("simplicial: dimension " + std::to_string(d) +
                              " not sorted/unique at position " + std::to_string(i));
            // downward closure: every facet (delete one vertex) must exist
            if (s.size() == d + 1 && detail::sorted_unique(s)) {
                for (size_t drop = 0; drop < s.size(); ++drop) {
                    VertexSet face;
                    face.reserve(s.size() - 1);
                    for (size_t j = 0; j < s.size(); ++j)
                        if (j != drop) face.push_back(s[j]);
                    if (!std::binary_search(faces.begin(), faces.end(), face))
                        out.push_back("simplicial: dim-" + std::to_string(d) + " simplex " +
                                      detail::show_set(s) + " missing face " +
                                      detail::show_set(face));
                }
            }
        }
    }
    return out;
}

inline std::vector<std::string> validate(const CellComplex& cc) {
    std::vector<std::string> out;
    Graph skeleton{cc.n, cc.edges, std::nullopt, std::nullopt};
    for (auto& v : validate(skeleton)) out.push_back("cell (1-skeleton): " + v);
    for (size_t i = 0; i < cc.two_cells.size(); ++i) {
        const auto& cyc = cc.two_cells[i];
        if (cyc.size() < 3) {
            out.push_back("cell: 2-cell " + std::to_string(i) + " has fewer than 3 vertices");
            continue;
        }
        VertexSet uniq(cyc.begin(), cyc.end());
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
            out.push_back("cell: 2-cell " + std::to_string(i) + " repeats a vertex");
        if (!detail::in_range(uniq, cc.n))
            out.push_back("cell: 2-cell " + std::to_string(i) + " has a vertex out of range");
        for (size_t j = 0; j < cyc.size(); ++j) {
            Vertex a = cyc[j], b = cyc[(j + 1) % cyc.size()];
            std::array<Vertex, 2> e{std::min(a, b), std::max(a, b)};
            if (!std::binary_search(cc.edges.begin(), cc.edges.end(), e))
                out.push_back("cell: 2-cell " + std::to_string(i) + " boundary step (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              ") is not an edge of the 1-skeleton");
        }
        if (canonical_cycle(cyc) != cyc)
            out.push_back("cell: 2-cell " + std::to_string(i) +
                          " not stored in canonical rotation");
        if (i > 0 && !(cc.two_cells[i - 1] < cyc))
            out.push_back("cell: 2-cell list not sorted/unique at position " +
                          std::to_string(i));
    }
    return out;
}

inline std::vector<std::string> validate(const CombinatorialComplex& ccc) {
    std::vector<std::string> out;
    if (ccc.n < 0) out.push_back("combinatorial: negative vertex count");
    for (Vertex v = 0; v < ccc.n; ++v) {
        auto it = ccc.cells.find(VertexSet{v});
        if (it == ccc.cells.end())
            out.push_back("combinatorial: missing singleton cell {" + std::to_string(v) + "}");
        else if (it->second != 0)
            out.push_back("combinatorial: singleton {" + std::to_string(v) +
                          "} must have rank 0, has " + std::to_string(it->second));
    }
    for (const auto& [verts, rank] : ccc.cells) {
        if (verts.empty()) out.push_back("combinatorial: empty cell");
        if (!detail::sorted_unique(verts))
            out.push_back("combinatorial: cell " + detail::show_set(verts) +
                          " vertices not sorted/unique");
        if (!detail::in_range(verts, ccc.n))
            out.push_back("combinatorial: cell " + detail::show_set(verts) +
                          " has a vertex out of range [0," + std::to_string(ccc.n) + ")");
        if (rank < 0)
            out.push_back("combinatorial: cell " + detail::show_set(verts) +
                          " has negative rank");
        if (verts.size() >= 2 && rank < 1)
            out.push_back("combinatorial: cell " + detail::show_set(verts) + " of size " +
                          std::to_string(verts.size()) + " must have rank >= 1, has " +
                          std::to_string(rank));
    }
    // monotonicity: x subseteq y implies rank(x) <= rank(y)
    for (auto ix = ccc.cells.begin(); ix != ccc.cells.end(); ++ix)
        for (auto iy = ccc.cells.begin(); iy != ccc.cells.end(); ++iy) {
            if (ix == iy) continue;
            if (ix->first.size() <= iy->first.size() && ix->second > iy->second &&
                detail::subset_of(ix->first, iy->first))
                out.push_back("combinatorial: monotonicity violated: " +
                              detail::show_set(ix->first) + " has rank " +
                              std::to_string(ix->second) + " but its superset " +
                              detail::show_set(iy->first) + " has rank " +
                              std::to_string(iy->second));
        }
    return out;
}

inline std::vector<std::string> validate(const DomainObject& obj) {
    return std::visit([](const auto& x) { return validate(x); }, obj);
}

/// Checks internal consistency of a feature matrix (uniform row width).
inline std::vector<std::string> validate(const FeatureMatrix& fm) {
    std::vector<std::string> out;
    if (fm.feature_dim < 1) out.push_back("features: feature_dim must be positive");
    for (const auto& [ref, row] : fm.rows)
        if (static_cast<int>(row.size()) != fm.feature_dim)
            out.push_back("features: row for rank-" + std::to_string(ref.rank) + " cell " +
                          detail::show_set(ref.key) + " has width " +
                          std::to_string(row.size()) + ", expected " +
                          std::to_string(fm.feature_dim));
    return out;
}

} // namespace topolift
