#pragma once

// Structural queries over the domain types: neighborhoods, connectivity,
// clique enumeration, Euler characteristic. Shared by several liftings.

#include <algorithm>
#include <deque>
#include <functional>
#include <vector>

#include "topolift/domains.hpp"

namespace topolift {

/// Sorted neighbor lists with an O(log deg) adjacency test.
class Adjacency {
public:
    Adjacency() = default;
    Adjacency(int n, const std::vector<std::array<Vertex, 2>>& edges) : nbrs_(static_cast<size_t>(n)) {
        for (const auto& e : edges) {
            nbrs_[static_cast<size_t>(e[0])].push_back(e[1]);
            nbrs_[static_cast<size_t>(e[1])].push_back(e[0]);
        }
        for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
    }
    explicit Adjacency(const Graph& g) : Adjacency(g.n, g.edges) {}

    int n() const { return static_cast<int>(nbrs_.size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const {
        const auto& lst = nbrs_[static_cast<size_t>(u)];
        return std::binary_search(lst.begin(), lst.end(), v);
    }

private:
    std::vector<std::vector<Vertex>> nbrs_;
};

/// All vertices within graph distance k of v (BFS), v included.
inline VertexSet k_hop_neighborhood(const Graph& g, Vertex v, int k) {
    if (v < 0 || v >= g.n) throw std::out_of_range("k_hop_neighborhood: vertex out of range");
    if (k < 1) throw UsageError("k_hop_neighborhood: k must be >= 1");
    Adjacency adj(g);
    std::vector<int> dist(static_cast<size_t>(g.n), -1);
    std::deque<Vertex> queue{v};
    dist[static_cast<size_t>(v)] = 0;
    VertexSet out{v};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[static_cast<size_t>(u)] == k) continue;
        for (Vertex w : adj.neighbors(u))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                out.push_back(w);
                queue.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Alternating sum over dimensions of the simplex counts.
inline long long euler_characteristic(const SimplicialComplex& sc) {
    long long chi = 0;
    for (int d = 0; d <= sc.max_dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(sc.count(d));
    return chi;
}

/// Component labels (0-based, in order of first appearance) and count.
struct Components {
    int count = 0;
    std::vector<int> label;
};

inline Components connected_components(int n, const std::vector<std::array<Vertex, 2>>& edges) {
    Adjacency adj(n, edges);
    Components comp;
    comp.label.assign(static_cast<size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (comp.label[static_cast<size_t>(s)] >= 0) continue;
        const int id = comp.count++;
        std::deque<Vertex> queue{s};
        comp.label[static_cast<size_t>(s)] = id;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : adj.neighbors(u))
                if (comp.label[static_cast<size_t>(w)] < 0) {
                    comp.label[static_cast<size_t>(w)] = id;
                    queue.push_back(w);
                }
        }
    }
    return comp;
}

inline Components connected_components(const Graph& g) {
    return connected_components(g.n, g.edges);
}

namespace detail {

/// Emits every clique of size 1..max_size exactly once, in increasing-vertex
/// order within each clique.
inline void enumerate_cliques(const Adjacency& adj, int max_size,
                              const std::function<void(const VertexSet&)>& emit) {
    if (max_size < 1) return;
    VertexSet clique;
    std::vector<Vertex> cand;
    std::function<void(const std::vector<Vertex>&)> grow = [&](const std::vector<Vertex>& ext) {
        emit(clique);
        if (static_cast<int>(clique.size()) == max_size) return;
        for (size_t i = 0; i < ext.size(); ++i) {
            Vertex u = ext[i];
            std::vector<Vertex> next;
            for (size_t j = i + 1; j < ext.size(); ++j)
                if (adj.adjacent(u, ext[j])) next.push_back(ext[j]);
            clique.push_back(u);
            grow(next);
            clique.pop_back();
        }
    };
    for (Vertex v = 0; v < adj.n(); ++v) {
        clique.assign(1, v);
        std::vector<Vertex> ext;
        for (Vertex w : adj.neighbors(v))
            if (w > v) ext.push_back(w);
        grow(ext);
    }
}

// Bron-Kerbosch with pivoting. R: current clique, P: candidates, X: excluded.
inline void bron_kerbosch(const Adjacency& adj, VertexSet& r, std::vector<Vertex>& p,
                          std::vector<Vertex>& x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P u X with the most neighbors in P
    Vertex pivot = -1;
    int best = -1;
    for (const auto* side : {&p, &x})
        for (Vertex u : *side) {
            int cnt = 0;
            for (Vertex w : p)
                if (adj.adjacent(u, w)) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
    std::vector<Vertex> branch;
    for (Vertex u : p)
        if (!adj.adjacent(pivot, u)) branch.push_back(u);
    for (Vertex u : branch) {
        std::vector<Vertex> p2, x2;
        for (Vertex w : p)
            if (adj.adjacent(u, w)) p2.push_back(w);
        for (Vertex w : x)
            if (adj.adjacent(u, w)) x2.push_back(w);
        r.push_back(u);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), u));
        x.insert(std::lower_bound(x.begin(), x.end(), u), u);
    }
}

} // namespace detail

/// Exact maximal clique enumeration; output cliques sorted, list in
/// lexicographic order regardless of the search order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    if (g.n == 0) return {};
    Adjacency adj(g);
    std::vector<VertexSet> out;
    VertexSet r;
    std::vector<Vertex> p(static_cast<size_t>(g.n)), x;
    for (Vertex v = 0; v < g.n; ++v) p[static_cast<size_t>(v)] = v;
    detail::bron_kerbosch(adj, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace topolift
