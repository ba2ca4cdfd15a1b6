#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "topolift/domains.hpp"
#include "topolift/io.hpp"
#include "topolift/queries.hpp"

using namespace topolift;

namespace {

Graph path_graph(int n) {
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return make_graph(n, std::move(edges));
}

int count_containing(const std::vector<std::string>& report, const std::string& needle) {
    int n = 0;
    for (const auto& line : report)
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

} // namespace

TEST_CASE("validate flags a missing face exactly once", "[domains]") {
    // triangle closure with {0,1} removed by hand
    SimplicialComplex sc;
    sc.n = 3;
    sc.simplices = {{{0}, {1}, {2}}, {{0, 2}, {1, 2}}, {{0, 1, 2}}};
    auto report = validate(sc);
    REQUIRE_FALSE(report.empty());
    CHECK(count_containing(report, "missing face") == 1);
}

TEST_CASE("validate accepts K3", "[domains]") {
    CHECK(validate(complete_graph(3)).empty());
}

TEST_CASE("validate flags rank monotonicity violations", "[domains]") {
    CombinatorialComplex ccc;
    ccc.n = 3;
    ccc.cells[{0}] = 0;
    ccc.cells[{1}] = 0;
    ccc.cells[{2}] = 0;
    ccc.cells[{0, 1}] = 1;
    ccc.cells[{0, 1, 2}] = 0;
    auto report = validate(ccc);
    REQUIRE_FALSE(report.empty());
    CHECK(count_containing(report, "monotonicity") >= 1);
}

TEST_CASE("graph construction rejects self-loops and duplicates", "[domains]") {
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("edge features stay attached through canonicalization", "[domains]") {
    Matrix ef{{10.0}, {20.0}};
    Graph g = make_graph(3, {{1, 2}, {0, 1}}, std::nullopt, ef);
    CHECK(g.edges == std::vector<std::array<int, 2>>{{0, 1}, {1, 2}});
    CHECK((*g.edge_features)[0] == std::vector<double>{20.0});
    CHECK((*g.edge_features)[1] == std::vector<double>{10.0});
}

TEST_CASE("hypergraph builder canonicalizes and merges", "[domains]") {
    Hypergraph hg = make_hypergraph(4, {{2, 0}, {0, 2}, {3, 1}});
    CHECK(hg.hyperedges == std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK_THROWS_AS(make_hypergraph(4, {{2, 2}}), std::invalid_argument);
    CHECK(validate(hg).empty());
}

TEST_CASE("k-hop neighborhoods on paths", "[domains]") {
    Graph p3 = path_graph(3);
    CHECK(k_hop_neighborhood(p3, 1, 1) == VertexSet{0, 1, 2});
    CHECK(k_hop_neighborhood(p3, 0, 1) == VertexSet{0, 1});
    CHECK(k_hop_neighborhood(path_graph(4), 0, 2) == VertexSet{0, 1, 2});
    CHECK_THROWS_AS(k_hop_neighborhood(p3, 7, 1), std::out_of_range);
}

TEST_CASE("k-hop neighborhoods grow monotonically in k", "[domains]") {
    testgen::Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testgen::er_graph(12, 0.25, rng);
        for (int v = 0; v < g.n; ++v)
            for (int k = 1; k < 4; ++k) {
                VertexSet lo = k_hop_neighborhood(g, v, k);
                VertexSet hi = k_hop_neighborhood(g, v, k + 1);
                CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
                CHECK(std::binary_search(lo.begin(), lo.end(), v));
            }
    }
}

TEST_CASE("Euler characteristic of small complexes", "[domains]") {
    SimplicialComplex triangle = make_simplicial_complex(3, {{0, 1, 2}});
    CHECK(euler_characteristic(triangle) == 1);

    SimplicialComplex square = make_simplicial_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(euler_characteristic(square) == 0);

    SimplicialComplex two_points = make_simplicial_complex(2, {});
    CHECK(euler_characteristic(two_points) == 2);
}

TEST_CASE("maximal cliques on worked examples", "[domains]") {
    CHECK(maximal_cliques(complete_graph(3)) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(maximal_cliques(path_graph(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});

    // K4 minus {0,3}
    Graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(maximal_cliques(g) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});

    // isolated vertices are maximal cliques of size one; no phantom empty clique
    CHECK(maximal_cliques(make_graph(2, {})) == std::vector<VertexSet>{{0}, {1}});
    CHECK(maximal_cliques(make_graph(0, {})).empty());
}

TEST_CASE("maximal cliques match subset-enumeration oracle", "[domains]") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
        Graph g = testgen::er_graph(n, p, rng);
        CHECK(maximal_cliques(g) == oracle::maximal_cliques_brute(g));
    }
}

TEST_CASE("canonical serialization is stable", "[domains]") {
    testgen::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        DomainObject obj;
        switch (trial % 5) {
            case 0: obj = testgen::er_graph(8, 0.4, rng, true); break;
            case 1: obj = testgen::random_pointcloud(6, 3, rng, true); break;
            case 2: obj = testgen::random_hypergraph(8, 10, rng); break;
            case 3: obj = testgen::random_simplicial(rng); break;
            default: obj = testgen::random_combinatorial(rng); break;
        }
        CHECK(serialize_domain(obj) == serialize_domain(obj));
    }
}

TEST_CASE("cell complex validation catches broken boundaries", "[domains]") {
    CellComplex ok = make_cell_complex(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}});
    CHECK(validate(ok).empty());

    CellComplex missing_edge = ok;
    missing_edge.edges.erase(missing_edge.edges.begin());  // drop {0,1}
    auto report = validate(missing_edge);
    REQUIRE_FALSE(report.empty());
    bool mentions_boundary = false;
    for (const auto& line : report)
        if (line.find("not an edge of the 1-skeleton") != std::string::npos)
            mentions_boundary = true;
    CHECK(mentions_boundary);

    CellComplex rotated = ok;
    rotated.two_cells[0] = {1, 2, 3, 0};  // same cycle, non-canonical storage
    bool mentions_rotation = false;
    for (const auto& line : validate(rotated))
        if (line.find("canonical rotation") != std::string::npos) mentions_rotation = true;
    CHECK(mentions_rotation);

    CHECK_THROWS_AS(make_cell_complex(3, {{0, 1}}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("canonical cycle normalization", "[domains]") {
    CHECK(canonical_cycle({2, 0, 1}) == std::vector<int>{0, 1, 2});
    CHECK(canonical_cycle({3, 2, 1, 0}) == std::vector<int>{0, 1, 2, 3});
    CHECK(canonical_cycle({1, 3, 0, 2}) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("builder outputs validate cleanly", "[domains]") {
    testgen::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        CHECK(validate(testgen::er_graph(10, 0.3, rng, trial % 2 == 0)).empty());
        CHECK(validate(testgen::random_pointcloud(8, 2 + trial % 2, rng)).empty());
        CHECK(validate(testgen::random_hypergraph(9, 8, rng)).empty());
    }
}
