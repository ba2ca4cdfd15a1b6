#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "support/generators.hpp"
#include "topolift/io.hpp"

using namespace topolift;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("topolift_io_" + name);
}

DomainObject roundtrip(const DomainObject& obj) {
    ReadResult r = parse_domain(serialize_domain(obj));
    return r.object;
}

} // namespace

TEST_CASE("round-trip across every domain kind", "[io]") {
    testgen::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        DomainObject objs[] = {
            DomainObject(testgen::random_pointcloud(1 + static_cast<int>(rng() % 10), 2 + trial % 2,
                                                    rng, trial % 2 == 0)),
            DomainObject(testgen::er_graph(1 + static_cast<int>(rng() % 10), 0.4, rng,
                                           trial % 2 == 1)),
            DomainObject(testgen::random_hypergraph(2 + static_cast<int>(rng() % 8), 8, rng)),
            DomainObject(testgen::random_simplicial(rng)),
            DomainObject(testgen::random_cell_complex(rng)),
            DomainObject(testgen::random_combinatorial(rng)),
        };
        for (const auto& obj : objs) CHECK(roundtrip(obj) == obj);
    }
}

TEST_CASE("round-trip preserves edge features", "[io]") {
    Matrix ef{{0.5, 1.0}, {-2.25, 3.0}};
    Graph g = make_graph(3, {{0, 1}, {1, 2}}, std::nullopt, ef);
    CHECK(roundtrip(DomainObject(g)) == DomainObject(g));
}

TEST_CASE("writing is byte-deterministic", "[io]") {
    testgen::Rng rng(72);
    DomainObject obj{testgen::random_simplicial(rng)};
    const fs::path a = temp_file("det_a"), b = temp_file("det_b");
    write_domain(obj, a);
    write_domain(obj, b);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK_FALSE(ca.empty());
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("cell features round-trip alongside the complex", "[io]") {
    testgen::Rng rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph hg = testgen::random_hypergraph(6, 6, rng);
        SimplicialComplex sc = testgen::random_simplicial(rng);
        CellComplex cc = testgen::random_cell_complex(rng);
        CombinatorialComplex ccc = lift_nhop_ccc(testgen::er_graph(7, 0.4, rng), 1);
        DomainObject objs[] = {DomainObject(hg), DomainObject(sc), DomainObject(cc),
                               DomainObject(ccc)};
        for (const auto& obj : objs) {
            const int n = std::visit([](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Hypergraph> || std::is_same_v<T, CellComplex> ||
                              std::is_same_v<T, CombinatorialComplex>)
                    return x.n;
                else if constexpr (std::is_same_v<T, SimplicialComplex>)
                    return x.n;
                else
                    return 0;
            }, obj);
            FeatureMatrix fm =
                lift_features(obj, testgen::random_features(n, 3, rng), Aggregation::Mean);
            std::string text = serialize_domain(obj, &fm);
            ReadResult r = parse_domain(text);
            CHECK(r.object == obj);
            REQUIRE(r.cell_features.has_value());
            CHECK(*r.cell_features == fm);
        }
    }
}

TEST_CASE("out-of-range edges surface through validate on load", "[io]") {
    const fs::path p = temp_file("bad_edge");
    std::ofstream(p) << "graph 3\n0 5\n";
    try {
        read_domain(p, DomainKind::Graph);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE_FALSE(e.report.empty());
        CHECK(e.report[0].find("out of range") != std::string::npos);
    }
    fs::remove(p);
}

TEST_CASE("malformed files raise parse errors with locations", "[io]") {
    CHECK_THROWS_AS(parse_domain(std::string("pointcloud 3 2\n0 0\n")), ParseError);  // truncated
    CHECK_THROWS_AS(parse_domain(std::string("nonsense 3\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("graph 3\n0 1 2\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("graph x\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("simplicial 3 1\n0 1 2\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("combinatorial 2\n0 0\n")), ParseError);
    try {
        parse_domain(std::string("graph 2\n0 1\nbogus line here\n"), std::nullopt, "f.graph");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("f.graph:3") != std::string::npos);
    }
}

TEST_CASE("declared kind must match the header", "[io]") {
    CHECK_THROWS_AS(parse_domain(std::string("pointcloud 1 2\n0 0\n"), DomainKind::Graph),
                    UsageError);
}

TEST_CASE("label tables map strings to dense ids on read", "[io]") {
    const std::string text =
        "graph 3\nlabels\nalice\nbob\ncarol\nalice bob\nbob carol\n";
    ReadResult r = parse_domain(text);
    const Graph& g = std::get<Graph>(r.object);
    CHECK(g.edges == std::vector<std::array<int, 2>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(parse_domain(std::string("graph 2\nlabels\na\na\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("graph 2\nlabels\na\n7\n")), ParseError);
    CHECK_THROWS_AS(parse_domain(std::string("graph 2\nlabels\na\nb\na zed\n")), ParseError);
}

TEST_CASE("config files parse and type-check against the registry", "[io]") {
    const fs::path p = temp_file("cfg");
    std::ofstream(p) << "config\ninput in.graph\nkind graph\nlifting clique\n"
                        "param max_dim 2\nfeatures mean\noutput out.sc\n";
    PipelineConfig cfg = read_config(p);
    CHECK(cfg.input_path == "in.graph");
    CHECK(cfg.kind == DomainKind::Graph);
    CHECK(cfg.lifting_id == "clique");
    REQUIRE(cfg.params.size() == 1);
    CHECK(cfg.params[0] == std::pair<std::string, std::string>{"max_dim", "2"});
    CHECK(cfg.aggregation == Aggregation::Mean);
    CHECK(cfg.output_path == "out.sc");
    fs::remove(p);
}

TEST_CASE("config errors: unknown id, bad constraint, bad key", "[io]") {
    std::istringstream unknown("config\nlifting unknown_lift\n");
    CHECK_THROWS_AS(parse_config(unknown), UsageError);

    std::istringstream bad_value("config\nlifting clique\nparam max_dim -1\n");
    CHECK_THROWS_AS(parse_config(bad_value), UsageError);

    std::istringstream bad_param("config\nlifting clique\nparam nope 3\n");
    CHECK_THROWS_AS(parse_config(bad_param), UsageError);

    std::istringstream bad_key("config\nfrobnicate yes\n");
    CHECK_THROWS_AS(parse_config(bad_key), ParseError);

    std::istringstream bad_agg("config\nfeatures median\n");
    CHECK_THROWS_AS(parse_config(bad_agg), ParseError);
}

TEST_CASE("real values keep shortest round-trip form", "[io]") {
    PointCloud pc = make_pointcloud(
        1, {{0.1}, {1.0 / 3.0}, {12345.6789}, {-0.0078125}, {2e-300}});
    std::string text = serialize_domain(DomainObject(pc));
    CHECK(std::get<PointCloud>(parse_domain(text).object) == pc);
    CHECK(text.find("0.1\n") != std::string::npos);
}
