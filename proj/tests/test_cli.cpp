#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef TOPLIFT_CLI_PATH
#error "TOPLIFT_CLI_PATH must point at the toplift binary"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() / ("toplift_out_" + std::to_string(counter));
    const fs::path err = fs::temp_directory_path() / ("toplift_err_" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(TOPLIFT_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

} // namespace

TEST_CASE("lift subcommand produces a valid complex and summary", "[cli]") {
    const fs::path in = write_file("cli_k3.graph", "graph 3\n0 1\n0 2\n1 2\n");
    const fs::path out = fs::temp_directory_path() / "cli_k3.sc";
    RunResult r = run_cli("lift --input " + in.string() + " --kind graph --lifting clique" +
                          " --param max_dim=2 --output " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3 3 1") != std::string::npos);
    CHECK(slurp(out) == "simplicial 3 2\n0 1\n0 2\n1 2\n0 1 2\n");

    RunResult v = run_cli("validate --input " + out.string() + " --kind simplicial");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("OK") != std::string::npos);

    RunResult s = run_cli("stats --input " + out.string());
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("dims: 3 3 1, chi: 1") != std::string::npos);
    fs::remove(in);
    fs::remove(out);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    const fs::path in = write_file("cli_p3.graph", "graph 3\n0 1\n1 2\n");
    CHECK(run_cli("lift --input " + in.string() +
                  " --kind graph --lifting unknown_lift --output /tmp/x")
              .exit_code == 2);
    CHECK(run_cli("lift --input " + in.string() + " --kind graph --lifting clique").exit_code ==
          2);  // no --output
    CHECK(run_cli("lift --input " + in.string() +
                  " --kind graph --lifting clique --param max_dim=0 --output /tmp/x")
              .exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("stats --input /does/not/exist.graph").exit_code == 2);
    // file declares pointcloud but --kind says graph
    const fs::path pc = write_file("cli_pc.pointcloud", "pointcloud 2 1\n0\n1\n");
    RunResult r = run_cli("lift --input " + pc.string() +
                          " --kind graph --lifting clique --output /tmp/x");
    CHECK(r.exit_code == 2);
    fs::remove(in);
    fs::remove(pc);
}

TEST_CASE("validation failures exit with code 1", "[cli]") {
    const fs::path bad = write_file("cli_bad.sc", "simplicial 3 2\n0 2\n1 2\n0 1 2\n");
    RunResult r = run_cli("validate --input " + bad.string() + " --kind simplicial");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("missing face") != std::string::npos);

    RunResult s = run_cli("stats --input " + bad.string());
    CHECK(s.exit_code == 1);

    // structurally fine but unsuitable data: disconnected spectral embedding
    const fs::path disc = write_file("cli_disc.graph", "graph 4\n0 1\n2 3\n");
    RunResult lift = run_cli("lift --input " + disc.string() +
                             " --kind graph --lifting spectral_embedding --output /tmp/x");
    CHECK(lift.exit_code == 1);
    fs::remove(bad);
    fs::remove(disc);
}

TEST_CASE("truncated files exit with code 2", "[cli]") {
    const fs::path trunc = write_file("cli_trunc.pointcloud", "pointcloud 3 2\n0 0\n");
    CHECK(run_cli("validate --input " + trunc.string()).exit_code == 2);
    fs::remove(trunc);
}

TEST_CASE("stats formats per kind", "[cli]") {
    const fs::path c4 = write_file("cli_c4.graph", "graph 4\n0 1\n0 3\n1 2\n2 3\n");
    RunResult g = run_cli("stats --input " + c4.string() + " --kind graph");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "degrees: min 2 max 2 mean 2\n");

    const fs::path hg = write_file("cli_sizes.hypergraph", "hypergraph 3\n0 1 2\n1 2\n");
    RunResult h = run_cli("stats --input " + hg.string());
    CHECK(h.exit_code == 0);
    CHECK(h.out == "sizes: 2:1 3:1\n");

    const fs::path pc = write_file("cli_stats.pointcloud", "pointcloud 2 3\n0 0 0\n1 2 3\n");
    RunResult p = run_cli("stats --input " + pc.string());
    CHECK(p.exit_code == 0);
    CHECK(p.out == "points: 2, dim: 3\n");
    fs::remove(c4);
    fs::remove(hg);
    fs::remove(pc);
}

TEST_CASE("info lists the catalog and honors filters", "[cli]") {
    RunResult all = run_cli("info");
    CHECK(all.exit_code == 0);
    int rows = -1;  // discount the column header
    for (char c : all.out)
        if (c == '\n') ++rows;
    CHECK(rows >= 16);

    RunResult hg = run_cli("info --source HG");
    CHECK(hg.exit_code == 0);
    CHECK(hg.out.find("downward_closure") != std::string::npos);
    CHECK(hg.out.find("strict_ccc") != std::string::npos);
    CHECK(hg.out.find("clique") == std::string::npos);

    RunResult empty = run_cli("info --source SC --dest PC");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("sc_inclusion") == std::string::npos);
}

TEST_CASE("config files drive the pipeline with flag overrides", "[cli]") {
    const fs::path in = write_file("cli_cfg.graph", "graph 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const fs::path out = fs::temp_directory_path() / "cli_cfg_out.sc";
    const fs::path cfg = write_file("cli_pipeline.config",
                                    "config\ninput " + in.string() +
                                        "\nkind graph\nlifting clique\nparam max_dim 2\noutput " +
                                        out.string() + "\n");
    RunResult r = run_cli("lift --config " + cfg.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4 6 4") != std::string::npos);  // K4 flag complex capped at dim 2

    // flag override beats the config default
    RunResult r1 = run_cli("lift --config " + cfg.string() + " --param max_dim=1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("4 6") != std::string::npos);
    CHECK(r1.out.find("4 6 4") == std::string::npos);
    fs::remove(in);
    fs::remove(out);
    fs::remove(cfg);
}

TEST_CASE("feature lifting flows through the pipeline", "[cli]") {
    const fs::path in = write_file("cli_feat.graph",
                                   "graph 3 1\n0 1\n0 2\n1 2\nfeatures\n1\n2\n3\n");
    const fs::path out = fs::temp_directory_path() / "cli_feat.sc";
    RunResult r = run_cli("lift --input " + in.string() +
                          " --kind graph --lifting clique --features mean --output " +
                          out.string());
    CHECK(r.exit_code == 0);
    const std::string text = slurp(out);
    CHECK(text.find("features\n") != std::string::npos);
    CHECK(text.find("simplicial 3 2 1\n") == 0);

    // sources without node features cannot satisfy --features
    const fs::path bare = write_file("cli_bare.graph", "graph 3\n0 1\n0 2\n1 2\n");
    RunResult miss = run_cli("lift --input " + bare.string() +
                             " --kind graph --lifting clique --features mean --output " +
                             out.string());
    CHECK(miss.exit_code == 1);
    fs::remove(in);
    fs::remove(bare);
    fs::remove(out);
}

TEST_CASE("lift outputs are byte-identical across runs", "[cli]") {
    const fs::path in = write_file("cli_det.graph", "graph 5\n0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n");
    const fs::path out1 = fs::temp_directory_path() / "cli_det1.cc";
    const fs::path out2 = fs::temp_directory_path() / "cli_det2.cc";
    REQUIRE(run_cli("lift --input " + in.string() +
                    " --kind graph --lifting cycles_to_cells --output " + out1.string())
                .exit_code == 0);
    REQUIRE(run_cli("lift --input " + in.string() +
                    " --kind graph --lifting cycles_to_cells --output " + out2.string())
                .exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    fs::remove(in);
    fs::remove(out1);
    fs::remove(out2);
}
