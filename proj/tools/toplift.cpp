// toplift: command-line pipeline runner around the topolift library.
//
// Subcommands:
//   lift      load a domain file, apply a registered lifting, write the result
//   validate  print the invariant-violation report for a domain file
//   info      print the lifting catalog (optionally filtered by source/dest)
//   stats     print structural statistics for a domain file
//
// Exit codes: 0 success, 1 domain/validation failure, 2 usage/parse error.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "topolift/topolift.hpp"

namespace {

using namespace topolift;

std::vector<int> cells_per_rank(const DomainObject& obj) {
    return std::visit(
        [](const auto& x) -> std::vector<int> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointCloud>) {
                return {x.size()};
            } else if constexpr (std::is_same_v<T, Graph>) {
                return {x.n, static_cast<int>(x.edges.size())};
            } else if constexpr (std::is_same_v<T, Hypergraph>) {
                return {x.n, static_cast<int>(x.hyperedges.size())};
            } else if constexpr (std::is_same_v<T, SimplicialComplex>) {
                std::vector<int> out;
                for (int d = 0; d <= x.max_dim(); ++d) out.push_back(x.count(d));
                return out;
            } else if constexpr (std::is_same_v<T, CellComplex>) {
                return {x.n, static_cast<int>(x.edges.size()),
                        static_cast<int>(x.two_cells.size())};
            } else {
                std::vector<int> out(static_cast<size_t>(x.max_rank()) + 1, 0);
                for (const auto& [verts, rank] : x.cells) out[static_cast<size_t>(rank)] += 1;
                return out;
            }
        },
        obj);
}

std::string join_counts(const std::vector<int>& counts) {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ' ';
        os << counts[i];
    }
    return os.str();
}

DomainKind parse_kind_or_fail(const std::string& s) {
    auto k = parse_kind(s);
    if (!k)
        throw UsageError("unknown kind '" + s +
                         "' (expected pointcloud/graph/hypergraph/simplicial/cell/combinatorial "
                         "or PC/G/HG/SC/CC/CCC)");
    return *k;
}

struct LiftArgs {
    std::string config_path;
    std::string input;
    std::string kind;
    std::string lifting;
    std::vector<std::string> params;
    std::string features;
    std::string output;
};

int run_lift(const LiftArgs& args) {
    PipelineConfig cfg;
    if (!args.config_path.empty()) cfg = read_config(args.config_path);

    // flags override config values
    if (!args.input.empty()) cfg.input_path = args.input;
    if (!args.kind.empty()) cfg.kind = parse_kind_or_fail(args.kind);
    if (!args.lifting.empty()) cfg.lifting_id = args.lifting;
    if (!args.output.empty()) cfg.output_path = args.output;
    if (!args.features.empty()) {
        cfg.aggregation = parse_aggregation(args.features);
        if (!cfg.aggregation) throw UsageError("--features must be one of sum/mean/max");
    }
    std::map<std::string, std::string> params;
    for (const auto& [name, value] : cfg.params) params[name] = value;
    for (const auto& spec : args.params) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--param expects NAME=VALUE, got '" + spec + "'");
        params[spec.substr(0, eq)] = spec.substr(eq + 1);
    }

    if (!cfg.input_path) throw UsageError("missing input path (--input or config)");
    if (!cfg.kind) throw UsageError("missing input kind (--kind or config)");
    if (!cfg.lifting_id) throw UsageError("missing lifting id (--lifting or config)");
    if (!cfg.output_path) throw UsageError("missing output path (--output or config)");

    const LiftingDescriptor& desc = registry_get(*cfg.lifting_id);
    if (desc.source != *cfg.kind)
        throw UsageError("lifting '" + desc.id + "' expects a " +
                         std::string(kind_name(desc.source)) + " source, but --kind says " +
                         std::string(kind_name(*cfg.kind)));

    DomainObject input = read_domain(*cfg.input_path, *cfg.kind);
    ParamMap pm;
    for (const auto& [name, value] : params) pm[name] = value;
    DomainObject output = registry_apply(desc.id, input, pm);

    auto report = validate(output);
    if (!report.empty()) {
        std::cerr << "lifting produced an invalid object:\n";
        for (const auto& line : report) std::cerr << "  " << line << '\n';
        return 1;
    }

    if (cfg.aggregation) {
        const std::optional<Matrix>* source_features = nullptr;
        if (const auto* pc = std::get_if<PointCloud>(&input)) source_features = &pc->node_features;
        if (const auto* g = std::get_if<Graph>(&input)) source_features = &g->node_features;
        if (!source_features)
            throw UsageError("--features requires a pointcloud or graph source");
        if (!*source_features || (*source_features)->empty())
            throw DomainError("--features requested but the input has no node features");
        FeatureMatrix fm = lift_features(output, **source_features, *cfg.aggregation);
        write_domain(output, *cfg.output_path, &fm);
    } else {
        write_domain(output, *cfg.output_path);
    }

    std::cout << kind_name(kind_of(output)) << " cells per rank: "
              << join_counts(cells_per_rank(output)) << '\n';
    return 0;
}

int run_validate(const std::string& input, const std::string& kind_str) {
    std::optional<DomainKind> expected;
    if (!kind_str.empty()) expected = parse_kind_or_fail(kind_str);
    std::ifstream in(input, std::ios::binary);
    if (!in) throw ParseError(input + ": cannot open");
    ReadResult r = parse_domain(in, expected, input);
    auto report = validate(r.object);
    if (report.empty()) {
        std::cout << "OK\n";
        return 0;
    }
    for (const auto& line : report) std::cout << line << '\n';
    return 1;
}

int run_stats(const std::string& input, const std::string& kind_str) {
    std::optional<DomainKind> expected;
    if (!kind_str.empty()) expected = parse_kind_or_fail(kind_str);
    DomainObject obj = read_domain(input, expected);
    std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointCloud>) {
                std::cout << "points: " << x.size() << ", dim: " << x.dim << '\n';
            } else if constexpr (std::is_same_v<T, Graph>) {
                std::vector<int> deg(static_cast<size_t>(x.n), 0);
                for (const auto& e : x.edges) {
                    deg[static_cast<size_t>(e[0])]++;
                    deg[static_cast<size_t>(e[1])]++;
                }
                int lo = 0, hi = 0;
                double mean = 0.0;
                if (x.n > 0) {
                    lo = *std::min_element(deg.begin(), deg.end());
                    hi = *std::max_element(deg.begin(), deg.end());
                    mean = 2.0 * static_cast<double>(x.edges.size()) / x.n;
                }
                std::cout << "degrees: min " << lo << " max " << hi << " mean "
                          << detail::fmt_real(mean) << '\n';
            } else if constexpr (std::is_same_v<T, Hypergraph>) {
                std::map<size_t, int> histogram;
                for (const auto& he : x.hyperedges) histogram[he.size()] += 1;
                std::cout << "sizes:";
                for (const auto& [size, count] : histogram)
                    std::cout << ' ' << size << ':' << count;
                std::cout << '\n';
            } else if constexpr (std::is_same_v<T, SimplicialComplex>) {
                std::cout << "dims: " << join_counts(cells_per_rank(DomainObject(x)))
                          << ", chi: " << euler_characteristic(x) << '\n';
            } else if constexpr (std::is_same_v<T, CellComplex>) {
                std::cout << "dims: " << join_counts(cells_per_rank(DomainObject(x))) << '\n';
            } else {
                std::cout << "ranks: " << join_counts(cells_per_rank(DomainObject(x))) << '\n';
            }
        },
        obj);
    return 0;
}

int run_info(const std::string& source, const std::string& dest) {
    std::optional<DomainKind> src, dst;
    if (!source.empty()) src = parse_kind_or_fail(source);
    if (!dest.empty()) dst = parse_kind_or_fail(dest);
    auto rows = registry_list(src, dst);
    std::cout << std::left << std::setw(22) << "id" << std::setw(6) << "src" << std::setw(6)
              << "dest" << std::setw(6) << "feat" << std::setw(6) << "conn"
              << "params" << '\n';
    for (const auto* d : rows) {
        std::ostringstream params;
        for (size_t i = 0; i < d->params.size(); ++i) {
            const auto& p = d->params[i];
            if (i) params << ' ';
            params << p.name << '=' << ParamSpec::format_value(p.default_value) << '('
                   << p.constraint_text() << ')';
        }
        std::cout << std::left << std::setw(22) << d->id << std::setw(6) << kind_code(d->source)
                  << std::setw(6) << kind_code(d->dest) << std::setw(6)
                  << (d->feature_based ? "x" : "-") << std::setw(6)
                  << (d->connectivity_based ? "x" : "-")
                  << (d->params.empty() ? "-" : params.str()) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological lifting pipeline runner"};
    app.require_subcommand(1);

    LiftArgs lift_args;
    auto* lift = app.add_subcommand("lift", "apply a lifting to a domain file");
    lift->add_option("--config", lift_args.config_path, "pipeline config file");
    lift->add_option("--input", lift_args.input, "input domain file");
    lift->add_option("--kind", lift_args.kind, "input domain kind");
    lift->add_option("--lifting", lift_args.lifting, "lifting id (see 'info')");
    lift->add_option("--param", lift_args.params, "parameter override NAME=VALUE")
        ->take_all();
    lift->add_option("--features", lift_args.features,
                     "also lift node features (sum/mean/max)");
    lift->add_option("--output", lift_args.output, "output path (required)");

    std::string val_input, val_kind;
    auto* val = app.add_subcommand("validate", "report invariant violations for a file");
    val->add_option("--input", val_input, "domain file")->required();
    val->add_option("--kind", val_kind, "expected kind");

    std::string stats_input, stats_kind;
    auto* stats = app.add_subcommand("stats", "print structural statistics");
    stats->add_option("--input", stats_input, "domain file")->required();
    stats->add_option("--kind", stats_kind, "expected kind");

    std::string info_source, info_dest;
    auto* info = app.add_subcommand("info", "list registered liftings");
    info->add_option("--source", info_source, "filter by source kind");
    info->add_option("--dest", info_dest, "filter by destination kind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (lift->parsed()) return run_lift(lift_args);
        if (val->parsed()) return run_validate(val_input, val_kind);
        if (stats->parsed()) return run_stats(stats_input, stats_kind);
        if (info->parsed()) return run_info(info_source, info_dest);
    } catch (const topolift::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const auto& line : e.report) std::cerr << "  " << line << '\n';
        return 1;
    } catch (const topolift::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const topolift::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const topolift::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
