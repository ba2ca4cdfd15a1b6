#pragma once

// Canonical UTF-8 text serialization for every domain kind, plus pipeline
// config parsing. One structured document per file:
//
//   header line      kind n [dim|max_dim] [feature_dim]
//   labels block     optional "labels" sentinel + n label lines (read only)
//   element lines    one element per line, space-separated, canonical order
//   feature block    optional "features" sentinel + one row per cell
//   edge features    graphs only: "edge_features" sentinel + one row per edge
//
// Element lines per kind: pointcloud coordinates (n rows of dim reals);
// graph edges "u v"; hyperedges "v1 v2 ..."; simplices of dimension >= 1
// "v1 ... v_{k+1}" (dimension ascending, lexicographic within); cell
// complexes list edges then boundary cycles (written in canonical
// rotation); combinatorial cells "rank v1 v2 ..." with rank >= 1
// (rank-0 singletons are implied). Feature rows cover the n vertices first,
// then each element line in file order. Reals are written in shortest
// round-trip decimal form, so writing is byte-deterministic.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "topolift/domains.hpp"
#include "topolift/features.hpp"
#include "topolift/registry.hpp"

namespace topolift {

namespace detail {

inline std::string fmt_real(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

inline void write_row(std::ostream& os, const std::vector<double>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << ' ';
        os << fmt_real(row[i]);
    }
    os << '\n';
}

inline void write_verts(std::ostream& os, const std::vector<Vertex>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ' ';
        os << vs[i];
    }
    os << '\n';
}

/// Splits a stream into token lines, tracking line numbers for messages.
class LineScanner {
public:
    LineScanner(std::istream& in, std::string_view name) : in_(in), name_(name) {}

    /// Next non-blank line split into tokens; empty result at end of input.
    const std::vector<std::string>& next() {
        tokens_.clear();
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens_.push_back(tok);
            if (!tokens_.empty()) return tokens_;
        }
        at_end_ = true;
        return tokens_;
    }

    bool at_end() const { return at_end_; }
    int line() const { return line_no_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(std::string(name_) + ":" + std::to_string(line_no_) + ": " + msg);
    }

private:
    std::istream& in_;
    std::string name_;
    std::vector<std::string> tokens_;
    int line_no_ = 0;
    bool at_end_ = false;
};

inline long long parse_int_token(const LineScanner& sc, const std::string& tok) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        sc.fail("expected an integer, got '" + tok + "'");
    return v;
}

inline double parse_real_token(const LineScanner& sc, const std::string& tok) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        sc.fail("expected a number, got '" + tok + "'");
    return v;
}

inline bool looks_numeric(const std::string& tok) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

namespace detail {

/// Enumerates the cells of obj in file order (vertices first, then element
/// lines) and writes the matching feature rows.
template <typename Target>
void write_feature_block(std::ostream& os, const Target& target, const FeatureMatrix& fm) {
    os << "features\n";
    // for_each_cell enumerates vertices first then elements in canonical
    // order for every kind, which matches the element line order
    std::vector<CellRef> file_order;
    for_each_cell(target, [&](int rank, const std::vector<Vertex>& key, const VertexSet&) {
        file_order.push_back(CellRef{rank, key});
    });
    for (const auto& ref : file_order) {
        auto it = fm.rows.find(ref);
        if (it == fm.rows.end())
            throw std::invalid_argument("write_domain: feature matrix missing a row for a cell");
        write_row(os, it->second);
    }
}

} // namespace detail

inline void serialize(const PointCloud& pc, std::ostream& os) {
    const bool with_features = pc.node_features && !pc.node_features->empty();
    os << "pointcloud " << pc.points.size() << ' ' << pc.dim;
    if (with_features) os << ' ' << (*pc.node_features)[0].size();
    os << '\n';
    for (const auto& p : pc.points) detail::write_row(os, p);
    if (with_features) {
        os << "features\n";
        for (const auto& row : *pc.node_features) detail::write_row(os, row);
    }
}

inline void serialize(const Graph& g, std::ostream& os) {
    const bool with_features = g.node_features && !g.node_features->empty();
    os << "graph " << g.n;
    if (with_features) os << ' ' << (*g.node_features)[0].size();
    os << '\n';
    for (const auto& e : g.edges) os << e[0] << ' ' << e[1] << '\n';
    if (with_features) {
        os << "features\n";
        for (const auto& row : *g.node_features) detail::write_row(os, row);
    }
    if (g.edge_features && !g.edge_features->empty()) {
        os << "edge_features\n";
        for (const auto& row : *g.edge_features) detail::write_row(os, row);
    }
}

inline void serialize(const Hypergraph& hg, std::ostream& os,
                      const FeatureMatrix* fm = nullptr) {
    os << "hypergraph " << hg.n;
    if (fm) os << ' ' << fm->feature_dim;
    os << '\n';
    for (const auto& he : hg.hyperedges) detail::write_verts(os, he);
    if (fm) detail::write_feature_block(os, hg, *fm);
}

inline void serialize(const SimplicialComplex& sc, std::ostream& os,
                      const FeatureMatrix* fm = nullptr) {
    os << "simplicial " << sc.n << ' ' << std::max(sc.max_dim(), 0);
    if (fm) os << ' ' << fm->feature_dim;
    os << '\n';
    for (int d = 1; d <= sc.max_dim(); ++d)
        for (const auto& s : sc.simplices[static_cast<size_t>(d)]) detail::write_verts(os, s);
    if (fm) detail::write_feature_block(os, sc, *fm);
}

inline void serialize(const CellComplex& cc, std::ostream& os,
                      const FeatureMatrix* fm = nullptr) {
    os << "cell " << cc.n;
    if (fm) os << ' ' << fm->feature_dim;
    os << '\n';
    for (const auto& e : cc.edges) os << e[0] << ' ' << e[1] << '\n';
    for (const auto& cyc : cc.two_cells) detail::write_verts(os, cyc);
    if (fm) detail::write_feature_block(os, cc, *fm);
}

inline void serialize(const CombinatorialComplex& ccc, std::ostream& os,
                      const FeatureMatrix* fm = nullptr) {
    os << "combinatorial " << ccc.n;
    if (fm) os << ' ' << fm->feature_dim;
    os << '\n';
    // rank ascending, then lexicographic; singletons are implied
    std::vector<std::pair<int, const VertexSet*>> cells;
    for (const auto& [verts, rank] : ccc.cells)
        if (verts.size() >= 2 || rank != 0) cells.push_back({rank, &verts});
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : *a.second < *b.second;
    });
    for (const auto& [rank, verts] : cells) {
        os << rank;
        for (Vertex v : *verts) os << ' ' << v;
        os << '\n';
    }
    if (fm) detail::write_feature_block(os, ccc, *fm);
}

inline void serialize_domain(const DomainObject& obj, std::ostream& os,
                             const FeatureMatrix* fm = nullptr) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointCloud> || std::is_same_v<T, Graph>) {
                if (fm)
                    throw std::invalid_argument(
                        "write_domain: pointclouds and graphs store node features inline");
                serialize(x, os);
            } else {
                serialize(x, os, fm);
            }
        },
        obj);
}

inline std::string serialize_domain(const DomainObject& obj, const FeatureMatrix* fm = nullptr) {
    std::ostringstream os;
    serialize_domain(obj, os, fm);
    return os.str();
}

inline void write_domain(const DomainObject& obj, const std::filesystem::path& path,
                         const FeatureMatrix* fm = nullptr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    serialize_domain(obj, out, fm);
    if (!out) throw ParseError(path.string() + ": write failed");
}

// ---------------------------------------------------------------------------
// Readers
// ---------------------------------------------------------------------------

struct ReadResult {
    DomainObject object;
    std::optional<FeatureMatrix> cell_features;  // complexes/hypergraphs only
};

namespace detail {

struct HeaderInfo {
    DomainKind kind;
    int n = 0;
    int dim = -1;          // pointcloud dim or simplicial max_dim
    int feature_dim = -1;  // -1 when absent
};

inline HeaderInfo parse_header(LineScanner& sc, std::optional<DomainKind> expected) {
    const auto& toks = sc.next();
    if (toks.empty()) sc.fail("empty input, expected a header line");
    auto kind = parse_kind(toks[0]);
    if (!kind) sc.fail("unknown kind '" + toks[0] + "'");
    if (expected && *kind != *expected)
        throw UsageError("file declares kind '" + std::string(kind_name(*kind)) +
                         "', expected '" + std::string(kind_name(*expected)) + "'");
    HeaderInfo h{*kind, 0, -1, -1};
    const bool has_dim = (*kind == DomainKind::PointCloud || *kind == DomainKind::Simplicial);
    const size_t want_min = has_dim ? 3 : 2;
    if (toks.size() < want_min || toks.size() > want_min + 1)
        sc.fail("header needs " + std::to_string(want_min - 1) + " or " +
                std::to_string(want_min) + " numeric fields after the kind");
    h.n = static_cast<int>(parse_int_token(sc, toks[1]));
    if (h.n < 0) sc.fail("negative element count");
    size_t next = 2;
    if (has_dim) h.dim = static_cast<int>(parse_int_token(sc, toks[next++]));
    if (toks.size() > next) {
        h.feature_dim = static_cast<int>(parse_int_token(sc, toks[next]));
        if (h.feature_dim < 1) sc.fail("feature_dim must be positive");
    }
    return h;
}

/// Optional label table: exactly n unique non-numeric tokens, one per line.
inline std::map<std::string, Vertex> parse_labels(LineScanner& sc,
                                                  std::vector<std::string>& pending, int n) {
    std::map<std::string, Vertex> table;
    if (pending.empty() || pending[0] != "labels") return table;
    for (Vertex v = 0; v < n; ++v) {
        const auto& toks = sc.next();
        if (toks.empty()) sc.fail("label table truncated: expected " + std::to_string(n) +
                                  " labels");
        if (toks.size() != 1) sc.fail("label lines hold exactly one token");
        if (looks_numeric(toks[0])) sc.fail("label '" + toks[0] + "' must not be numeric");
        if (!table.emplace(toks[0], v).second) sc.fail("duplicate label '" + toks[0] + "'");
    }
    pending = sc.next();
    return table;
}

inline Vertex parse_vertex(const LineScanner& sc, const std::string& tok,
                           const std::map<std::string, Vertex>& labels) {
    if (!looks_numeric(tok)) {
        auto it = labels.find(tok);
        if (it == labels.end()) sc.fail("unknown vertex label '" + tok + "'");
        return it->second;
    }
    return static_cast<Vertex>(parse_int_token(sc, tok));
}

inline Matrix parse_feature_rows(LineScanner& sc, size_t count, int width) {
    Matrix rows;
    rows.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        const auto& toks = sc.next();
        if (toks.empty())
            sc.fail("feature block truncated: expected " + std::to_string(count) + " rows, got " +
                    std::to_string(i));
        if (static_cast<int>(toks.size()) != width)
            sc.fail("feature row has " + std::to_string(toks.size()) + " fields, expected " +
                    std::to_string(width));
        std::vector<double> row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(parse_real_token(sc, t));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline FeatureMatrix feature_matrix_from_rows(const std::vector<CellRef>& order, Matrix rows,
                                              int width) {
    FeatureMatrix fm;
    fm.feature_dim = width;
    for (size_t i = 0; i < order.size(); ++i) fm.rows.emplace(order[i], std::move(rows[i]));
    return fm;
}

} // namespace detail

/// Structural parse only: the returned object may violate invariants (use
/// validate() to report them). Throws ParseError on malformed input and
/// UsageError when the header kind contradicts `expected`.
inline ReadResult parse_domain(std::istream& in, std::optional<DomainKind> expected = std::nullopt,
                               std::string_view source_name = "<stream>") {
    detail::LineScanner sc(in, source_name);
    const detail::HeaderInfo h = detail::parse_header(sc, expected);

    if (h.kind == DomainKind::PointCloud) {
        PointCloud pc;
        pc.dim = h.dim;
        if (h.dim < 1) sc.fail("pointcloud dim must be positive");
        for (int i = 0; i < h.n; ++i) {
            const auto& toks = sc.next();
            if (toks.empty()) sc.fail("expected " + std::to_string(h.n) + " point rows, got " +
                                      std::to_string(i));
            if (static_cast<int>(toks.size()) != h.dim)
                sc.fail("point row has " + std::to_string(toks.size()) +
                        " coordinates, expected " + std::to_string(h.dim));
            std::vector<double> p;
            for (const auto& t : toks) p.push_back(detail::parse_real_token(sc, t));
            pc.points.push_back(std::move(p));
        }
        auto toks = sc.next();
        if (!toks.empty()) {
            if (toks[0] != "features" || toks.size() != 1)
                sc.fail("unexpected line after point rows");
            if (h.feature_dim < 1) sc.fail("features block requires feature_dim in the header");
            pc.node_features =
                detail::parse_feature_rows(sc, static_cast<size_t>(h.n), h.feature_dim);
            toks = sc.next();
            if (!toks.empty()) sc.fail("trailing content after feature block");
        }
        return ReadResult{DomainObject(std::move(pc)), std::nullopt};
    }

    if (h.kind == DomainKind::Graph) {
        Graph g;
        g.n = h.n;
        auto toks = sc.next();
        const auto labels = detail::parse_labels(sc, toks, h.n);
        while (!toks.empty() && toks[0] != "features" && toks[0] != "edge_features") {
            if (toks.size() != 2) sc.fail("graph edge lines hold exactly two vertices");
            g.edges.push_back({detail::parse_vertex(sc, toks[0], labels),
                               detail::parse_vertex(sc, toks[1], labels)});
            toks = sc.next();
        }
        if (!toks.empty() && toks[0] == "features") {
            if (h.feature_dim < 1) sc.fail("features block requires feature_dim in the header");
            g.node_features =
                detail::parse_feature_rows(sc, static_cast<size_t>(h.n), h.feature_dim);
            toks = sc.next();
        }
        if (!toks.empty() && toks[0] == "edge_features") {
            if (toks.size() != 1) sc.fail("edge_features sentinel takes no fields");
            if (g.edges.empty()) sc.fail("edge_features block without edges");
            const auto first = sc.next();
            if (first.empty()) sc.fail("edge_features block is empty");
            const int width = static_cast<int>(first.size());
            Matrix rows;
            std::vector<double> row;
            for (const auto& t : first) row.push_back(detail::parse_real_token(sc, t));
            rows.push_back(std::move(row));
            Matrix more = detail::parse_feature_rows(sc, g.edges.size() - 1, width);
            for (auto& r : more) rows.push_back(std::move(r));
            g.edge_features = std::move(rows);
            toks = sc.next();
        }
        if (!toks.empty()) sc.fail("unexpected line '" + toks[0] + "'");
        return ReadResult{DomainObject(std::move(g)), std::nullopt};
    }

    // remaining kinds share the element-lines + optional feature block shape
    std::vector<CellRef> order;
    for (Vertex v = 0; v < h.n; ++v) order.push_back(CellRef{0, {v}});

    DomainObject obj;
    auto toks = sc.next();
    const auto labels = detail::parse_labels(sc, toks, h.n);

    if (h.kind == DomainKind::Hypergraph) {
        Hypergraph hg;
        hg.n = h.n;
        while (!toks.empty() && toks[0] != "features") {
            if (toks.size() < 2) sc.fail("hyperedge lines hold at least two vertices");
            VertexSet he;
            for (const auto& t : toks) he.push_back(detail::parse_vertex(sc, t, labels));
            order.push_back(CellRef{1, he});
            hg.hyperedges.push_back(std::move(he));
            toks = sc.next();
        }
        obj = std::move(hg);
    } else if (h.kind == DomainKind::Simplicial) {
        SimplicialComplex scx;
        scx.n = h.n;
        scx.simplices.assign(1, {});
        for (Vertex v = 0; v < h.n; ++v) scx.simplices[0].push_back({v});
        size_t prev_size = 1;
        while (!toks.empty() && toks[0] != "features") {
            if (toks.size() < 2) sc.fail("simplex lines hold at least two vertices");
            if (toks.size() < prev_size)
                sc.fail("simplex lines must be grouped by ascending dimension");
            prev_size = toks.size();
            VertexSet s;
            for (const auto& t : toks) s.push_back(detail::parse_vertex(sc, t, labels));
            const size_t d = s.size() - 1;
            if (scx.simplices.size() <= d) scx.simplices.resize(d + 1);
            order.push_back(CellRef{static_cast<int>(d), s});
            scx.simplices[d].push_back(std::move(s));
            toks = sc.next();
        }
        if (h.dim != scx.max_dim())
            sc.fail("header max_dim " + std::to_string(h.dim) +
                    " does not match the highest simplex dimension " +
                    std::to_string(scx.max_dim()));
        obj = std::move(scx);
    } else if (h.kind == DomainKind::Cell) {
        CellComplex cc;
        cc.n = h.n;
        bool seen_cycle = false;
        while (!toks.empty() && toks[0] != "features") {
            if (toks.size() == 2) {
                if (seen_cycle) sc.fail("edges must precede 2-cells");
                cc.edges.push_back({detail::parse_vertex(sc, toks[0], labels),
                                    detail::parse_vertex(sc, toks[1], labels)});
            } else if (toks.size() >= 3) {
                seen_cycle = true;
                std::vector<Vertex> cyc;
                for (const auto& t : toks) cyc.push_back(detail::parse_vertex(sc, t, labels));
                order.push_back(CellRef{2, cyc});
                cc.two_cells.push_back(std::move(cyc));
            } else {
                sc.fail("cell-complex lines hold an edge or a boundary cycle");
            }
            toks = sc.next();
        }
        // edge refs sit between vertices and cycles in file order
        std::vector<CellRef> with_edges;
        for (Vertex v = 0; v < h.n; ++v) with_edges.push_back(CellRef{0, {v}});
        for (const auto& e : cc.edges) with_edges.push_back(CellRef{1, {e[0], e[1]}});
        for (const auto& c : cc.two_cells) with_edges.push_back(CellRef{2, c});
        order = std::move(with_edges);
        obj = std::move(cc);
    } else {  // Combinatorial
        CombinatorialComplex ccc;
        ccc.n = h.n;
        for (Vertex v = 0; v < h.n; ++v) ccc.cells.emplace(VertexSet{v}, 0);
        while (!toks.empty() && toks[0] != "features") {
            if (toks.size() < 2) sc.fail("combinatorial cell lines hold a rank and vertices");
            const long long rank = detail::parse_int_token(sc, toks[0]);
            if (rank < 1) sc.fail("explicit cells must have rank >= 1 (singletons are implied)");
            VertexSet verts;
            for (size_t i = 1; i < toks.size(); ++i)
                verts.push_back(detail::parse_vertex(sc, toks[i], labels));
            order.push_back(CellRef{static_cast<int>(rank), verts});
            if (!ccc.cells.emplace(std::move(verts), static_cast<int>(rank)).second)
                sc.fail("cell listed twice");
            toks = sc.next();
        }
        obj = std::move(ccc);
    }

    std::optional<FeatureMatrix> fm;
    if (!toks.empty() && toks[0] == "features") {
        if (toks.size() != 1) sc.fail("features sentinel takes no fields");
        if (h.feature_dim < 1) sc.fail("features block requires feature_dim in the header");
        Matrix rows = detail::parse_feature_rows(sc, order.size(), h.feature_dim);
        fm = detail::feature_matrix_from_rows(order, std::move(rows), h.feature_dim);
        toks = sc.next();
        if (!toks.empty()) sc.fail("trailing content after feature block");
    } else if (!toks.empty()) {
        sc.fail("unexpected line '" + toks[0] + "'");
    }
    return ReadResult{std::move(obj), std::move(fm)};
}

inline ReadResult parse_domain(const std::string& text,
                               std::optional<DomainKind> expected = std::nullopt,
                               std::string_view source_name = "<string>") {
    std::istringstream in(text);
    return parse_domain(in, expected, source_name);
}

/// Strict read: parses and validates, throwing ValidationError with the full
/// report when the loaded object violates its invariants.
inline DomainObject read_domain(const std::filesystem::path& path,
                                std::optional<DomainKind> expected = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open");
    ReadResult r = parse_domain(in, expected, path.string());
    auto report = validate(r.object);
    if (!report.empty())
        throw ValidationError(path.string() + ": loaded object is invalid", std::move(report));
    return std::move(r.object);
}

// ---------------------------------------------------------------------------
// Pipeline configuration
// ---------------------------------------------------------------------------

struct PipelineConfig {
    std::optional<std::string> input_path;
    std::optional<DomainKind> kind;
    std::optional<std::string> lifting_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<Aggregation> aggregation;
    std::optional<std::string> output_path;
};

/// Config files use the same line-oriented document shape: a "config" header
/// followed by "key value" lines (input, kind, lifting, param NAME VALUE,
/// features, output). Lifting ids and parameters are checked against the
/// registry.
inline PipelineConfig parse_config(std::istream& in, std::string_view source_name = "<config>") {
    detail::LineScanner sc(in, source_name);
    const auto& header = sc.next();
    if (header.empty() || header[0] != "config" || header.size() != 1)
        sc.fail("config files start with a bare 'config' line");
    PipelineConfig cfg;
    for (auto toks = sc.next(); !toks.empty(); toks = sc.next()) {
        const std::string& key = toks[0];
        auto need_value = [&](size_t count) {
            if (toks.size() != count + 1)
                sc.fail("'" + key + "' takes " + std::to_string(count) + " field(s)");
        };
        if (key == "input" || key == "output") {
            need_value(1);
            auto& slot = key == "input" ? cfg.input_path : cfg.output_path;
            if (slot) sc.fail("duplicate '" + key + "'");
            slot = toks[1];
        } else if (key == "kind") {
            need_value(1);
            if (cfg.kind) sc.fail("duplicate 'kind'");
            cfg.kind = parse_kind(toks[1]);
            if (!cfg.kind) sc.fail("unknown kind '" + toks[1] + "'");
        } else if (key == "lifting") {
            need_value(1);
            if (cfg.lifting_id) sc.fail("duplicate 'lifting'");
            cfg.lifting_id = toks[1];
        } else if (key == "param") {
            need_value(2);
            for (const auto& [name, value] : cfg.params)
                if (name == toks[1]) sc.fail("duplicate param '" + toks[1] + "'");
            cfg.params.push_back({toks[1], toks[2]});
        } else if (key == "features") {
            need_value(1);
            if (cfg.aggregation) sc.fail("duplicate 'features'");
            cfg.aggregation = parse_aggregation(toks[1]);
            if (!cfg.aggregation) sc.fail("features must be one of sum/mean/max");
        } else {
            sc.fail("unknown config key '" + key + "'");
        }
    }
    if (cfg.lifting_id) {
        const LiftingDescriptor& desc = registry_get(*cfg.lifting_id);  // throws UsageError
        ParamMap raw;
        for (const auto& [name, value] : cfg.params) raw[name] = value;
        default_registry().resolve_params(desc, raw);  // type/constraint check
    }
    return cfg;
}

inline PipelineConfig read_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open");
    return parse_config(in, path.string());
}

} // namespace topolift
