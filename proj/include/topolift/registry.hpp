#pragma once

// The lifting registry: one descriptor per implemented lifting, carrying the
// (source, destination) domain pair, the feature-based / connectivity-based
// classification, and a typed parameter schema. registry_apply dispatches a
// domain object through the named lifting after checking kinds and
// parameter constraints.

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topolift/domains.hpp"
#include "topolift/liftings.hpp"

namespace topolift {

enum class ParamType { Int, Real, Choice };

using ParamValue = std::variant<long long, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::Int;
    ParamValue default_value;
    std::optional<double> min_value;    // inclusive unless min_exclusive
    bool min_exclusive = false;
    std::vector<std::string> choices;   // for Choice params

    std::string constraint_text() const {
        if (type == ParamType::Choice) {
            std::string s = "one of {";
            for (size_t i = 0; i < choices.size(); ++i) {
                if (i) s += ",";
                s += choices[i];
            }
            return s + "}";
        }
        if (min_value) return (min_exclusive ? "> " : ">= ") + format_value(ParamValue{*min_value});
        return "any";
    }

    static std::string format_value(const ParamValue& v) {
        if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
        if (std::holds_alternative<double>(v)) {
            char buf[32];
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
            return std::string(buf, p);
        }
        return std::get<std::string>(v);
    }
};

struct LiftingDescriptor {
    std::string id;
    DomainKind source = DomainKind::Graph;
    DomainKind dest = DomainKind::Graph;
    bool feature_based = false;
    bool connectivity_based = false;
    std::vector<ParamSpec> params;
    std::string summary;

    const ParamSpec* find_param(const std::string& name) const {
        for (const auto& p : params)
            if (p.name == name) return &p;
        return nullptr;
    }
};

namespace detail {

inline long long as_int(const ParamMap& pm, const std::string& name) {
    return std::get<long long>(pm.at(name));
}
inline double as_real(const ParamMap& pm, const std::string& name) {
    const ParamValue& v = pm.at(name);
    if (std::holds_alternative<long long>(v)) return static_cast<double>(std::get<long long>(v));
    return std::get<double>(v);
}
inline const std::string& as_choice(const ParamMap& pm, const std::string& name) {
    return std::get<std::string>(pm.at(name));
}

} // namespace detail

class LiftingRegistry {
public:
    using ApplyFn = std::function<DomainObject(const DomainObject&, const ParamMap&)>;

    void add(LiftingDescriptor desc, ApplyFn fn) {
        const std::string id = desc.id;
        if (!entries_.emplace(id, Entry{std::move(desc), std::move(fn)}).second)
            throw std::logic_error("registry: duplicate lifting id " + id);
    }

    const LiftingDescriptor& get(const std::string& id) const {
        auto it = entries_.find(id);
        if (it == entries_.end()) throw UsageError("unknown lifting id '" + id + "'");
        return it->second.desc;
    }

    /// Descriptors matching both filters, ordered by id.
    std::vector<const LiftingDescriptor*> list(std::optional<DomainKind> source = std::nullopt,
                                               std::optional<DomainKind> dest = std::nullopt) const {
        std::vector<const LiftingDescriptor*> out;
        for (const auto& [id, entry] : entries_) {
            if (source && entry.desc.source != *source) continue;
            if (dest && entry.desc.dest != *dest) continue;
            out.push_back(&entry.desc);
        }
        return out;
    }

    /// Fills defaults, then checks names, types and constraints. String
    /// values are accepted for any type and parsed against the schema.
    ParamMap resolve_params(const LiftingDescriptor& desc, const ParamMap& given) const {
        ParamMap out;
        for (const auto& spec : desc.params) out[spec.name] = spec.default_value;
        for (const auto& [name, value] : given) {
            const ParamSpec* spec = desc.find_param(name);
            if (!spec)
                throw UsageError("lifting '" + desc.id + "' has no parameter '" + name + "'");
            out[name] = coerce(desc.id, *spec, value);
        }
        return out;
    }

    DomainObject apply(const std::string& id, const DomainObject& input,
                       const ParamMap& params = {}) const {
        auto it = entries_.find(id);
        if (it == entries_.end()) throw UsageError("unknown lifting id '" + id + "'");
        const Entry& entry = it->second;
        if (kind_of(input) != entry.desc.source)
            throw UsageError("lifting '" + id + "' expects a " +
                             std::string(kind_name(entry.desc.source)) + " source, got " +
                             std::string(kind_name(kind_of(input))));
        return entry.fn(input, resolve_params(entry.desc, params));
    }

private:
    struct Entry {
        LiftingDescriptor desc;
        ApplyFn fn;
    };

    static ParamValue coerce(const std::string& id, const ParamSpec& spec, const ParamValue& v) {
        ParamValue value = v;
        if (std::holds_alternative<std::string>(v) && spec.type != ParamType::Choice) {
            const std::string& s = std::get<std::string>(v);
            if (spec.type == ParamType::Int) {
                long long parsed = 0;
                auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
                if (ec != std::errc{} || p != s.data() + s.size())
                    throw UsageError("parameter '" + spec.name + "' of '" + id +
                                     "': expected an integer, got '" + s + "'");
                value = parsed;
            } else {
                double parsed = 0;
                auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
                if (ec != std::errc{} || p != s.data() + s.size())
                    throw UsageError("parameter '" + spec.name + "' of '" + id +
                                     "': expected a number, got '" + s + "'");
                value = parsed;
            }
        }
        switch (spec.type) {
            case ParamType::Int:
                if (!std::holds_alternative<long long>(value))
                    throw UsageError("parameter '" + spec.name + "' of '" + id +
                                     "' must be an integer");
                break;
            case ParamType::Real:
                if (std::holds_alternative<long long>(value))
                    value = static_cast<double>(std::get<long long>(value));
                if (!std::holds_alternative<double>(value))
                    throw UsageError("parameter '" + spec.name + "' of '" + id +
                                     "' must be a number");
                break;
            case ParamType::Choice: {
                if (!std::holds_alternative<std::string>(value))
                    throw UsageError("parameter '" + spec.name + "' of '" + id +
                                     "' must be a string");
                const std::string& s = std::get<std::string>(value);
                if (std::find(spec.choices.begin(), spec.choices.end(), s) == spec.choices.end())
                    throw UsageError("parameter '" + spec.name + "' of '" + id + "' must be " +
                                     spec.constraint_text() + ", got '" + s + "'");
                return value;
            }
        }
        if (spec.min_value) {
            const double x = std::holds_alternative<long long>(value)
                                 ? static_cast<double>(std::get<long long>(value))
                                 : std::get<double>(value);
            const bool ok = spec.min_exclusive ? x > *spec.min_value : x >= *spec.min_value;
            if (!ok)
                throw UsageError("parameter '" + spec.name + "' of '" + id + "' must be " +
                                 spec.constraint_text() + ", got " +
                                 ParamSpec::format_value(value));
        }
        return value;
    }

    std::map<std::string, Entry> entries_;
};

namespace detail {

inline ParamSpec int_param(std::string name, long long def, long long min) {
    return ParamSpec{std::move(name), ParamType::Int, ParamValue{def},
                     static_cast<double>(min), false, {}};
}
inline ParamSpec real_param(std::string name, double def, std::optional<double> min,
                            bool exclusive) {
    return ParamSpec{std::move(name), ParamType::Real, ParamValue{def}, min, exclusive, {}};
}
inline ParamSpec choice_param(std::string name, std::string def,
                              std::vector<std::string> choices) {
    return ParamSpec{std::move(name), ParamType::Choice, ParamValue{std::move(def)},
                     std::nullopt, false, std::move(choices)};
}

inline LiftingRegistry build_default_registry() {
    using DK = DomainKind;
    LiftingRegistry reg;

    // --- pointcloud sources ---
    reg.add({"knn_graph", DK::PointCloud, DK::Graph, true, false,
             {int_param("k", 1, 1), choice_param("mode", "union", {"union", "mutual"})},
             "k-nearest-neighbor graph (ties to lower index); union or mutual pairing"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_knn_graph(
                    std::get<PointCloud>(in), static_cast<int>(as_int(p, "k")),
                    *parse_knn_mode(as_choice(p, "mode"))));
            });
    reg.add({"vietoris_rips", DK::PointCloud, DK::Simplicial, true, false,
             {real_param("eps", 1.0, 0.0, true), int_param("max_dim", 2, 1)},
             "flag complex of the eps-threshold graph on pairwise distances"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_vietoris_rips(std::get<PointCloud>(in),
                                                       as_real(p, "eps"),
                                                       static_cast<int>(as_int(p, "max_dim"))));
            });
    reg.add({"delaunay", DK::PointCloud, DK::Simplicial, true, false, {},
             "Bowyer-Watson planar Delaunay triangulation (degenerate input rejected)"},
            [](const DomainObject& in, const ParamMap&) {
                return DomainObject(lift_delaunay(std::get<PointCloud>(in)));
            });
    reg.add({"voronoi_landmarks", DK::PointCloud, DK::Hypergraph, true, false,
             {int_param("m", 2, 1)},
             "farthest-point-sampled landmarks; each Voronoi cell of size >= 2 is a hyperedge"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_voronoi_landmarks(std::get<PointCloud>(in),
                                                           static_cast<int>(as_int(p, "m"))));
            });

    // --- graph sources ---
    reg.add({"clique", DK::Graph, DK::Simplicial, false, true,
             {int_param("max_dim", 2, 1)},
             "flag complex: k-simplices are the (k+1)-cliques"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_clique(std::get<Graph>(in),
                                                static_cast<int>(as_int(p, "max_dim"))));
            });
    reg.add({"neighborhood_complex", DK::Graph, DK::Simplicial, false, true,
             {int_param("max_dim", 2, 1)},
             "simplices are vertex sets dominated by a common neighbor"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_neighborhood_complex(
                    std::get<Graph>(in), static_cast<int>(as_int(p, "max_dim"))));
            });
    reg.add({"line", DK::Graph, DK::Simplicial, false, true,
             {int_param("max_dim", 2, 1)},
             "clique complex of the line graph"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_line(std::get<Graph>(in),
                                              static_cast<int>(as_int(p, "max_dim"))));
            });
    reg.add({"cycles_to_cells", DK::Graph, DK::Cell, false, true,
             {int_param("max_len", 12, 3)},
             "one 2-cell per chordless cycle of length 3..max_len"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_cycles_to_cells(std::get<Graph>(in),
                                                         static_cast<int>(as_int(p, "max_len"))));
            });
    reg.add({"khop_hypergraph", DK::Graph, DK::Hypergraph, false, true,
             {int_param("k", 1, 1)},
             "one hyperedge per vertex: its k-hop neighborhood (size >= 2)"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_khop_hypergraph(std::get<Graph>(in),
                                                         static_cast<int>(as_int(p, "k"))));
            });
    reg.add({"forman_ricci", DK::Graph, DK::Hypergraph, false, true,
             {real_param("threshold", 0.0, std::nullopt, false)},
             "drop edges with Forman curvature 4-deg(u)-deg(v) below the threshold; "
             "surviving components become hyperedges"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_forman_ricci(std::get<Graph>(in),
                                                      as_real(p, "threshold")));
            });
    reg.add({"nhop_ccc", DK::Graph, DK::Combinatorial, false, true,
             {int_param("k", 1, 1)},
             "singletons at rank 0, edges at rank 1, k-hop neighborhoods of size >= 3 at rank 2"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_nhop_ccc(std::get<Graph>(in),
                                                  static_cast<int>(as_int(p, "k"))));
            });
    reg.add({"spectral_embedding", DK::Graph, DK::PointCloud, false, true,
             {int_param("d", 1, 1)},
             "Laplacian eigenmap onto the d smallest nonzero eigenvectors, sign-canonicalized"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_spectral_embedding(std::get<Graph>(in),
                                                            static_cast<int>(as_int(p, "d"))));
            });

    // --- hypergraph sources ---
    reg.add({"downward_closure", DK::Hypergraph, DK::Simplicial, false, true,
             {int_param("max_dim", 2, 1)},
             "every subset of size <= max_dim+1 of a hyperedge becomes a simplex"},
            [](const DomainObject& in, const ParamMap& p) {
                return DomainObject(lift_downward_closure(
                    std::get<Hypergraph>(in), static_cast<int>(as_int(p, "max_dim"))));
            });
    reg.add({"strict_ccc", DK::Hypergraph, DK::Combinatorial, false, true, {},
             "each hyperedge e becomes a cell of rank |e|-1 (strict monotonicity)"},
            [](const DomainObject& in, const ParamMap&) {
                return DomainObject(lift_strict_ccc(std::get<Hypergraph>(in)));
            });

    // --- complex sources ---
    reg.add({"sc_inclusion", DK::Simplicial, DK::Combinatorial, false, true, {},
             "rank-preserving inclusion: each k-simplex becomes a rank-k cell"},
            [](const DomainObject& in, const ParamMap&) {
                return DomainObject(lift_sc_inclusion(std::get<SimplicialComplex>(in)));
            });
    reg.add({"cell_encoding", DK::Cell, DK::Graph, false, true, {},
             "boundary-incidence graph over all cells, with one-hot rank features"},
            [](const DomainObject& in, const ParamMap&) {
                return DomainObject(lift_cell_encoding(std::get<CellComplex>(in)));
            });

    return reg;
}

} // namespace detail

/// The built-in catalog; constructed once, read-only afterwards.
inline const LiftingRegistry& default_registry() {
    static const LiftingRegistry reg = detail::build_default_registry();
    return reg;
}

inline std::vector<const LiftingDescriptor*> registry_list(
    std::optional<DomainKind> source = std::nullopt,
    std::optional<DomainKind> dest = std::nullopt) {
    return default_registry().list(source, dest);
}

inline const LiftingDescriptor& registry_get(const std::string& id) {
    return default_registry().get(id);
}

inline DomainObject registry_apply(const std::string& id, const DomainObject& input,
                                   const ParamMap& params = {}) {
    return default_registry().apply(id, input, params);
}

} // namespace topolift
