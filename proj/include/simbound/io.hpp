#pragma once

#include <cctype>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "simbound/action.hpp"
#include "simbound/cohomology.hpp"
#include "simbound/covering.hpp"
#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"
#include "simbound/group.hpp"
#include "simbound/spaces.hpp"

namespace simbound::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::io, "cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const std::exception& ex) {
        fail(errc::io, "parse error in " + path + ": " + ex.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), errc::io, "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

namespace detail {

inline const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    require(it != j.end(), errc::io, std::string("missing field \"") + name + "\"");
    return *it;
}

} // namespace detail

// --- groups and representations ---------------------------------------------

inline json group_to_json(const FiniteGroup& g) {
    return json{{"order", g.order}, {"table", g.table}};
}

inline FiniteGroup group_from_json(const json& j) {
    try {
        auto table = detail::field(j, "table").get<std::vector<std::vector<std::size_t>>>();
        std::size_t order = detail::field(j, "order").get<std::size_t>();
        require(table.size() == order, errc::io, "order disagrees with the table");
        return group_from_table(table);
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad group JSON: ") + ex.what());
    }
}

inline json representation_to_json(const Representation& rep) {
    json mats = json::object();
    for (std::size_t g = 0; g < rep.matrices.size(); ++g)
        mats[std::to_string(g)] = rep.matrices[g];
    return json{{"dim", rep.dim}, {"matrices", mats}};
}

/// Matrices are keyed by element index; the group is supplied separately
/// and the result is fully validated against it.
inline Representation representation_from_json(const json& j, const FiniteGroup& group) {
    try {
        Representation rep;
        rep.group = group;
        rep.dim = detail::field(j, "dim").get<std::size_t>();
        const json& mats = detail::field(j, "matrices");
        rep.matrices.resize(group.order);
        for (std::size_t g = 0; g < group.order; ++g) {
            auto it = mats.find(std::to_string(g));
            require(it != mats.end(), errc::io,
                    "missing matrix for element " + std::to_string(g));
            rep.matrices[g] = it->get<std::vector<std::vector<std::int64_t>>>();
        }
        validate_representation(rep);
        return rep;
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad representation JSON: ") + ex.what());
    }
}

/// Shorthand or file: "Z<m>" is cyclic of order m, "Z2^<k>" elementary
/// abelian of rank k, anything else a path to a group JSON file.
inline FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.size() >= 2 && spec[0] == 'Z') {
        bool shorthand = true;
        for (std::size_t i = 1; i < spec.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(spec[i])) && spec[i] != '^')
                shorthand = false;
        if (shorthand) {
            auto caret = spec.find('^');
            if (caret == std::string::npos)
                return cyclic_group(static_cast<std::size_t>(std::stoull(spec.substr(1))));
            require(spec.substr(1, caret - 1) == "2", errc::io,
                    "only Z2^k powers are supported: " + spec);
            return elementary_abelian(
                static_cast<std::size_t>(std::stoull(spec.substr(caret + 1))));
        }
    }
    return group_from_json(read_json_file(spec));
}

/// Shorthand or file: "sign" is the coordinate-flip representation of an
/// elementary abelian 2-group (element bit i flips coordinate i), "neg:<d>"
/// is +/-identity on Z^d for a group of order 2, anything else a path to a
/// representation JSON file. Shorthands are validated against the given
/// group, so they reject tables indexed incompatibly with the convention.
inline Representation parse_representation_spec(const std::string& spec,
                                                const FiniteGroup& group) {
    if (spec == "sign") {
        require(is_elementary_abelian_2(group), errc::io,
                "sign representation needs an elementary abelian 2-group");
        std::size_t k = 0;
        while ((std::size_t(1) << k) < group.order) ++k;
        require((std::size_t(1) << k) == group.order, errc::io,
                "group order is not a power of 2");
        Representation rep;
        rep.group = group;
        rep.dim = std::max<std::size_t>(k, 1);
        rep.matrices.resize(group.order);
        for (std::size_t g = 0; g < group.order; ++g) {
            rep.matrices[g].assign(rep.dim, std::vector<std::int64_t>(rep.dim, 0));
            for (std::size_t i = 0; i < rep.dim; ++i)
                rep.matrices[g][i][i] = ((g >> i) & 1) ? -1 : 1;
        }
        validate_representation(rep);
        return rep;
    }
    if (spec.rfind("neg:", 0) == 0) {
        require(group.order == 2, errc::io, "neg:<d> needs a group of order 2");
        std::size_t d = static_cast<std::size_t>(std::stoull(spec.substr(4)));
        require(d >= 1, errc::io, "neg:<d> needs d >= 1");
        Representation rep;
        rep.group = group;
        rep.dim = d;
        rep.matrices.resize(2);
        for (std::size_t g = 0; g < 2; ++g) {
            std::int64_t diag = (g == group.identity) ? 1 : -1;
            rep.matrices[g].assign(d, std::vector<std::int64_t>(d, 0));
            for (std::size_t i = 0; i < d; ++i) rep.matrices[g][i][i] = diag;
        }
        validate_representation(rep);
        return rep;
    }
    return representation_from_json(read_json_file(spec), group);
}

// --- spaces ------------------------------------------------------------------

inline json complex_to_json(const SimplicialComplex& sc) {
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& f : simbound::detail::maximal_faces(sc)) facets.push_back(f);
    return json{{"vertices", sc.vertex_count}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    try {
        auto vertices = detail::field(j, "vertices").get<std::size_t>();
        auto facets =
            detail::field(j, "facets").get<std::vector<std::vector<std::size_t>>>();
        return complex_from_facets(vertices, facets);
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad complex JSON: ") + ex.what());
    }
}

inline json delta_to_json(const DeltaSet& ds) {
    json faces = json::object();
    for (std::size_t k = 1; k < ds.faces.size(); ++k) faces[std::to_string(k)] = ds.faces[k];
    return json{{"counts", ds.counts}, {"faces", faces}};
}

inline DeltaSet delta_from_json(const json& j) {
    try {
        DeltaSet ds;
        ds.counts = detail::field(j, "counts").get<std::vector<std::size_t>>();
        require(!ds.counts.empty(), errc::io, "empty counts");
        const json& faces = detail::field(j, "faces");
        ds.faces.resize(ds.counts.size());
        ds.faces[0].assign(ds.counts[0], {});
        for (std::size_t k = 1; k < ds.counts.size(); ++k) {
            auto it = faces.find(std::to_string(k));
            if (it == faces.end()) {
                require(ds.counts[k] == 0, errc::io,
                        "missing faces for dimension " + std::to_string(k));
                continue;
            }
            ds.faces[k] = it->get<std::vector<std::vector<std::size_t>>>();
        }
        validate_delta_set(ds);
        return ds;
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad delta-set JSON: ") + ex.what());
    }
}

/// A space file is either a complex ("facets") or a delta-set ("counts").
inline DeltaSet space_from_json(const json& j) {
    if (j.contains("facets")) return complex_to_delta(complex_from_json(j));
    if (j.contains("counts")) return delta_from_json(j);
    fail(errc::io, "space JSON has neither \"facets\" nor \"counts\"");
}

inline DeltaSet load_space(const std::string& path) {
    return space_from_json(read_json_file(path));
}

// --- actions, cochains, coverings ---------------------------------------------

inline json action_to_json(const GroupAction& act) {
    return json{{"group", group_to_json(act.group)}, {"perms", act.perms}};
}

inline GroupAction action_from_json(const json& j) {
    try {
        GroupAction act;
        act.group = group_from_json(detail::field(j, "group"));
        act.perms = detail::field(j, "perms")
                        .get<std::vector<std::vector<std::vector<std::size_t>>>>();
        return act;
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad action JSON: ") + ex.what());
    }
}

inline json cochain_to_json(const Cochain& c) {
    std::vector<int> bits(c.values.size());
    for (std::size_t i = 0; i < c.values.size(); ++i) bits[i] = c.values.get(i);
    return json{{"degree", c.degree}, {"values", bits}};
}

inline Cochain cochain_from_json(const json& j) {
    try {
        Cochain c;
        c.degree = detail::field(j, "degree").get<std::size_t>();
        auto bits = detail::field(j, "values").get<std::vector<int>>();
        c.values = f2::F2Vector(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            require(bits[i] == 0 || bits[i] == 1, errc::io, "cochain values must be 0/1");
            c.values.set(i, bits[i] == 1);
        }
        return c;
    } catch (const json::exception& ex) {
        fail(errc::io, std::string("bad cochain JSON: ") + ex.what());
    }
}

inline json covering_to_json(const Covering& cov) {
    return json{{"base", delta_to_json(cov.base)},
                {"total", delta_to_json(cov.total)},
                {"projection", cov.projection},
                {"sheet_bits", cov.sheet_bits},
                {"deck", action_to_json(cov.deck)}};
}

} // namespace simbound::io
