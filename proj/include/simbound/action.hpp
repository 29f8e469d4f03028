#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"
#include "simbound/f2.hpp"
#include "simbound/group.hpp"

namespace simbound {

/// Group action on a delta-set: perms[g][k][s] is the image of simplex s
/// of dimension k under element g. Plain data; validate_action checks the
/// action axioms and strict face-compatibility.
struct GroupAction {
    FiniteGroup group;
    std::vector<std::vector<std::vector<std::size_t>>> perms;

    std::size_t apply(std::size_t g, std::size_t k, std::size_t s) const {
        return perms[g][k][s];
    }
};

namespace detail {

inline void check_action_shape(const DeltaSet& ds, const GroupAction& act) {
    require(act.perms.size() == act.group.order, errc::dimension_mismatch,
            "expected one permutation family per group element");
    for (std::size_t g = 0; g < act.group.order; ++g) {
        require(act.perms[g].size() == ds.counts.size(), errc::dimension_mismatch,
                "element " + std::to_string(g) + " does not act in every dimension");
        for (std::size_t k = 0; k < ds.counts.size(); ++k) {
            require(act.perms[g][k].size() == ds.counts[k], errc::dimension_mismatch,
                    "element " + std::to_string(g) + " acts on the wrong number of " +
                        std::to_string(k) + "-simplices");
            std::vector<bool> hit(ds.counts[k], false);
            for (std::size_t s = 0; s < ds.counts[k]; ++s) {
                std::size_t img = act.perms[g][k][s];
                require(img < ds.counts[k] && !hit[img], errc::orbit_violation,
                        "element " + std::to_string(g) + " is not a permutation in dimension " +
                            std::to_string(k));
                hit[img] = true;
            }
        }
    }
}

inline void check_action_axioms(const DeltaSet& ds, const GroupAction& act) {
    const auto& g = act.group;
    for (std::size_t k = 0; k < ds.counts.size(); ++k)
        for (std::size_t s = 0; s < ds.counts[k]; ++s)
            require(act.perms[g.identity][k][s] == s, errc::identity_violation,
                    "identity moves " + simplex_name(k, s));
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b) {
            std::size_t ab = g.mult(a, b);
            for (std::size_t k = 0; k < ds.counts.size(); ++k)
                for (std::size_t s = 0; s < ds.counts[k]; ++s)
                    require(act.perms[ab][k][s] == act.perms[a][k][act.perms[b][k][s]],
                            errc::orbit_violation,
                            "(" + std::to_string(a) + "*" + std::to_string(b) +
                                ") and " + std::to_string(a) + " after " + std::to_string(b) +
                                " disagree on " + simplex_name(k, s));
        }
}

inline void check_face_commutation(const DeltaSet& ds, const GroupAction& act) {
    for (std::size_t g = 0; g < act.group.order; ++g)
        for (std::size_t k = 1; k <= ds.dim(); ++k)
            for (std::size_t s = 0; s < ds.counts[k]; ++s)
                for (std::size_t i = 0; i <= k; ++i)
                    require(ds.faces[k][act.perms[g][k][s]][i] ==
                                act.perms[g][k - 1][ds.faces[k][s][i]],
                            errc::commutation,
                            "element " + std::to_string(g) + " does not commute with d_" +
                                std::to_string(i) + " on " + simplex_name(k, s));
}

inline void check_freeness(const DeltaSet& ds, const GroupAction& act) {
    for (std::size_t g = 0; g < act.group.order; ++g) {
        if (g == act.group.identity) continue;
        for (std::size_t k = 0; k < ds.counts.size(); ++k)
            for (std::size_t s = 0; s < ds.counts[k]; ++s)
                require(act.perms[g][k][s] != s, errc::not_free,
                        "element " + std::to_string(g) + " fixes " + simplex_name(k, s));
    }
}

} // namespace detail

/// Full validation: shape, identity, compatibility with multiplication,
/// and strict commutation with every face map. Does not require freeness.
inline void validate_action(const DeltaSet& ds, const GroupAction& act) {
    detail::check_action_shape(ds, act);
    detail::check_action_axioms(ds, act);
    detail::check_face_commutation(ds, act);
}

/// Builds an action on complex_to_delta(sc) from vertex permutations.
/// vertex_perms[g][v] is the image vertex. Each simplex must map to a
/// simplex of the complex with distinct vertices; the induced action
/// commutes with the face maps by construction (images keep sorted order).
inline GroupAction delta_action_from_vertex_perms(
    const SimplicialComplex& sc, const FiniteGroup& group,
    const std::vector<std::vector<std::size_t>>& vertex_perms) {
    require(vertex_perms.size() == group.order, errc::dimension_mismatch,
            "expected one vertex permutation per group element");
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(sc.faces.size());
    for (std::size_t k = 0; k < sc.faces.size(); ++k)
        for (std::size_t s = 0; s < sc.faces[k].size(); ++s) index[k][sc.faces[k][s]] = s;

    GroupAction act;
    act.group = group;
    act.perms.assign(group.order, {});
    for (std::size_t g = 0; g < group.order; ++g) {
        require(vertex_perms[g].size() == sc.vertex_count, errc::dimension_mismatch,
                "vertex permutation for element " + std::to_string(g) + " has wrong length");
        act.perms[g].resize(sc.faces.size());
        for (std::size_t k = 0; k < sc.faces.size(); ++k) {
            act.perms[g][k].resize(sc.faces[k].size());
            for (std::size_t s = 0; s < sc.faces[k].size(); ++s) {
                std::vector<std::size_t> image;
                image.reserve(k + 1);
                for (auto v : sc.faces[k][s]) image.push_back(vertex_perms[g][v]);
                std::sort(image.begin(), image.end());
                require(std::adjacent_find(image.begin(), image.end()) == image.end(),
                        errc::degenerate_face,
                        "element " + std::to_string(g) + " collapses " +
                            detail::simplex_name(k, s));
                auto it = index[k].find(image);
                require(it != index[k].end(), errc::orbit_violation,
                        "element " + std::to_string(g) + " maps " +
                            detail::simplex_name(k, s) + " outside the complex");
                act.perms[g][k][s] = it->second;
            }
        }
    }
    return act;
}

/// Quotient delta-set together with the projection and a minimal-index
/// representative per orbit.
struct QuotientResult {
    DeltaSet ds;
    std::vector<std::vector<std::size_t>> projection;
    std::vector<std::vector<std::size_t>> representatives;
};

/// Quotient by a free, strictly face-compatible action. Freeness is
/// checked before face-compatibility, so an action with fixed simplices
/// reports not_free even when it also fails to commute.
inline QuotientResult quotient_by_action(const DeltaSet& ds, const GroupAction& act) {
    detail::check_action_shape(ds, act);
    detail::check_action_axioms(ds, act);
    detail::check_freeness(ds, act);
    detail::check_face_commutation(ds, act);

    QuotientResult q;
    q.projection.resize(ds.counts.size());
    q.representatives.resize(ds.counts.size());
    for (std::size_t k = 0; k < ds.counts.size(); ++k) {
        q.projection[k].assign(ds.counts[k], ds.counts[k]);
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            if (q.projection[k][s] != ds.counts[k]) continue;
            std::size_t orbit = q.representatives[k].size();
            q.representatives[k].push_back(s);
            for (std::size_t g = 0; g < act.group.order; ++g)
                q.projection[k][act.perms[g][k][s]] = orbit;
        }
    }
    q.ds.counts.resize(ds.counts.size());
    q.ds.faces.resize(ds.counts.size());
    for (std::size_t k = 0; k < ds.counts.size(); ++k) {
        q.ds.counts[k] = q.representatives[k].size();
        if (k == 0) {
            q.ds.faces[0].assign(q.ds.counts[0], {});
            continue;
        }
        q.ds.faces[k].resize(q.ds.counts[k]);
        for (std::size_t o = 0; o < q.ds.counts[k]; ++o) {
            std::size_t rep = q.representatives[k][o];
            q.ds.faces[k][o].resize(k + 1);
            for (std::size_t i = 0; i <= k; ++i)
                q.ds.faces[k][o][i] = q.projection[k - 1][ds.faces[k][rep][i]];
        }
    }
    validate_delta_set(q.ds);
    return q;
}

/// f-vector of the orbit space without building it. Needs freeness: every
/// orbit then has exactly |G| simplices.
inline std::vector<std::size_t> orbit_f_vector(const DeltaSet& ds, const GroupAction& act) {
    detail::check_action_shape(ds, act);
    detail::check_action_axioms(ds, act);
    detail::check_freeness(ds, act);
    std::vector<std::size_t> out(ds.counts.size());
    for (std::size_t k = 0; k < ds.counts.size(); ++k)
        out[k] = ds.counts[k] / act.group.order;
    return out;
}

/// True when no simplex has two distinct vertices in one orbit of the
/// vertex action. Repeated equal vertices do not count: with a free
/// vertex action they force the group element to be the identity.
/// Fails with not_free_on_vertices when the vertex action is not free.
inline bool meets_each_orbit_once(const DeltaSet& ds, const GroupAction& act) {
    detail::check_action_shape(ds, act);
    detail::check_action_axioms(ds, act);
    for (std::size_t g = 0; g < act.group.order; ++g) {
        if (g == act.group.identity) continue;
        for (std::size_t v = 0; v < ds.counts[0]; ++v)
            require(act.perms[g][0][v] != v, errc::not_free_on_vertices,
                    "element " + std::to_string(g) + " fixes vertex " + std::to_string(v));
    }
    std::vector<std::size_t> orbit(ds.counts[0], ds.counts[0]);
    std::size_t orbits = 0;
    for (std::size_t v = 0; v < ds.counts[0]; ++v) {
        if (orbit[v] != ds.counts[0]) continue;
        for (std::size_t g = 0; g < act.group.order; ++g) orbit[act.perms[g][0][v]] = orbits;
        ++orbits;
    }
    for (std::size_t k = 1; k <= ds.dim(); ++k)
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            auto verts = vertex_tuple(ds, k, s);
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j)
                    if (verts[i] != verts[j] && orbit[verts[i]] == orbit[verts[j]])
                        return false;
        }
    return true;
}

inline bool is_invariant(const GroupAction& act, std::size_t k,
                         const f2::F2Vector& values) {
    for (std::size_t g = 0; g < act.group.order; ++g)
        for (std::size_t s = 0; s < values.size(); ++s)
            if (values.get(act.perms[g][k][s]) != values.get(s)) return false;
    return true;
}

/// Pushes an invariant mod-2 cochain down to the quotient by sampling at
/// orbit representatives. Fails with not_invariant otherwise.
inline f2::F2Vector descend_values(const QuotientResult& q, const GroupAction& act,
                                   std::size_t k, const f2::F2Vector& values) {
    require(values.size() == q.projection[k].size(), errc::dimension_mismatch,
            "cochain length differs from simplex count");
    require(is_invariant(act, k, values), errc::not_invariant,
            "cochain is not constant on orbits in dimension " + std::to_string(k));
    f2::F2Vector out(q.representatives[k].size());
    for (std::size_t o = 0; o < q.representatives[k].size(); ++o)
        out.set(o, values.get(q.representatives[k][o]));
    return out;
}

/// Restriction of an action to an invariant sub-delta-set. Fails with
/// orbit_violation when some member leaves the member set.
inline GroupAction restrict_action(const GroupAction& act, const SubComplex& sub) {
    std::vector<std::map<std::size_t, std::size_t>> local(sub.to_ambient.size());
    for (std::size_t k = 0; k < sub.to_ambient.size(); ++k)
        for (std::size_t s = 0; s < sub.to_ambient[k].size(); ++s)
            local[k][sub.to_ambient[k][s]] = s;
    GroupAction out;
    out.group = act.group;
    out.perms.resize(act.group.order);
    for (std::size_t g = 0; g < act.group.order; ++g) {
        out.perms[g].resize(sub.to_ambient.size());
        for (std::size_t k = 0; k < sub.to_ambient.size(); ++k) {
            out.perms[g][k].resize(sub.to_ambient[k].size());
            for (std::size_t s = 0; s < sub.to_ambient[k].size(); ++s) {
                std::size_t img = act.perms[g][k][sub.to_ambient[k][s]];
                auto it = local[k].find(img);
                require(it != local[k].end(), errc::orbit_violation,
                        "element " + std::to_string(g) + " maps " +
                            detail::simplex_name(k, sub.to_ambient[k][s]) +
                            " outside the sub-delta-set");
                out.perms[g][k][s] = it->second;
            }
        }
    }
    return out;
}

/// Pullback along the quotient projection.
inline f2::F2Vector lift_values(const QuotientResult& q, std::size_t k,
                                const f2::F2Vector& values) {
    require(values.size() == q.representatives[k].size(), errc::dimension_mismatch,
            "cochain length differs from orbit count");
    f2::F2Vector out(q.projection[k].size());
    for (std::size_t s = 0; s < q.projection[k].size(); ++s)
        out.set(s, values.get(q.projection[k][s]));
    return out;
}

} // namespace simbound
