#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simbound/action.hpp"
#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"
#include "simbound/group.hpp"

namespace simbound {

// ---------------------------------------------------------------------------
// Standard complexes

/// Boundary of the d-dimensional crosspolytope, a triangulated (d-1)-sphere
/// with 2d vertices. Vertex 2*axis + sign; a face picks a set of axes and a
/// sign per axis, so no face contains an antipodal vertex pair.
inline SimplicialComplex crosspolytope_complex(std::size_t d) {
    require(d >= 1 && d <= 16, errc::too_large,
            "crosspolytope dimension " + std::to_string(d));
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t signs = 0; signs < (std::size_t(1) << d); ++signs) {
        std::vector<std::size_t> f(d);
        for (std::size_t i = 0; i < d; ++i) f[i] = 2 * i + ((signs >> i) & 1);
        facets.push_back(std::move(f));
    }
    return complex_from_facets(2 * d, facets);
}

inline DeltaSet crosspolytope_boundary(std::size_t d) {
    return complex_to_delta(crosspolytope_complex(d));
}

/// The involution v -> v ^ 1 swaps the two vertices on each axis. It keeps
/// sorted vertex order (axes are untouched), so it commutes with every face
/// map strictly.
inline GroupAction antipodal_action(const SimplicialComplex& sc) {
    std::vector<std::vector<std::size_t>> perms(2, std::vector<std::size_t>(sc.vertex_count));
    std::iota(perms[0].begin(), perms[0].end(), 0);
    for (std::size_t v = 0; v < sc.vertex_count; ++v) perms[1][v] = v ^ 1;
    return delta_action_from_vertex_perms(sc, elementary_abelian(1), perms);
}

/// Real projective n-space: antipodal quotient of the boundary of the
/// (n+1)-dimensional crosspolytope.
inline DeltaSet rp_deltaset(std::size_t n) {
    require(n >= 1, errc::too_large, "projective space of dimension 0");
    auto sc = crosspolytope_complex(n + 1);
    return quotient_by_action(complex_to_delta(sc), antipodal_action(sc)).ds;
}

/// Cycle with m vertices and m edges.
inline SimplicialComplex cycle_complex(std::size_t m) {
    require(m >= 3, errc::too_large, "cycle length " + std::to_string(m));
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m});
    return complex_from_facets(m, facets);
}

/// The 7-vertex triangulation of the torus: triangles {i, i+1, i+3} and
/// {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7_complex() {
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return complex_from_facets(7, facets);
}

inline DeltaSet torus7() { return complex_to_delta(torus7_complex()); }

namespace detail {

inline std::vector<std::vector<std::size_t>> maximal_faces(const SimplicialComplex& sc) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < sc.faces.size(); ++k) {
        std::set<std::vector<std::size_t>> covered;
        if (k + 1 < sc.faces.size())
            for (const auto& t : sc.faces[k + 1])
                for (std::size_t i = 0; i <= k + 1; ++i) {
                    std::vector<std::size_t> sub = t;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                    covered.insert(std::move(sub));
                }
        for (const auto& f : sc.faces[k])
            if (!covered.count(f)) out.push_back(f);
    }
    return out;
}

} // namespace detail

/// Staircase triangulation of the product. Vertices are pairs ordered
/// lexicographically (pair (a, b) gets index a * b_count + b); the maximal
/// simplices over a facet pair are the monotone lattice paths through the
/// grid of their vertices. Path vertices increase strictly in the pair
/// order, so the facets are valid and the pieces glue into a complex.
inline SimplicialComplex product_triangulation(const SimplicialComplex& a,
                                               const SimplicialComplex& b) {
    std::vector<std::vector<std::size_t>> facets;
    auto fa = detail::maximal_faces(a);
    auto fb = detail::maximal_faces(b);
    for (const auto& s : fa)
        for (const auto& t : fb) {
            const std::size_t p = s.size() - 1, q = t.size() - 1;
            require(p + q < 30, errc::too_large, "product facet dimension too large");
            for (std::uint64_t moves = 0; moves < (std::uint64_t(1) << (p + q)); ++moves) {
                if (static_cast<std::size_t>(std::popcount(moves)) != p) continue;
                std::vector<std::size_t> chain;
                std::size_t i = 0, j = 0;
                chain.push_back(s[0] * b.vertex_count + t[0]);
                for (std::size_t step = 0; step < p + q; ++step) {
                    if ((moves >> step) & 1)
                        ++i;
                    else
                        ++j;
                    chain.push_back(s[i] * b.vertex_count + t[j]);
                }
                facets.push_back(std::move(chain));
            }
        }
    return complex_from_facets(a.vertex_count * b.vertex_count, facets);
}

// ---------------------------------------------------------------------------
// Joins of a group and their quotients

/// Simplex of the (N+1)-fold join of a finite group with itself: a strictly
/// increasing tuple of join factors in 0..N and a group label per factor.
struct JoinSimplex {
    std::vector<std::size_t> factors;
    std::vector<std::size_t> labels;
};

/// The (N+1)-fold join of |G| points with itself, as a delta-set with the
/// free left translation action g.(labels) = (g*label_i). Simplices of
/// dimension m are indexed by the colex rank of their factor set followed
/// by their labels in big-endian base |G|.
struct EgSpace {
    FiniteGroup group;
    std::size_t factor_count = 0;
    DeltaSet ds;
    GroupAction left;
    std::vector<std::vector<std::size_t>> choose;

    std::size_t encode(const JoinSimplex& s) const {
        const std::size_t m1 = s.factors.size();
        require(m1 >= 1 && m1 == s.labels.size(), errc::dimension_mismatch,
                "factor and label tuples differ in length");
        std::size_t rank = 0;
        for (std::size_t i = 0; i < m1; ++i) {
            require(s.factors[i] < factor_count, errc::dimension_mismatch,
                    "factor " + std::to_string(s.factors[i]) + " out of range");
            require(i == 0 || s.factors[i - 1] < s.factors[i], errc::degenerate_face,
                    "factors are not strictly increasing");
            require(s.labels[i] < group.order, errc::dimension_mismatch,
                    "label out of range");
            rank += choose[s.factors[i]][i + 1];
        }
        std::size_t idx = rank;
        for (std::size_t i = 0; i < m1; ++i) idx = idx * group.order + s.labels[i];
        return idx;
    }

    JoinSimplex decode(std::size_t m, std::size_t idx) const {
        JoinSimplex s;
        s.factors.resize(m + 1);
        s.labels.resize(m + 1);
        for (std::size_t i = m + 1; i-- > 0;) {
            s.labels[i] = idx % group.order;
            idx /= group.order;
        }
        std::size_t rank = idx;
        for (std::size_t i = m + 1; i-- > 0;) {
            std::size_t v = factor_count;
            while (v-- > 0)
                if (choose[v][i + 1] <= rank) break;
            s.factors[i] = v;
            rank -= choose[v][i + 1];
        }
        return s;
    }
};

inline EgSpace eg_space(const FiniteGroup& group, std::size_t n) {
    const std::size_t f = n + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < f; ++i) {
        total *= group.order + 1;
        require(total <= 5'000'000, errc::too_large,
                "join would have more than 5e6 simplices");
    }

    EgSpace eg;
    eg.group = group;
    eg.factor_count = f;
    eg.choose.assign(f + 1, std::vector<std::size_t>(f + 2, 0));
    for (std::size_t i = 0; i <= f; ++i) {
        eg.choose[i][0] = 1;
        for (std::size_t j = 1; j <= i && j <= f + 1; ++j)
            eg.choose[i][j] = (i >= 1 ? eg.choose[i - 1][j - 1] : 0) +
                              (i >= 1 && j <= i - 1 ? eg.choose[i - 1][j] : 0);
    }

    eg.ds.counts.resize(f);
    eg.ds.faces.resize(f);
    std::size_t power = 1;
    for (std::size_t m = 0; m < f; ++m) {
        power *= group.order;
        eg.ds.counts[m] = eg.choose[f][m + 1] * power;
    }
    eg.ds.faces[0].assign(eg.ds.counts[0], {});
    for (std::size_t m = 1; m < f; ++m) {
        eg.ds.faces[m].resize(eg.ds.counts[m]);
        for (std::size_t s = 0; s < eg.ds.counts[m]; ++s) {
            JoinSimplex js = eg.decode(m, s);
            eg.ds.faces[m][s].resize(m + 1);
            for (std::size_t i = 0; i <= m; ++i) {
                JoinSimplex face = js;
                face.factors.erase(face.factors.begin() + static_cast<std::ptrdiff_t>(i));
                face.labels.erase(face.labels.begin() + static_cast<std::ptrdiff_t>(i));
                eg.ds.faces[m][s][i] = eg.encode(face);
            }
        }
    }

    eg.left.group = group;
    eg.left.perms.resize(group.order);
    for (std::size_t g = 0; g < group.order; ++g) {
        eg.left.perms[g].resize(f);
        for (std::size_t m = 0; m < f; ++m) {
            eg.left.perms[g][m].resize(eg.ds.counts[m]);
            for (std::size_t s = 0; s < eg.ds.counts[m]; ++s) {
                JoinSimplex js = eg.decode(m, s);
                for (auto& l : js.labels) l = group.mult(g, l);
                eg.left.perms[g][m][s] = eg.encode(js);
            }
        }
    }
    return eg;
}

/// Orbit space of the left translation action on the join, with the
/// projection and the minimal-index representative per orbit. Minimality
/// makes the representative the unique orbit member whose first label is
/// group element 0.
struct BgSpace {
    DeltaSet ds;
    std::vector<std::vector<std::size_t>> projection;
    std::vector<std::vector<std::size_t>> representatives;
};

inline BgSpace bg_space(const EgSpace& eg) {
    auto q = quotient_by_action(eg.ds, eg.left);
    return {std::move(q.ds), std::move(q.projection), std::move(q.representatives)};
}

// ---------------------------------------------------------------------------
// The wreath-type symmetry of the join

/// Element of G^(N+1) x| S_(N+1): a translation per factor and a factor
/// permutation. It acts on a join vertex by (k, g) -> (perm[k], g * trans[k])
/// and on a simplex by acting on its vertices and re-sorting by factor.
/// This is a right action: hn_apply(compose(a, b)) = hn_apply(b) after
/// hn_apply(a). Re-sorting means the action is simplicial only up to the
/// induced position permutation, which is all mod-2 cochain pullback needs.
struct HNElement {
    std::vector<std::size_t> trans;
    std::vector<std::size_t> perm;
};

inline HNElement hn_identity(const FiniteGroup& group, std::size_t factor_count) {
    HNElement h;
    h.trans.assign(factor_count, group.identity);
    h.perm.resize(factor_count);
    std::iota(h.perm.begin(), h.perm.end(), 0);
    return h;
}

inline void hn_validate(const FiniteGroup& group, std::size_t factor_count,
                        const HNElement& h) {
    require(h.trans.size() == factor_count && h.perm.size() == factor_count,
            errc::dimension_mismatch, "element has wrong factor count");
    std::vector<bool> hit(factor_count, false);
    for (std::size_t k = 0; k < factor_count; ++k) {
        require(h.trans[k] < group.order, errc::dimension_mismatch,
                "translation out of range at factor " + std::to_string(k));
        require(h.perm[k] < factor_count && !hit[h.perm[k]], errc::orbit_violation,
                "factor permutation is not a bijection");
        hit[h.perm[k]] = true;
    }
}

/// Apply a, then b.
inline HNElement hn_compose(const FiniteGroup& group, const HNElement& a,
                            const HNElement& b) {
    const std::size_t f = a.perm.size();
    HNElement c;
    c.trans.resize(f);
    c.perm.resize(f);
    for (std::size_t k = 0; k < f; ++k) {
        c.trans[k] = group.mult(a.trans[k], b.trans[a.perm[k]]);
        c.perm[k] = b.perm[a.perm[k]];
    }
    return c;
}

inline std::size_t hn_apply(const EgSpace& eg, const HNElement& h, std::size_t m,
                            std::size_t idx) {
    JoinSimplex js = eg.decode(m, idx);
    std::vector<std::pair<std::size_t, std::size_t>> pairs(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        pairs[i] = {h.perm[js.factors[i]],
                    eg.group.mult(js.labels[i], h.trans[js.factors[i]])};
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i <= m; ++i) {
        js.factors[i] = pairs[i].first;
        js.labels[i] = pairs[i].second;
    }
    return eg.encode(js);
}

/// Index table of the action in one dimension; composing a cochain with it
/// is the pullback.
inline std::vector<std::size_t> hn_index_map(const EgSpace& eg, const HNElement& h,
                                             std::size_t m) {
    std::vector<std::size_t> out(eg.ds.counts[m]);
    for (std::size_t s = 0; s < eg.ds.counts[m]; ++s) out[s] = hn_apply(eg, h, m, s);
    return out;
}

/// The action commutes with left translation, so it descends to orbits.
inline std::size_t hn_apply_bg(const EgSpace& eg, const BgSpace& bg, const HNElement& h,
                               std::size_t m, std::size_t orbit) {
    return bg.projection[m][hn_apply(eg, h, m, bg.representatives[m][orbit])];
}

/// True when the symmetry group reaches every m-simplex of the join from
/// the first one. Checked on a generating set: adjacent factor swaps and
/// single-factor translations.
inline bool hn_transitivity_check(const EgSpace& eg, std::size_t m,
                                  std::size_t budget = 50'000'000) {
    require(m < eg.ds.counts.size(), errc::degree_out_of_range,
            "dimension " + std::to_string(m) + " exceeds the join");
    std::vector<HNElement> gens;
    for (std::size_t j = 0; j + 1 < eg.factor_count; ++j) {
        HNElement h = hn_identity(eg.group, eg.factor_count);
        std::swap(h.perm[j], h.perm[j + 1]);
        gens.push_back(std::move(h));
    }
    for (std::size_t k = 0; k < eg.factor_count; ++k)
        for (std::size_t a = 0; a < eg.group.order; ++a) {
            if (a == eg.group.identity) continue;
            HNElement h = hn_identity(eg.group, eg.factor_count);
            h.trans[k] = a;
            gens.push_back(std::move(h));
        }
    require(eg.ds.counts[m] * gens.size() <= budget, errc::budget_too_large,
            "transitivity check too large");

    std::vector<bool> seen(eg.ds.counts[m], false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t s = stack.back();
        stack.pop_back();
        for (const auto& h : gens) {
            std::size_t t = hn_apply(eg, h, m, s);
            if (!seen[t]) {
                seen[t] = true;
                ++visited;
                stack.push_back(t);
            }
        }
    }
    return visited == eg.ds.counts[m];
}

// ---------------------------------------------------------------------------
// Equivariant embedding into the join

/// Image of a delta-set with free G-action inside the join on one factor
/// per vertex orbit. members[k] is the sorted set of image indices, map[k]
/// sends each input simplex to its image. The image is face-closed and
/// invariant under left translation, and the embedding intertwines the two
/// actions.
struct EmbeddedImage {
    EgSpace ambient;
    std::vector<std::vector<std::size_t>> members;
    std::vector<std::vector<std::size_t>> map;
    std::vector<std::size_t> vertex_orbit;
    std::vector<std::size_t> vertex_label;
};

/// Needs a strictly face-compatible free action where no simplex meets a
/// vertex orbit twice. A simplex with a repeated vertex cannot embed (its
/// image would repeat a join factor) and fails with degenerate_face.
inline EmbeddedImage equivariant_embed(const DeltaSet& ds, const GroupAction& act) {
    validate_action(ds, act);
    require(meets_each_orbit_once(ds, act), errc::orbit_violation,
            "a simplex has two distinct vertices in one orbit");

    const std::size_t nv = ds.counts[0];
    EmbeddedImage out;
    out.vertex_orbit.assign(nv, nv);
    out.vertex_label.assign(nv, 0);
    std::size_t orbits = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        if (out.vertex_orbit[v] != nv) continue;
        for (std::size_t g = 0; g < act.group.order; ++g) {
            std::size_t w = act.perms[g][0][v];
            out.vertex_orbit[w] = orbits;
            out.vertex_label[w] = g;
        }
        ++orbits;
    }
    out.ambient = eg_space(act.group, orbits - 1);

    out.members.resize(ds.counts.size());
    out.map.resize(ds.counts.size());
    for (std::size_t k = 0; k < ds.counts.size(); ++k) {
        out.map[k].resize(ds.counts[k]);
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            auto verts = vertex_tuple(ds, k, s);
            std::vector<std::pair<std::size_t, std::size_t>> pairs(k + 1);
            for (std::size_t i = 0; i <= k; ++i)
                pairs[i] = {out.vertex_orbit[verts[i]], out.vertex_label[verts[i]]};
            std::sort(pairs.begin(), pairs.end());
            JoinSimplex js;
            js.factors.resize(k + 1);
            js.labels.resize(k + 1);
            for (std::size_t i = 0; i <= k; ++i) {
                require(i == 0 || pairs[i - 1].first < pairs[i].first,
                        errc::degenerate_face,
                        detail::simplex_name(k, s) + " has a repeated vertex");
                js.factors[i] = pairs[i].first;
                js.labels[i] = pairs[i].second;
            }
            out.map[k][s] = out.ambient.encode(js);
        }
        out.members[k] = out.map[k];
        std::sort(out.members[k].begin(), out.members[k].end());
        out.members[k].erase(std::unique(out.members[k].begin(), out.members[k].end()),
                             out.members[k].end());
    }
    return out;
}

} // namespace simbound
