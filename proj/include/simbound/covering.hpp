#pragma once

#include <string>
#include <vector>

#include "simbound/action.hpp"
#include "simbound/cohomology.hpp"
#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"

namespace simbound {

/// Covering space of a delta-set with deck group (Z_2)^sheet_bits. The
/// total simplex over (s, sheet e) has index s * 2^sheet_bits + e.
struct Covering {
    DeltaSet base;
    DeltaSet total;
    std::vector<std::vector<std::size_t>> projection;
    GroupAction deck;
    std::size_t sheet_bits = 0;
};

/// Covering classified by degree-1 cocycles z_0..z_{k-1}: sheet bit j
/// flips across precisely the edges where z_j is 1. Concretely the faces
/// are d_i(s, e) = (d_i s, e) for i >= 1 and d_0(s, e) = (d_0 s, e ^ twist)
/// with twist bit j = z_j evaluated on the leading edge (vertex positions
/// 0,1) of s. The simplicial identities for the total space reduce to the
/// cocycle condition on each z_j.
inline Covering fiberwise_product(const DeltaSet& ds,
                                  const std::vector<Cochain>& zs) {
    const std::size_t k = zs.size();
    require(k < 20, errc::too_large, "too many sheet bits");
    for (std::size_t j = 0; j < k; ++j) {
        require(zs[j].degree == 1, errc::degree_mismatch,
                "classifying cochain " + std::to_string(j) + " is not degree 1");
        require(zs[j].values.size() == ds.count(1), errc::dimension_mismatch,
                "classifying cochain " + std::to_string(j) + " has wrong length");
        require(is_cocycle(ds, zs[j]), errc::not_a_cocycle,
                "classifying cochain " + std::to_string(j) + " is not a cocycle");
    }
    const std::size_t sheets = std::size_t(1) << k;

    Covering cov;
    cov.base = ds;
    cov.sheet_bits = k;
    cov.total.counts.resize(ds.counts.size());
    cov.total.faces.resize(ds.counts.size());
    cov.projection.resize(ds.counts.size());
    for (std::size_t d = 0; d < ds.counts.size(); ++d) {
        cov.total.counts[d] = ds.counts[d] * sheets;
        cov.projection[d].resize(cov.total.counts[d]);
        for (std::size_t t = 0; t < cov.total.counts[d]; ++t)
            cov.projection[d][t] = t >> k;
        if (d == 0) {
            cov.total.faces[0].assign(cov.total.counts[0], {});
            continue;
        }
        cov.total.faces[d].resize(cov.total.counts[d]);
        for (std::size_t s = 0; s < ds.counts[d]; ++s) {
            std::size_t twist = 0;
            std::size_t leading_edge = front_face(ds, d, s, 1);
            for (std::size_t j = 0; j < k; ++j)
                if (zs[j].values.get(leading_edge)) twist |= std::size_t(1) << j;
            for (std::size_t e = 0; e < sheets; ++e) {
                auto& row = cov.total.faces[d][(s << k) | e];
                row.resize(d + 1);
                row[0] = (ds.faces[d][s][0] << k) | (e ^ twist);
                for (std::size_t i = 1; i <= d; ++i)
                    row[i] = (ds.faces[d][s][i] << k) | e;
            }
        }
    }

    cov.deck.group = elementary_abelian(k);
    cov.deck.perms.resize(cov.deck.group.order);
    for (std::size_t g = 0; g < cov.deck.group.order; ++g) {
        cov.deck.perms[g].resize(ds.counts.size());
        for (std::size_t d = 0; d < ds.counts.size(); ++d) {
            cov.deck.perms[g][d].resize(cov.total.counts[d]);
            for (std::size_t t = 0; t < cov.total.counts[d]; ++t)
                cov.deck.perms[g][d][t] = (t & ~(sheets - 1)) | ((t & (sheets - 1)) ^ g);
        }
    }
    return cov;
}

inline Covering double_cover(const DeltaSet& ds, const Cochain& z) {
    return fiberwise_product(ds, {z});
}

/// Full structural check: total is a delta-set, the projection has
/// constant fiber size 2^sheet_bits and commutes with every face map,
/// and the deck action is a free action preserving fibers with order
/// equal to the fiber size. Error messages locate the first offender.
inline void verify_covering(const Covering& cov) {
    validate_delta_set(cov.total);
    const std::size_t sheets = std::size_t(1) << cov.sheet_bits;
    require(cov.projection.size() == cov.total.counts.size(), errc::dimension_mismatch,
            "projection table has wrong dimension count");
    require(cov.base.counts.size() == cov.total.counts.size(), errc::dimension_mismatch,
            "base and total have different dimension counts");
    for (std::size_t d = 0; d < cov.total.counts.size(); ++d) {
        require(cov.projection[d].size() == cov.total.counts[d], errc::dimension_mismatch,
                "projection table has wrong size in dimension " + std::to_string(d));
        std::vector<std::size_t> fiber(cov.base.counts[d], 0);
        for (std::size_t t = 0; t < cov.total.counts[d]; ++t) {
            require(cov.projection[d][t] < cov.base.counts[d], errc::fiber_size,
                    "projection out of range on " + detail::simplex_name(d, t));
            ++fiber[cov.projection[d][t]];
        }
        for (std::size_t s = 0; s < cov.base.counts[d]; ++s)
            require(fiber[s] == sheets, errc::fiber_size,
                    "fiber over " + detail::simplex_name(d, s) + " has " +
                        std::to_string(fiber[s]) + " simplices, expected " +
                        std::to_string(sheets));
    }
    for (std::size_t d = 1; d <= cov.total.dim(); ++d)
        for (std::size_t t = 0; t < cov.total.counts[d]; ++t)
            for (std::size_t i = 0; i <= d; ++i)
                require(cov.base.faces[d][cov.projection[d][t]][i] ==
                            cov.projection[d - 1][cov.total.faces[d][t][i]],
                        errc::commutation,
                        "projection does not commute with d_" + std::to_string(i) +
                            " on " + detail::simplex_name(d, t));

    validate_action(cov.total, cov.deck);
    require(cov.deck.group.order == sheets, errc::fiber_size,
            "deck group order differs from fiber size");
    for (std::size_t g = 0; g < cov.deck.group.order; ++g) {
        if (g == cov.deck.group.identity) continue;
        for (std::size_t d = 0; d < cov.total.counts.size(); ++d)
            for (std::size_t t = 0; t < cov.total.counts[d]; ++t) {
                require(cov.deck.perms[g][d][t] != t, errc::deck_not_free,
                        "deck element " + std::to_string(g) + " fixes " +
                            detail::simplex_name(d, t));
                require(cov.projection[d][cov.deck.perms[g][d][t]] == cov.projection[d][t],
                        errc::fiber_size,
                        "deck element " + std::to_string(g) + " moves " +
                            detail::simplex_name(d, t) + " across fibers");
            }
    }
}

} // namespace simbound
