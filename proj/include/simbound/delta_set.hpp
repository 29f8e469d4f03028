#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "simbound/errors.hpp"

namespace simbound {

/// Semi-simplicial set: simplices are anonymous indices per dimension,
/// glued by face maps. faces[k][s][i] is the index of the i-th face of
/// simplex s in dimension k (1 <= k, 0 <= i <= k); faces[0] is empty.
/// Only non-degenerate simplices are stored, so quotients that identify
/// vertices of one simplex are representable where a simplicial complex
/// would not be.
struct DeltaSet {
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::vector<std::size_t>>> faces;

    std::size_t dim() const { return counts.empty() ? 0 : counts.size() - 1; }
    std::size_t count(std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    std::size_t face(std::size_t k, std::size_t s, std::size_t i) const {
        return faces[k][s][i];
    }
};

namespace detail {

inline std::string simplex_name(std::size_t k, std::size_t s) {
    return "simplex " + std::to_string(s) + " of dimension " + std::to_string(k);
}

} // namespace detail

/// Checks the shape of the tables and the simplicial identities
/// d_i d_j = d_{j-1} d_i for i < j on every simplex.
inline void validate_delta_set(const DeltaSet& ds) {
    require(!ds.counts.empty(), errc::dimension_mismatch, "no dimensions");
    require(ds.faces.size() == ds.counts.size(), errc::dimension_mismatch,
            "face table count differs from dimension count");
    require(ds.faces[0].empty() || ds.faces[0].size() == ds.counts[0],
            errc::dimension_mismatch, "vertices must have no face entries");
    for (const auto& row : ds.faces[0])
        require(row.empty(), errc::dimension_mismatch, "vertices must have no face entries");
    for (std::size_t k = 1; k <= ds.dim(); ++k) {
        require(ds.faces[k].size() == ds.counts[k], errc::dimension_mismatch,
                "face table size differs from count in dimension " + std::to_string(k));
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            require(ds.faces[k][s].size() == k + 1, errc::dimension_mismatch,
                    detail::simplex_name(k, s) + " has wrong face count");
            for (std::size_t i = 0; i <= k; ++i)
                require(ds.faces[k][s][i] < ds.counts[k - 1], errc::dimension_mismatch,
                        detail::simplex_name(k, s) + " has out-of-range face");
        }
    }
    for (std::size_t k = 2; k <= ds.dim(); ++k)
        for (std::size_t s = 0; s < ds.counts[k]; ++s)
            for (std::size_t j = 1; j <= k; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    std::size_t lhs = ds.faces[k - 1][ds.faces[k][s][j]][i];
                    std::size_t rhs = ds.faces[k - 1][ds.faces[k][s][i]][j - 1];
                    require(lhs == rhs, errc::identity_violation,
                            "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                " != d_" + std::to_string(j - 1) + " d_" +
                                std::to_string(i) + " on " + detail::simplex_name(k, s));
                }
}

/// Iterated face keeping exactly the vertex positions set in mask
/// (bit i of mask = position i, 0 <= i <= k). Returns the index in
/// dimension popcount(mask)-1.
inline std::size_t subface(const DeltaSet& ds, std::size_t k, std::size_t s,
                           std::uint64_t mask) {
    require(mask != 0, errc::degree_out_of_range, "empty vertex subset");
    std::size_t cur_dim = k, cur = s;
    for (std::size_t i = k + 1; i-- > 0;) {
        if ((mask >> i) & 1) continue;
        cur = ds.faces[cur_dim][cur][i];
        --cur_dim;
    }
    return cur;
}

/// Face spanned by positions 0..p.
inline std::size_t front_face(const DeltaSet& ds, std::size_t k, std::size_t s,
                              std::size_t p) {
    return subface(ds, k, s, (std::uint64_t(1) << (p + 1)) - 1);
}

/// Face spanned by positions p..k.
inline std::size_t back_face(const DeltaSet& ds, std::size_t k, std::size_t s,
                             std::size_t p) {
    std::uint64_t all = (k == 63) ? ~std::uint64_t(0) : ((std::uint64_t(1) << (k + 1)) - 1);
    return subface(ds, k, s, all & ~((std::uint64_t(1) << p) - 1));
}

/// The k+1 vertices of a simplex in position order. Entries can repeat:
/// a delta-set may glue a simplex to itself.
inline std::vector<std::size_t> vertex_tuple(const DeltaSet& ds, std::size_t k,
                                             std::size_t s) {
    std::vector<std::size_t> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        out[i] = subface(ds, k, s, std::uint64_t(1) << i);
    return out;
}

/// A delta-set is regular when, on every simplex, distinct vertex subsets
/// of equal size give distinct iterated faces. Regular delta-sets behave
/// like simplicial complexes for the front/back face calculus.
inline bool is_regular(const DeltaSet& ds) {
    for (std::size_t k = 1; k <= ds.dim(); ++k) {
        if (k > 20) return false;
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            // seen[t] maps face index -> first mask of popcount t+1 reaching it
            std::vector<std::map<std::size_t, std::uint64_t>> seen(k + 1);
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << (k + 1)); ++mask) {
                std::size_t t = static_cast<std::size_t>(std::popcount(mask)) - 1;
                if (t == k) continue;
                std::size_t f = subface(ds, k, s, mask);
                auto [it, inserted] = seen[t].emplace(f, mask);
                if (!inserted && it->second != mask) return false;
            }
        }
    }
    return true;
}

inline std::vector<std::size_t> f_vector(const DeltaSet& ds) { return ds.counts; }

inline std::int64_t euler_characteristic(const DeltaSet& ds) {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < ds.counts.size(); ++k)
        chi += (k % 2 == 0) ? static_cast<std::int64_t>(ds.counts[k])
                            : -static_cast<std::int64_t>(ds.counts[k]);
    return chi;
}

inline std::size_t connected_components(const DeltaSet& ds) {
    std::vector<std::size_t> parent(ds.counts[0]);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (ds.dim() >= 1)
        for (std::size_t e = 0; e < ds.counts[1]; ++e) {
            std::size_t a = find(ds.faces[1][e][0]), b = find(ds.faces[1][e][1]);
            if (a != b) parent[a] = b;
        }
    std::size_t components = 0;
    for (std::size_t v = 0; v < ds.counts[0]; ++v)
        if (find(v) == v) ++components;
    return components;
}

/// Simplicial complex on vertices 0..vertex_count-1. faces[k] lists the
/// k-simplices as strictly increasing tuples, sorted lexicographically,
/// and is closed under taking subsets.
struct SimplicialComplex {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::vector<std::size_t>>> faces;

    std::size_t dim() const { return faces.empty() ? 0 : faces.size() - 1; }
};

inline SimplicialComplex complex_from_facets(
    std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets) {
    std::size_t top = 0;
    for (const auto& f : facets) {
        require(!f.empty(), errc::dimension_mismatch, "empty facet");
        top = std::max(top, f.size() - 1);
    }
    std::vector<std::vector<std::vector<std::size_t>>> per_dim(top + 1);
    for (const auto& f : facets) {
        std::vector<std::size_t> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                errc::degenerate_face, "facet has a repeated vertex");
        require(sorted.back() < vertex_count, errc::dimension_mismatch,
                "facet vertex " + std::to_string(sorted.back()) + " out of range");
        const std::size_t k = sorted.size() - 1;
        // Downward closure: every nonempty subset is a face.
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << (k + 1)); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i <= k; ++i)
                if ((mask >> i) & 1) sub.push_back(sorted[i]);
            per_dim[sub.size() - 1].push_back(std::move(sub));
        }
    }
    SimplicialComplex sc;
    sc.vertex_count = vertex_count;
    sc.faces.resize(top + 1);
    for (std::size_t v = 0; v < vertex_count; ++v) sc.faces[0].push_back({v});
    for (std::size_t k = 1; k <= top; ++k) {
        auto& list = per_dim[k];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        sc.faces[k] = std::move(list);
    }
    while (sc.faces.size() > 1 && sc.faces.back().empty()) sc.faces.pop_back();
    return sc;
}

/// Converts an ordered simplicial complex to a delta-set; simplex order
/// per dimension matches sc.faces[k]. Fails with the missing tuple when
/// the complex is not closed under faces.
inline DeltaSet complex_to_delta(const SimplicialComplex& sc) {
    DeltaSet ds;
    ds.counts.resize(sc.faces.size());
    ds.faces.resize(sc.faces.size());
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(sc.faces.size());
    for (std::size_t k = 0; k < sc.faces.size(); ++k) {
        ds.counts[k] = sc.faces[k].size();
        for (std::size_t s = 0; s < sc.faces[k].size(); ++s) {
            require(sc.faces[k][s].size() == k + 1, errc::dimension_mismatch,
                    "tuple of wrong length in dimension " + std::to_string(k));
            index[k][sc.faces[k][s]] = s;
        }
    }
    ds.faces[0].assign(ds.counts[0], {});
    for (std::size_t k = 1; k < sc.faces.size(); ++k) {
        ds.faces[k].resize(ds.counts[k]);
        for (std::size_t s = 0; s < ds.counts[k]; ++s) {
            const auto& tuple = sc.faces[k][s];
            ds.faces[k][s].resize(k + 1);
            for (std::size_t i = 0; i <= k; ++i) {
                std::vector<std::size_t> sub = tuple;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = index[k - 1].find(sub);
                if (it == index[k - 1].end()) {
                    std::string name;
                    for (auto v : sub) name += std::to_string(v) + " ";
                    fail(errc::not_closed, "face { " + name + "} is missing");
                }
                ds.faces[k][s][i] = it->second;
            }
        }
    }
    return ds;
}

/// A face-closed part of an ambient delta-set, as a delta-set of its own
/// plus the embedding back into the ambient indices.
struct SubComplex {
    DeltaSet ds;
    std::vector<std::vector<std::size_t>> to_ambient;
};

/// members[k] = sorted ambient indices to keep in dimension k. Every face
/// of a member must be a member.
inline SubComplex sub_delta_set(const DeltaSet& ambient,
                                const std::vector<std::vector<std::size_t>>& members) {
    require(members.size() <= ambient.counts.size(), errc::dimension_mismatch,
            "more member dimensions than the ambient has");
    SubComplex sub;
    sub.to_ambient.resize(members.size());
    std::vector<std::map<std::size_t, std::size_t>> local(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        sub.to_ambient[k] = members[k];
        std::sort(sub.to_ambient[k].begin(), sub.to_ambient[k].end());
        sub.to_ambient[k].erase(
            std::unique(sub.to_ambient[k].begin(), sub.to_ambient[k].end()),
            sub.to_ambient[k].end());
        for (std::size_t s = 0; s < sub.to_ambient[k].size(); ++s) {
            require(sub.to_ambient[k][s] < ambient.counts[k], errc::dimension_mismatch,
                    "member out of range in dimension " + std::to_string(k));
            local[k][sub.to_ambient[k][s]] = s;
        }
    }
    sub.ds.counts.resize(members.size());
    sub.ds.faces.resize(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        sub.ds.counts[k] = sub.to_ambient[k].size();
        if (k == 0) {
            sub.ds.faces[0].assign(sub.ds.counts[0], {});
            continue;
        }
        sub.ds.faces[k].resize(sub.ds.counts[k]);
        for (std::size_t s = 0; s < sub.ds.counts[k]; ++s) {
            sub.ds.faces[k][s].resize(k + 1);
            for (std::size_t i = 0; i <= k; ++i) {
                std::size_t amb = ambient.faces[k][sub.to_ambient[k][s]][i];
                auto it = local[k - 1].find(amb);
                require(it != local[k - 1].end(), errc::not_closed,
                        "face of " + detail::simplex_name(k, sub.to_ambient[k][s]) +
                            " is not a member");
                sub.ds.faces[k][s][i] = it->second;
            }
        }
    }
    return sub;
}

} // namespace simbound
