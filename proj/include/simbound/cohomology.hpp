#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"
#include "simbound/f2.hpp"

namespace simbound {

/// Mod-2 cochain: one bit per simplex of the given dimension. The carrier
/// delta-set is passed to every operation rather than stored.
struct Cochain {
    std::size_t degree = 0;
    f2::F2Vector values;
};

inline Cochain zero_cochain(const DeltaSet& ds, std::size_t degree) {
    require(degree < ds.counts.size(), errc::degree_out_of_range,
            "degree " + std::to_string(degree) + " exceeds dimension");
    return {degree, f2::F2Vector(ds.counts[degree])};
}

/// Matrix of the coboundary in degree k: rows are (k+1)-simplices, and
/// entry (t, s) is the parity of #{i : d_i t = s}. For k = dim the matrix
/// has zero rows (the coboundary is the zero map).
inline f2::F2Matrix coboundary_matrix(const DeltaSet& ds, std::size_t k) {
    require(k < ds.counts.size(), errc::degree_out_of_range,
            "degree " + std::to_string(k) + " exceeds dimension");
    std::size_t rows = (k + 1 < ds.counts.size()) ? ds.counts[k + 1] : 0;
    f2::F2Matrix m(rows, ds.counts[k]);
    for (std::size_t t = 0; t < rows; ++t)
        for (std::size_t i = 0; i <= k + 1; ++i) m.flip(t, ds.faces[k + 1][t][i]);
    return m;
}

inline Cochain apply_coboundary(const DeltaSet& ds, const Cochain& c) {
    require(c.degree < ds.counts.size(), errc::degree_out_of_range,
            "degree " + std::to_string(c.degree) + " exceeds dimension");
    require(c.values.size() == ds.counts[c.degree], errc::dimension_mismatch,
            "cochain length differs from simplex count");
    std::size_t rows = (c.degree + 1 < ds.counts.size()) ? ds.counts[c.degree + 1] : 0;
    Cochain out{c.degree + 1, f2::F2Vector(rows)};
    for (std::size_t t = 0; t < rows; ++t) {
        bool bit = false;
        for (std::size_t i = 0; i <= c.degree + 1; ++i)
            bit ^= c.values.get(ds.faces[c.degree + 1][t][i]);
        out.values.set(t, bit);
    }
    return out;
}

inline bool is_cocycle(const DeltaSet& ds, const Cochain& c) {
    return !apply_coboundary(ds, c).values.any();
}

/// True when a - b is a coboundary. Both inputs must be cocycles of the
/// same degree; in degree 0 the coboundary image is zero, so the classes
/// agree only when the cochains do.
inline bool is_cohomologous(const DeltaSet& ds, const Cochain& a, const Cochain& b) {
    require(a.degree == b.degree, errc::degree_mismatch, "degrees differ");
    require(is_cocycle(ds, a) && is_cocycle(ds, b), errc::not_a_cocycle,
            "class comparison needs cocycles");
    f2::F2Vector diff = a.values ^ b.values;
    if (a.degree == 0) return !diff.any();
    return f2::solve(coboundary_matrix(ds, a.degree - 1), diff).has_value();
}

inline bool is_coboundary(const DeltaSet& ds, const Cochain& c) {
    return is_cohomologous(ds, c, zero_cochain(ds, c.degree));
}

/// Cocycle representatives whose classes form a basis of cohomology in
/// one degree. Deterministic for a fixed delta-set.
struct CohomologyBasis {
    std::size_t degree = 0;
    std::vector<Cochain> representatives;
    std::size_t betti = 0;
};

inline CohomologyBasis cohomology_basis(const DeltaSet& ds, std::size_t k) {
    require(k < ds.counts.size(), errc::degree_out_of_range,
            "degree " + std::to_string(k) + " exceeds dimension");
    auto cocycles = f2::kernel_basis(coboundary_matrix(ds, k));
    f2::SpanBasis coboundaries(ds.counts[k]);
    if (k > 0) {
        auto below = coboundary_matrix(ds, k - 1);
        for (std::size_t s = 0; s < ds.counts[k - 1]; ++s) {
            f2::F2Vector unit(ds.counts[k - 1]);
            unit.set(s, true);
            coboundaries.insert(below.multiply(unit));
        }
    }
    CohomologyBasis basis;
    basis.degree = k;
    // Keep the cocycles whose residues mod coboundaries stay independent:
    // their classes form a basis of kernel/image.
    f2::SpanBasis span(ds.counts[k]);
    for (const auto& z : cocycles) {
        f2::F2Vector residue = coboundaries.reduce(z);
        if (span.insert(residue)) basis.representatives.push_back({k, z});
    }
    basis.betti = basis.representatives.size();
    return basis;
}

inline std::size_t betti_number(const DeltaSet& ds, std::size_t k) {
    if (k >= ds.counts.size()) return 0;
    return cohomology_basis(ds, k).betti;
}

/// Cochain-level cup product: (a.b)(s) = a(front)*b(back), front keeping
/// vertex positions 0..p and back keeping p..p+q. Inputs must be cocycles
/// so the result represents the product of their classes; the result is
/// then a cocycle too.
inline Cochain cup_product(const DeltaSet& ds, const Cochain& a, const Cochain& b) {
    const std::size_t p = a.degree, q = b.degree;
    require(p + q <= ds.dim(), errc::degree_overflow,
            "product degree " + std::to_string(p + q) + " exceeds dimension");
    require(is_cocycle(ds, a), errc::not_a_cocycle, "left factor is not a cocycle");
    require(is_cocycle(ds, b), errc::not_a_cocycle, "right factor is not a cocycle");
    Cochain out{p + q, f2::F2Vector(ds.counts[p + q])};
    for (std::size_t s = 0; s < ds.counts[p + q]; ++s) {
        bool front = a.values.get(front_face(ds, p + q, s, p));
        bool back = b.values.get(back_face(ds, p + q, s, p));
        out.values.set(s, front && back);
    }
    return out;
}

/// Degree-1 cocycles whose cup product is not a coboundary, with the
/// product itself.
struct ProductWitness {
    std::vector<Cochain> factors;
    Cochain product;
};

/// Searches for n degree-1 cocycles with nonzero product class. Scanning
/// basis tuples is complete: the product is multilinear in the classes of
/// its factors, so some basis tuple is nonzero whenever any tuple is.
/// Returns the lexicographically first witness; nullopt when H^1 is zero
/// or every product vanishes.
inline std::optional<ProductWitness> nonzero_product_search(const DeltaSet& ds,
                                                            std::size_t n) {
    require(n >= 1 && n <= ds.dim(), errc::degree_out_of_range,
            "product of " + std::to_string(n) + " degree-1 factors");
    auto h1 = cohomology_basis(ds, 1);
    const std::size_t b = h1.betti;
    if (b == 0) return std::nullopt;

    const f2::F2Matrix delta_below = coboundary_matrix(ds, n - 1);
    std::vector<std::size_t> pick(n, 0);
    std::vector<Cochain> prefix(n);
    auto rebuild = [&](std::size_t from) {
        for (std::size_t j = from; j < n; ++j)
            prefix[j] = (j == 0) ? h1.representatives[pick[0]]
                                 : cup_product(ds, prefix[j - 1], h1.representatives[pick[j]]);
    };
    rebuild(0);
    while (true) {
        const Cochain& product = prefix[n - 1];
        bool trivial = f2::solve(delta_below, product.values).has_value();
        if (!trivial) {
            ProductWitness w;
            for (std::size_t j = 0; j < n; ++j) w.factors.push_back(h1.representatives[pick[j]]);
            w.product = product;
            return w;
        }
        std::size_t j = n;
        while (j > 0 && pick[j - 1] + 1 == b) { pick[--j] = 0; }
        if (j == 0) return std::nullopt;
        ++pick[j - 1];
        rebuild(j - 1);
    }
}

/// Restriction of an ambient cochain to a sub-delta-set.
inline Cochain restrict_cochain(const SubComplex& sub, const Cochain& ambient) {
    require(ambient.degree < sub.to_ambient.size(), errc::degree_out_of_range,
            "degree exceeds the sub-delta-set dimension");
    Cochain out{ambient.degree, f2::F2Vector(sub.to_ambient[ambient.degree].size())};
    for (std::size_t s = 0; s < out.values.size(); ++s)
        out.values.set(s, ambient.values.get(sub.to_ambient[ambient.degree][s]));
    return out;
}

/// Pullback of a cochain along a simplex map given as an index table
/// (out(s) = values(map[s])).
inline f2::F2Vector pullback_values(const f2::F2Vector& values,
                                    const std::vector<std::size_t>& map) {
    f2::F2Vector out(map.size());
    for (std::size_t s = 0; s < map.size(); ++s) out.set(s, values.get(map[s]));
    return out;
}

} // namespace simbound
