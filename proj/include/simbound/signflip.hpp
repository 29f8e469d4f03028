#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "simbound/cohomology.hpp"
#include "simbound/errors.hpp"
#include "simbound/group.hpp"
#include "simbound/rational.hpp"
#include "simbound/spaces.hpp"

namespace simbound {

/// One sign per join factor.
struct SignVector {
    std::vector<int> e;
    std::size_t size() const { return e.size(); }
};

inline SignVector all_plus(std::size_t factor_count) {
    return {std::vector<int>(factor_count, 1)};
}

/// Bit k set iff e_k = -1.
inline std::uint64_t sign_mask(const SignVector& e) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < e.e.size(); ++k)
        if (e.e[k] < 0) m |= std::uint64_t(1) << k;
    return m;
}

inline SignVector signs_from_mask(std::size_t factor_count, std::uint64_t mask) {
    SignVector e{std::vector<int>(factor_count, 1)};
    for (std::size_t k = 0; k < factor_count; ++k)
        if ((mask >> k) & 1) e.e[k] = -1;
    return e;
}

/// Integer point per join vertex: the point of vertex (k, g) is
/// rep(g) applied to the base point of factor k. Exact arithmetic
/// throughout; construction rejects coordinates so large that the
/// determinant computations could leave 128 bits.
struct PointConfiguration {
    Representation rep;
    std::size_t factor_count = 0;
    std::vector<std::vector<std::int64_t>> base_points;
    std::vector<std::vector<std::vector<std::int64_t>>> images;

    std::size_t dim() const { return rep.dim; }
    const std::vector<std::int64_t>& point(std::size_t factor, std::size_t g) const {
        return images[factor][g];
    }
};

namespace detail {

inline void check_magnitude(std::size_t n, std::int64_t max_entry) {
    long double e = static_cast<long double>(std::max<std::int64_t>(max_entry, 2));
    long double bits = static_cast<long double>(n) *
                           (0.5L * std::log2l(static_cast<long double>(std::max<std::size_t>(n, 1))) +
                            std::log2l(e)) +
                       std::log2l(e) + std::log2l(static_cast<long double>(n) + 2.0L);
    require(bits <= 125.0L, errc::too_large,
            "point coordinates too large for exact determinant arithmetic");
}

/// Advances a strictly increasing combination in {0..limit-1}; false at the end.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t limit) {
    const std::size_t r = comb.size();
    std::size_t i = r;
    while (i-- > 0) {
        if (comb[i] + 1 <= limit - r + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

inline PointConfiguration make_configuration(
    const Representation& rep, std::vector<std::vector<std::int64_t>> base_points) {
    validate_representation(rep);
    require(rep.dim >= 1, errc::dimension_mismatch, "representation of dimension 0");
    PointConfiguration cfg;
    cfg.rep = rep;
    cfg.factor_count = base_points.size();
    require(cfg.factor_count >= rep.dim + 1, errc::dimension_mismatch,
            "need at least dim+1 join factors");
    for (const auto& u : base_points)
        require(u.size() == rep.dim, errc::dimension_mismatch,
                "base point of wrong dimension");
    cfg.base_points = std::move(base_points);

    cfg.images.resize(cfg.factor_count);
    std::int64_t max_entry = 0;
    for (std::size_t k = 0; k < cfg.factor_count; ++k) {
        cfg.images[k].resize(rep.group.order);
        for (std::size_t g = 0; g < rep.group.order; ++g) {
            auto& v = cfg.images[k][g];
            v.assign(rep.dim, 0);
            for (std::size_t i = 0; i < rep.dim; ++i) {
                for (std::size_t j = 0; j < rep.dim; ++j)
                    v[i] += rep.matrices[g][i][j] * cfg.base_points[k][j];
                max_entry = std::max(max_entry, std::abs(v[i]));
            }
        }
    }
    detail::check_magnitude(rep.dim, max_entry);
    return cfg;
}

/// Generic means: the points of every n vertices on n distinct factors are
/// linearly independent (n = rep.dim). Sign flips scale rows by -1 and so
/// cannot break or create independence, and left translation permutes the
/// label tuples, so checking the plain points covers every flipped copy.
inline bool genericity_check(const PointConfiguration& cfg,
                             std::size_t* checked = nullptr) {
    const std::size_t n = cfg.dim();
    if (checked) *checked = 0;
    std::vector<std::size_t> comb(n);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        std::vector<std::size_t> labels(n, 0);
        while (true) {
            std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m[i][j] = cfg.images[comb[i]][labels[i]][j];
            if (checked) ++*checked;
            if (detail::integer_determinant(std::move(m)) == 0) return false;
            std::size_t i = n;
            while (i > 0 && labels[i - 1] + 1 == cfg.rep.group.order) labels[--i] = 0;
            if (i == 0) break;
            ++labels[i - 1];
        }
    } while (detail::next_combination(comb, cfg.factor_count));
    return true;
}

/// Random integer configuration with coordinates in [-bound, bound],
/// resampled until generic. Deterministic for a fixed seed: coordinates
/// are drawn by rejection from a 64-bit generator.
inline PointConfiguration random_configuration(const Representation& rep,
                                               std::size_t factor_count,
                                               std::uint64_t seed,
                                               std::int64_t bound = 9999,
                                               std::size_t attempts = 32) {
    require(bound >= 1, errc::too_large, "coordinate bound must be positive");
    std::mt19937_64 rng(seed);
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
    auto draw = [&]() {
        std::uint64_t rem = (~std::uint64_t(0) % range + 1) % range;
        std::uint64_t x;
        do {
            x = rng();
        } while (rem != 0 && x >= std::uint64_t(0) - rem);
        return static_cast<std::int64_t>(x % range) - bound;
    };
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::vector<std::int64_t>> base(factor_count,
                                                    std::vector<std::int64_t>(rep.dim));
        for (auto& u : base)
            for (auto& c : u) c = draw();
        PointConfiguration cfg = make_configuration(rep, std::move(base));
        if (genericity_check(cfg)) return cfg;
    }
    fail(errc::genericity_exhausted,
         "no generic configuration in " + std::to_string(attempts) + " attempts");
}

/// Signs of the coefficients in the unique (up to scale) linear relation
/// sum a_i * point_i = 0 on the n+1 vertex points of an n-face:
/// a_i = (-1)^i det(points without i). Genericity keeps every a_i nonzero.
/// The relation is verified exactly before returning.
inline std::vector<int> coefficient_signs(const PointConfiguration& cfg,
                                          const JoinSimplex& face) {
    const std::size_t n = cfg.dim();
    require(face.factors.size() == n + 1, errc::dimension_mismatch,
            "expected a face on dim+1 factors");
    std::vector<__int128> a(n + 1);
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::vector<__int128>> m;
        m.reserve(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == skip) continue;
            std::vector<__int128> row(n);
            for (std::size_t j = 0; j < n; ++j)
                row[j] = cfg.images[face.factors[i]][face.labels[i]][j];
            m.push_back(std::move(row));
        }
        __int128 d = detail::integer_determinant(std::move(m));
        require(d != 0, errc::degenerate_face,
                "face is degenerate at factor " + std::to_string(face.factors[skip]));
        a[skip] = (skip % 2 == 0) ? d : -d;
    }
    for (std::size_t j = 0; j < n; ++j) {
        __int128 sum = 0;
        for (std::size_t i = 0; i <= n; ++i)
            sum += a[i] * cfg.images[face.factors[i]][face.labels[i]][j];
        require(sum == 0, errc::contradiction, "coefficient relation failed");
    }
    std::vector<int> signs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) signs[i] = a[i] > 0 ? 1 : -1;
    return signs;
}

/// True when the origin lies in the open convex hull of the flipped points
/// e_(factor of v) * point(v) over the n+1 vertices of the face. With the
/// relation coefficients a_i, that is: e_(k_i) * sign(a_i) all agree.
inline bool contains_origin(const PointConfiguration& cfg, const JoinSimplex& face,
                            const SignVector& e) {
    require(e.size() == cfg.factor_count, errc::dimension_mismatch,
            "sign vector has wrong length");
    auto signs = coefficient_signs(cfg, face);
    const int ref = e.e[face.factors[0]] * signs[0];
    for (std::size_t i = 1; i < signs.size(); ++i)
        if (e.e[face.factors[i]] * signs[i] != ref) return false;
    return true;
}

namespace detail {

/// Per-face capture test compressed to two masks: with m the sign mask,
/// the face captures the origin iff (m & factor_mask) equals neg_mask or
/// its complement inside factor_mask.
struct FacePattern {
    std::uint64_t factor_mask = 0;
    std::uint64_t neg_mask = 0;
};

inline FacePattern face_pattern(const PointConfiguration& cfg, const JoinSimplex& face) {
    auto signs = coefficient_signs(cfg, face);
    FacePattern p;
    for (std::size_t i = 0; i < face.factors.size(); ++i) {
        p.factor_mask |= std::uint64_t(1) << face.factors[i];
        if (signs[i] < 0) p.neg_mask |= std::uint64_t(1) << face.factors[i];
    }
    return p;
}

/// Sign mask whose bits read e_0 as the most significant position, so
/// ascending rank is lexicographic order with +1 before -1.
inline std::uint64_t rank_to_mask(std::size_t factor_count, std::uint64_t rank) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < factor_count; ++k)
        if ((rank >> (factor_count - 1 - k)) & 1) m |= std::uint64_t(1) << k;
    return m;
}

} // namespace detail

enum class SearchMode { exhaustive, sampled };

/// Outcome of the search for a sign vector capturing the origin on as few
/// faces as possible. Counts are per sign vector: face_count over the join,
/// orbit_count over label orbits (face_count = orbit_count * |G| by the
/// translation invariance of capture). Averages are orbit counts.
struct MinSupportResult {
    SignVector e;
    std::size_t face_count = 0;
    std::size_t orbit_count = 0;
    bool certified = false;
    Rational average_closed;
    Rational average_enumerated;
    std::size_t inspected = 0;
};

/// Scans sign vectors for one whose flipped configuration captures the
/// origin on the fewest n-faces. A fixed face is captured by exactly two
/// of the sign patterns on its own factors, so the orbit average over all
/// sign vectors is (number of label orbits of n-faces) / 2^n; exhaustive
/// mode certifies the minimum and resolves ties toward the
/// lexicographically first sign vector (+1 before -1, e_0 weighted most).
inline MinSupportResult min_support_search(const PointConfiguration& cfg,
                                           SearchMode mode = SearchMode::exhaustive,
                                           std::size_t budget = std::size_t(1) << 20,
                                           std::uint64_t seed = 0) {
    const std::size_t n = cfg.dim();
    const std::size_t f = cfg.factor_count;
    const std::size_t order = cfg.rep.group.order;
    require(f <= 63, errc::budget_too_large, "too many join factors");

    // One representative per label orbit: first label fixed to 0 under
    // left translation.
    std::vector<detail::FacePattern> patterns;
    std::vector<std::size_t> comb(n + 1);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        std::vector<std::size_t> labels(n + 1, 0);
        labels[0] = cfg.rep.group.identity;
        while (true) {
            patterns.push_back(detail::face_pattern(cfg, {comb, labels}));
            std::size_t i = n + 1;
            while (i > 1 && labels[i - 1] + 1 == order) labels[--i] = 0;
            if (i == 1) break;
            ++labels[i - 1];
        }
    } while (detail::next_combination(comb, f));

    MinSupportResult out;
    const std::size_t orbits_total = patterns.size();
    out.average_closed = Rational(static_cast<std::int64_t>(orbits_total),
                                  std::int64_t(1) << n);

    auto count_for = [&](std::uint64_t m) {
        std::size_t c = 0;
        for (const auto& p : patterns) {
            std::uint64_t r = m & p.factor_mask;
            if (r == p.neg_mask || r == (p.neg_mask ^ p.factor_mask)) ++c;
        }
        return c;
    };

    std::size_t best = SIZE_MAX;
    std::uint64_t best_mask = 0;
    unsigned long long total = 0;
    if (mode == SearchMode::exhaustive) {
        require(f <= 20, errc::budget_too_large,
                "exhaustive search over 2^" + std::to_string(f) + " sign vectors");
        const std::uint64_t masks = std::uint64_t(1) << f;
        require(orbits_total * masks <= 200'000'000ull, errc::budget_too_large,
                "exhaustive search too large");
        for (std::uint64_t rank = 0; rank < masks; ++rank) {
            std::uint64_t m = detail::rank_to_mask(f, rank);
            std::size_t c = count_for(m);
            total += c;
            if (c < best) {
                best = c;
                best_mask = m;
            }
        }
        out.inspected = masks;
        out.certified = true;
    } else {
        require(budget >= 1, errc::budget_too_large, "empty sample budget");
        std::mt19937_64 rng(seed);
        for (std::size_t t = 0; t < budget; ++t) {
            std::uint64_t m = rng() & ((std::uint64_t(1) << f) - 1);
            std::size_t c = count_for(m);
            total += c;
            if (c < best) {
                best = c;
                best_mask = m;
            }
        }
        out.inspected = budget;
        out.certified = false;
    }
    out.e = signs_from_mask(f, best_mask);
    out.orbit_count = best;
    out.face_count = best * order;
    out.average_enumerated = Rational(static_cast<std::int64_t>(total),
                                      static_cast<std::int64_t>(out.inspected));
    return out;
}

/// Mod-2 cochain on the join marking the n-faces that capture the origin.
/// Invariant under left translation, hence it descends to the orbit space.
inline Cochain euler_cocycle_total(const EgSpace& eg, const PointConfiguration& cfg,
                                   const SignVector& e) {
    const std::size_t n = cfg.dim();
    require(eg.factor_count == cfg.factor_count, errc::dimension_mismatch,
            "join and configuration disagree on factor count");
    require(eg.group.order == cfg.rep.group.order, errc::dimension_mismatch,
            "join and configuration disagree on the group");
    require(n < eg.ds.counts.size(), errc::degree_out_of_range,
            "configuration dimension exceeds the join");
    Cochain c{n, f2::F2Vector(eg.ds.counts[n])};
    for (std::size_t s = 0; s < eg.ds.counts[n]; ++s)
        c.values.set(s, contains_origin(cfg, eg.decode(n, s), e));
    return c;
}

/// The descended cochain on the orbit space, evaluated at representatives.
inline Cochain euler_cocycle_quotient(const EgSpace& eg, const BgSpace& bg,
                                      const PointConfiguration& cfg,
                                      const SignVector& e) {
    const std::size_t n = cfg.dim();
    require(n < bg.ds.counts.size(), errc::degree_out_of_range,
            "configuration dimension exceeds the join");
    Cochain c{n, f2::F2Vector(bg.ds.counts[n])};
    for (std::size_t o = 0; o < bg.ds.counts[n]; ++o)
        c.values.set(o, contains_origin(cfg, eg.decode(n, bg.representatives[n][o]), e));
    return c;
}

} // namespace simbound
