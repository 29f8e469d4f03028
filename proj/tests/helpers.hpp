#pragma once

// Test-local oracles, deliberately independent of the library internals:
// plain int matrices and exhaustive enumeration instead of packed words
// and incremental spans.

#include <cstdint>
#include <random>
#include <vector>

#include "simbound/action.hpp"
#include "simbound/cohomology.hpp"
#include "simbound/delta_set.hpp"
#include "simbound/f2.hpp"
#include "simbound/group.hpp"

namespace testutil {

/// Mod-2 rank by textbook elimination on an unpacked 0/1 matrix.
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] % 2) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && (m[r][c] % 2))
                for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] + m[rank][j]) % 2;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> unpack(const simbound::f2::F2Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

/// Solvability oracle: Mx = b is solvable iff appending b keeps the rank.
inline bool naive_solvable(const simbound::f2::F2Matrix& m, const simbound::f2::F2Vector& b) {
    auto plain = unpack(m);
    auto augmented = plain;
    for (std::size_t r = 0; r < m.rows(); ++r) augmented[r].push_back(b.get(r));
    if (m.rows() == 0) return true;
    return naive_rank(plain) == naive_rank(augmented);
}

/// Coboundary membership by brute force over all cochains one degree down.
/// Only usable when that degree has at most ~20 simplices.
inline bool naive_is_coboundary(const simbound::DeltaSet& ds, const simbound::Cochain& c) {
    if (c.degree == 0) return !c.values.any();
    const std::size_t below = ds.counts[c.degree - 1];
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << below); ++pick) {
        simbound::Cochain u{c.degree - 1, simbound::f2::F2Vector(below)};
        for (std::size_t i = 0; i < below; ++i)
            if ((pick >> i) & 1) u.values.set(i, true);
        if (simbound::apply_coboundary(ds, u).values == c.values) return true;
    }
    return false;
}

/// Random 0/1 vector for property tests; deterministic per seed.
inline simbound::f2::F2Vector random_vector(std::mt19937_64& rng, std::size_t size) {
    simbound::f2::F2Vector v(size);
    for (std::size_t i = 0; i < size; ++i) v.set(i, rng() & 1);
    return v;
}

inline simbound::f2::F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                            std::size_t cols) {
    simbound::f2::F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

/// Cycle of length m with consistently directed edges: edge i runs from
/// vertex i to vertex i+1 (mod m). Unlike the sorted-tuple cycle complex,
/// every rotation acts strictly compatibly with the face maps.
inline simbound::DeltaSet directed_cycle(std::size_t m) {
    simbound::DeltaSet ds;
    ds.counts = {m, m};
    ds.faces.resize(2);
    ds.faces[1].resize(m);
    for (std::size_t i = 0; i < m; ++i) ds.faces[1][i] = {(i + 1) % m, i};
    return ds;
}

/// Z_d acting on directed_cycle(m) by rotation through m/d steps.
inline simbound::GroupAction rotation_action(std::size_t m, std::size_t d) {
    simbound::GroupAction act;
    act.group = simbound::cyclic_group(d);
    const std::size_t step = m / d;
    act.perms.assign(d, std::vector<std::vector<std::size_t>>(2));
    for (std::size_t g = 0; g < d; ++g)
        for (std::size_t k = 0; k < 2; ++k) {
            act.perms[g][k].resize(m);
            for (std::size_t s = 0; s < m; ++s) act.perms[g][k][s] = (s + g * step) % m;
        }
    return act;
}

/// Random small pure 2-complex built from a random facet list. Not always
/// a manifold or even connected; good enough to exercise validators.
inline simbound::SimplicialComplex random_complex(std::mt19937_64& rng,
                                                  std::size_t vertices,
                                                  std::size_t facets) {
    std::vector<std::vector<std::size_t>> fs;
    for (std::size_t f = 0; f < facets; ++f) {
        std::size_t a = rng() % vertices, b = rng() % vertices, c = rng() % vertices;
        if (a == b || b == c || a == c) {
            --f;
            continue;
        }
        fs.push_back({a, b, c});
    }
    return simbound::complex_from_facets(vertices, fs);
}

} // namespace testutil
