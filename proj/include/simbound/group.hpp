#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simbound/errors.hpp"

namespace simbound {

/// Finite group as a multiplication table: table[a][b] = a*b.
/// Elements are 0..order-1; identity and inverses are derived on
/// construction, so a FiniteGroup obtained from group_from_table is
/// always internally consistent.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
    std::vector<std::size_t> inverses;

    std::size_t mult(std::size_t a, std::size_t b) const { return table[a][b]; }
    std::size_t inv(std::size_t a) const { return inverses[a]; }
};

/// Validates the table (closure, identity, inverses, associativity) and
/// fills in the derived fields. Error messages name the offending elements.
inline FiniteGroup group_from_table(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t m = table.size();
    require(m > 0, errc::no_identity, "empty multiplication table");
    for (std::size_t a = 0; a < m; ++a) {
        require(table[a].size() == m, errc::not_closed,
                "row " + std::to_string(a) + " has wrong length");
        for (std::size_t b = 0; b < m; ++b)
            require(table[a][b] < m, errc::not_closed,
                    "product of " + std::to_string(a) + " and " + std::to_string(b) +
                        " is out of range");
    }

    FiniteGroup g;
    g.order = m;
    g.table = table;

    bool found = false;
    for (std::size_t e = 0; e < m && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < m; ++x)
            if (table[e][x] != x || table[x][e] != x) { ok = false; break; }
        if (ok) { g.identity = e; found = true; }
    }
    require(found, errc::no_identity, "table has no two-sided identity");

    g.inverses.assign(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            if (table[a][b] == g.identity && table[b][a] == g.identity) {
                g.inverses[a] = b;
                break;
            }
        require(g.inverses[a] != m, errc::no_inverse,
                "element " + std::to_string(a) + " has no inverse");
    }

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                require(table[table[a][b]][c] == table[a][table[b][c]], errc::not_associative,
                        "associativity fails on (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
    return g;
}

inline FiniteGroup cyclic_group(std::size_t m) {
    require(m > 0, errc::no_identity, "cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a][b] = (a + b) % m;
    return group_from_table(table);
}

/// (Z_2)^k with elements as bit vectors: index i has bit j set iff the
/// j-th generator occurs in i. Multiplication is XOR.
inline FiniteGroup elementary_abelian(std::size_t k) {
    require(k < 20, errc::too_large, "elementary abelian rank " + std::to_string(k));
    const std::size_t m = std::size_t(1) << k;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a][b] = a ^ b;
    return group_from_table(table);
}

inline bool is_abelian(const FiniteGroup& g) {
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (g.table[a][b] != g.table[b][a]) return false;
    return true;
}

/// True iff the group is (Z_2)^k for some k >= 0: abelian with every
/// element its own inverse.
inline bool is_elementary_abelian_2(const FiniteGroup& g) {
    if (!is_abelian(g)) return false;
    for (std::size_t a = 0; a < g.order; ++a)
        if (g.mult(a, a) != g.identity) return false;
    return true;
}

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss). Exact for entries whose
/// Hadamard bound stays within 126 bits; callers keep entries small.
inline __int128 integer_determinant(std::vector<std::vector<__int128>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    __int128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace detail

/// Integer matrix representation: matrices[g] is a dim x dim row-major
/// table of exact integer entries.
struct Representation {
    FiniteGroup group;
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> matrices;

    const std::vector<std::vector<std::int64_t>>& matrix(std::size_t g) const {
        return matrices[g];
    }
};

inline std::vector<std::vector<std::int64_t>> matrix_product(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline void validate_representation(const Representation& rep) {
    const auto& g = rep.group;
    require(rep.matrices.size() == g.order, errc::dimension_mismatch,
            "expected one matrix per group element");
    for (std::size_t a = 0; a < g.order; ++a) {
        require(rep.matrices[a].size() == rep.dim, errc::dimension_mismatch,
                "matrix for element " + std::to_string(a) + " has wrong row count");
        for (const auto& row : rep.matrices[a])
            require(row.size() == rep.dim, errc::dimension_mismatch,
                    "matrix for element " + std::to_string(a) + " has wrong column count");
    }
    for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j)
            require(rep.matrices[g.identity][i][j] == (i == j ? 1 : 0),
                    errc::identity_violation, "identity element is not the identity matrix");
    for (std::size_t a = 0; a < g.order; ++a) {
        std::vector<std::vector<__int128>> wide(rep.dim, std::vector<__int128>(rep.dim));
        for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t j = 0; j < rep.dim; ++j) wide[i][j] = rep.matrices[a][i][j];
        require(detail::integer_determinant(wide) != 0, errc::no_inverse,
                "matrix for element " + std::to_string(a) + " is singular");
    }
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
            require(matrix_product(rep.matrices[a], rep.matrices[b]) ==
                        rep.matrices[g.mult(a, b)],
                    errc::not_closed,
                    "matrices for " + std::to_string(a) + " and " + std::to_string(b) +
                        " do not compose");
}

/// (Z_2)^k acting on Z^k, generator i negating coordinate i.
inline Representation sign_representation(std::size_t k) {
    Representation rep;
    rep.group = elementary_abelian(k);
    rep.dim = k;
    rep.matrices.resize(rep.group.order);
    for (std::size_t g = 0; g < rep.group.order; ++g) {
        rep.matrices[g].assign(k, std::vector<std::int64_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            rep.matrices[g][i][i] = ((g >> i) & 1) ? -1 : 1;
    }
    return rep;
}

/// Z_2 acting on Z^dim by x -> -x.
inline Representation antipodal_representation(std::size_t dim) {
    Representation rep;
    rep.group = elementary_abelian(1);
    rep.dim = dim;
    rep.matrices.resize(2);
    for (std::size_t g = 0; g < 2; ++g) {
        rep.matrices[g].assign(dim, std::vector<std::int64_t>(dim, 0));
        for (std::size_t i = 0; i < dim; ++i) rep.matrices[g][i][i] = g ? -1 : 1;
    }
    return rep;
}

} // namespace simbound
