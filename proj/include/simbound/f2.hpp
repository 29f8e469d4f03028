#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "simbound/errors.hpp"

namespace simbound::f2 {

/// Bit-packed vector over GF(2).
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    static F2Vector from_bits(const std::vector<int>& bits) {
        F2Vector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) v.set(i, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    F2Vector& operator^=(const F2Vector& other) {
        require(size_ == other.size_, errc::dimension_mismatch, "xor of different lengths");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    /// Index of the first set bit, or size() if zero.
    std::size_t leading() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    friend bool operator==(const F2Vector& a, const F2Vector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix as packed rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, F2Vector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) { row_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { row_[r].flip(c); }

    const F2Vector& row(std::size_t r) const { return row_[r]; }
    F2Vector& row(std::size_t r) { return row_[r]; }

    F2Matrix transposed() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    F2Vector multiply(const F2Vector& x) const {
        require(x.size() == cols_, errc::dimension_mismatch, "matrix-vector size mismatch");
        F2Vector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            F2Vector acc = row_[r];
            // y_r = <row_r, x>
            std::size_t bits = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                if (acc.get(c) && x.get(c)) ++bits;
            y.set(r, bits & 1);
        }
        return y;
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
        require(a.cols_ == b.rows_, errc::dimension_mismatch, "matrix product size mismatch");
        F2Matrix c(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(r, k)) c.row_[r] ^= b.row_[k];
        return c;
    }

    bool is_zero() const {
        for (const auto& r : row_)
            if (r.any()) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vector> row_;
};

namespace detail {

/// Row echelon form in place. Pivoting is deterministic: scan columns left
/// to right, take the lowest remaining row with a 1 in that column.
/// Returns the pivot columns in order.
inline std::vector<std::size_t> eliminate(std::vector<F2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r)
            if (rows[r].get(c)) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].get(c)) rows[r] ^= rows[next_row];
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(const F2Matrix& m) {
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return detail::eliminate(rows, m.cols()).size();
}

/// Basis of the null space; size is cols - rank.
inline std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    auto pivots = detail::eliminate(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<F2Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        F2Vector x(m.cols());
        x.set(free, true);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (rows[p].get(free)) x.set(pivots[p], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Some x with Mx = b, or nullopt when the system is inconsistent.
inline std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    require(b.size() == m.rows(), errc::dimension_mismatch, "rhs length != rows");
    // Augmented elimination: append b as an extra column.
    std::vector<F2Vector> rows(m.rows(), F2Vector(m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) rows[r].set(c, true);
        if (b.get(r)) rows[r].set(m.cols(), true);
    }
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r)
            if (rows[r].get(c)) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].get(c)) rows[r] ^= rows[next_row];
        pivots.push_back(c);
        ++next_row;
    }
    for (std::size_t r = next_row; r < rows.size(); ++r)
        if (rows[r].get(m.cols())) return std::nullopt;

    F2Vector x(m.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p)
        if (rows[p].get(m.cols())) x.set(pivots[p], true);
    return x;
}

/// Incremental independent set over GF(2), kept in echelon form.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduce v against the basis; returns the residue.
    F2Vector reduce(F2Vector v) const {
        require(v.size() == length_, errc::dimension_mismatch, "span length mismatch");
        for (const auto& row : rows_) {
            std::size_t lead = row.leading();
            if (v.get(lead)) v ^= row;
        }
        return v;
    }

    bool contains(const F2Vector& v) const { return !reduce(v).any(); }

    /// Insert v if independent; returns true when the rank grew.
    bool insert(const F2Vector& v) {
        F2Vector residue = reduce(v);
        if (!residue.any()) return false;
        std::size_t lead = residue.leading();
        auto it = rows_.begin();
        while (it != rows_.end() && it->leading() < lead) ++it;
        rows_.insert(it, std::move(residue));
        return true;
    }

private:
    std::size_t length_;
    std::vector<F2Vector> rows_;
};

inline bool in_span(const std::vector<F2Vector>& vectors, const F2Vector& v) {
    if (vectors.empty()) return !v.any();
    SpanBasis basis(v.size());
    for (const auto& w : vectors) {
        require(w.size() == v.size(), errc::dimension_mismatch, "span of different lengths");
        basis.insert(w);
    }
    return basis.contains(v);
}

} // namespace simbound::f2
