#pragma once

#include "persymm/common.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace persymm {

/// Dense matrix over GF(2) with one machine word per row.
///
/// Rows and columns are fixed at construction; the column count is capped at
/// 64 so that row elimination is a single XOR. Bit j of row word i is the
/// entry (i, j). Values are immutable and safe to share across threads.
class BitMatrix {
public:
    static constexpr int kMaxCols = 64;

    BitMatrix(int rows, int cols, std::vector<std::uint64_t> row_data)
        : rows_(rows), cols_(cols), row_data_(std::move(row_data)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
        if (cols > kMaxCols) throw std::invalid_argument("BitMatrix: more than 64 columns");
        if (static_cast<int>(row_data_.size()) != rows)
            throw std::invalid_argument("BitMatrix: row count mismatch");
        const std::uint64_t mask = low_mask(cols);
        for (std::uint64_t w : row_data_)
            if ((w & ~mask) != 0) throw std::invalid_argument("BitMatrix: bit set beyond column count");
    }

    static BitMatrix zero(int rows, int cols) {
        return BitMatrix(rows, cols, std::vector<std::uint64_t>(static_cast<size_t>(rows), 0));
    }

    static BitMatrix identity(int n) {
        std::vector<std::uint64_t> rows(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = std::uint64_t{1} << i;
        return BitMatrix(n, n, std::move(rows));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t row(int i) const { return row_data_[static_cast<size_t>(i)]; }
    bool at(int i, int j) const { return (row(i) >> j) & 1u; }
    const std::vector<std::uint64_t>& row_data() const { return row_data_; }

private:
    int rows_;
    int cols_;
    std::vector<std::uint64_t> row_data_;
};

namespace detail {

// In-place forward elimination; pivot rows accumulate at the front of the
// buffer, each identified by its lowest set bit.
inline int rank_inplace(std::uint64_t* a, int n) {
    int r = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t w = a[i];
        for (int j = 0; j < r; ++j) {
            const std::uint64_t p = a[j];
            if (w & (p & (~p + 1))) w ^= p;
        }
        if (w != 0) a[r++] = w;
    }
    return r;
}

}  // namespace detail

/// GF(2) rank by forward elimination on a private copy of the rows.
inline int rank(const BitMatrix& m) {
    std::vector<std::uint64_t> work(m.row_data());
    return detail::rank_inplace(work.data(), m.rows());
}

/// Row-concatenation [top over bottom].
inline BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("stack: column count mismatch");
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<size_t>(top.rows() + bottom.rows()));
    rows.insert(rows.end(), top.row_data().begin(), top.row_data().end());
    rows.insert(rows.end(), bottom.row_data().begin(), bottom.row_data().end());
    return BitMatrix(top.rows() + bottom.rows(), top.cols(), std::move(rows));
}

/// Matrix of the last (cols - n) columns, same rows.
inline BitMatrix drop_leading_columns(const BitMatrix& m, int n) {
    if (n < 0 || n > m.cols())
        throw std::invalid_argument("drop_leading_columns: column count out of range");
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i) >> n);
    return BitMatrix(m.rows(), m.cols() - n, std::move(rows));
}

}  // namespace persymm
