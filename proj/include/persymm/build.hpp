#pragma once

#include "persymm/bitmatrix.hpp"
#include "persymm/common.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace persymm {

/// Parameters (s, m, k) of the stacked family: an s x k block over an
/// (s+m) x k block, both persymmetric, sharing the column count k.
struct ShapeParams {
    int s;
    int m;
    int k;

    ShapeParams(int s_, int m_, int k_) : s(s_), m(m_), k(k_) {
        if (s < 1 || m < 0 || k < 1) throw std::invalid_argument("ShapeParams: need s>=1, m>=0, k>=1");
    }

    int total_rows() const { return 2 * s + m; }
    int rank_bound() const { return std::min(2 * s + m, k); }
    int alpha_len() const { return k + s - 1; }
    int beta_len() const { return k + s + m - 1; }
    // log2 of the number of coefficient pairs (coset representatives).
    int pair_bits() const { return 2 * k + 2 * s + m - 2; }

    bool operator==(const ShapeParams& o) const { return s == o.s && m == o.m && k == o.k; }
};

/// Canonical shape for a family with block heights a and b in either order;
/// row permutations do not change rank, so the counts agree.
inline ShapeParams from_blocks(int a_rows, int b_rows, int k) {
    int lo = std::min(a_rows, b_rows);
    int hi = std::max(a_rows, b_rows);
    return ShapeParams(lo, hi - lo, k);
}

/// One coset representative: truncated coefficient vectors for (t, eta).
/// Bit i-1 of alpha holds the 1-indexed coefficient alpha_i; likewise beta.
struct CoefficientPair {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
};

/// The s' x cols persymmetric window into a coefficient vector: entry (i, j)
/// is coefficient offset+i+j-2 in 1-based indexing. offset = 1 gives the
/// plain block, offset = j gives the column-shifted variants.
inline BitMatrix persymmetric(std::uint64_t coeffs, int coeff_len, int rows, int cols, int offset = 1) {
    if (rows < 0 || cols < 0 || offset < 1)
        throw std::invalid_argument("persymmetric: bad shape");
    if (coeff_len > 64) throw std::invalid_argument("persymmetric: coefficients exceed one word");
    if (rows > 0 && cols > 0 && offset + rows + cols - 2 > coeff_len)
        throw std::length_error("persymmetric: coefficient vector too short");
    const std::uint64_t mask = low_mask(cols);
    std::vector<std::uint64_t> row_data(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        row_data[static_cast<size_t>(i)] = (coeffs >> (offset - 1 + i)) & mask;
    return BitMatrix(rows, cols, std::move(row_data));
}

/// Stacked matrix with a_rows alpha-rows over b_rows beta-rows, cols columns.
/// Covers the full family (a_rows = s, b_rows = s+m) and every row/column
/// truncated relative used by the joint statistics.
inline BitMatrix family_matrix(const ShapeParams& p, const CoefficientPair& c,
                               int a_rows, int b_rows, int cols) {
    return stack(persymmetric(c.alpha, p.alpha_len(), a_rows, cols),
                 persymmetric(c.beta, p.beta_len(), b_rows, cols));
}

namespace detail {

// Rank of the stacked window matrix straight from the coefficient words.
inline int family_rank(std::uint64_t alpha, std::uint64_t beta, int a_rows, int b_rows, int cols) {
    std::uint64_t rows[64];
    if (a_rows < 0 || b_rows < 0 || a_rows + b_rows > 64 || a_rows + cols - 1 > 64 ||
        b_rows + cols - 1 > 64)
        throw std::invalid_argument("family_rank: shape exceeds one machine word");
    const std::uint64_t mask = low_mask(cols);
    int n = 0;
    for (int r = 0; r < a_rows; ++r) rows[n++] = (alpha >> r) & mask;
    for (int r = 0; r < b_rows; ++r) rows[n++] = (beta >> r) & mask;
    return rank_inplace(rows, n);
}

}  // namespace detail

/// The (2s+m) x k double persymmetric matrix, alpha block on top.
inline BitMatrix double_persymmetric(const ShapeParams& p, const CoefficientPair& c) {
    return family_matrix(p, c, p.s, p.s + p.m, p.k);
}

/// The (2s+m-1) x k matrix whose first 2s+m-2 rows are the (s-1, s+m-1)
/// blocks and whose last row is the coefficient-wise sum of the two deleted
/// rows: entry j = alpha_{s+j-1} + beta_{s+m+j-1}.
inline BitMatrix augmented_sum_row_matrix(const ShapeParams& p, const CoefficientPair& c) {
    if (p.s < 2) throw std::invalid_argument("augmented_sum_row_matrix: needs s >= 2");
    BitMatrix base = family_matrix(p, c, p.s - 1, p.s + p.m - 1, p.k);
    const std::uint64_t mask = low_mask(p.k);
    std::uint64_t sum_row = ((c.alpha >> (p.s - 1)) ^ (c.beta >> (p.s + p.m - 1))) & mask;
    return stack(base, BitMatrix(1, p.k, {sum_row}));
}

}  // namespace persymm
