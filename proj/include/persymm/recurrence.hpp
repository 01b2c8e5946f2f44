#pragma once

#include "persymm/gamma.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace persymm {

namespace detail {

// Diagonal count of the three-way joint rank statistic for the partition
// that splits off the last row of each block, expressed through square
// counts of the (s-1, s-1+m) family. The subtracted term exists only while
// the width can still grow (i + 1 <= k).
inline BigInt sigma_diag_closed(const ShapeParams& p, int i) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    const int top = std::min(p.total_rows() - 2, p.k);
    if (i > top) return 0;
    BigInt v = 4 * gamma(ShapeParams(p.s - 1, p.m, i), i);
    if (i + 1 <= p.k) v -= gamma(ShapeParams(p.s - 1, p.m, i + 1), i + 1);
    return v;
}

}  // namespace detail

/// Remainder in the rank-count recurrence, as the alternating sum of the
/// three diagonal statistics. Independent of k once k >= i+1 (k >= i for the
/// top three ranks); depends on k only through the boundary guard.
inline BigInt delta_remainder(const ShapeParams& p, int i) {
    if (p.s < 2) throw std::invalid_argument("delta_remainder: needs s >= 2");
    return detail::sigma_diag_closed(p, i) - 3 * detail::sigma_diag_closed(p, i - 1) +
           2 * detail::sigma_diag_closed(p, i - 2);
}

namespace detail {

inline BigInt gamma_rec_impl(const ShapeParams& p, int i,
                             std::map<std::array<int, 4>, BigInt>& memo) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    if (i > p.rank_bound()) return 0;
    if (p.s == 1) return gamma_s1(p.m, p.k, i);
    const std::array<int, 4> key{p.s, p.m, p.k, i};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = 2 * gamma_rec_impl(ShapeParams(p.s - 1, p.m + 1, p.k), i - 1, memo) +
               4 * gamma_rec_impl(from_blocks(p.s, p.s + p.m - 1, p.k), i - 1, memo) -
               8 * gamma_rec_impl(ShapeParams(p.s - 1, p.m, p.k), i - 2, memo) +
               delta_remainder(p, i);
    memo.emplace(key, v);
    return v;
}

}  // namespace detail

/// Second computation path: the recurrence in the block heights, peeling one
/// row off each block per step, down to the single-top-row base family.
/// Negative rank indices count zero; an (s, s-1) argument at m = 0 is the
/// swapped family and is normalized by block symmetry.
inline BigInt gamma_via_recurrence(const ShapeParams& p, int i) {
    std::map<std::array<int, 4>, BigInt> memo;
    return detail::gamma_rec_impl(p, i, memo);
}

/// Closed form of gamma(s, m, k+1, rank) - gamma(s, m, k, rank). Defined in
/// the regimes where the width already exceeds the rank index; other
/// parameters are out of regime.
inline BigInt gamma_difference(const ShapeParams& p, int rank) {
    const int s = p.s, m = p.m, k = p.k;
    if (s < 2) throw std::domain_error("gamma_difference: needs s >= 2");
    if (rank < 0 || rank > 2 * s + m) throw std::domain_error("gamma_difference: rank out of range");
    if (rank <= s - 1) {
        if (k <= rank) throw std::domain_error("gamma_difference: needs k > rank");
        return 0;
    }
    const int j = rank - s;
    if (k <= rank) throw std::domain_error("gamma_difference: needs k > rank");
    if (m == 0) {
        if (j == 0) return 3 * pow2(k + s - 1);
        if (j <= s - 1) return 21 * pow2(k + s + 3 * j - 4);
        return 3 * pow2(2 * k + 2 * s - 2) - 3 * pow2(k + 4 * s - 4);  // j == s
    }
    if (m == 1) {
        if (j == 0) return pow2(k + s - 1);
        if (j == 1) return 11 * pow2(k + s - 1);
        if (j <= s) return 21 * pow2(k + s + 3 * j - 5);
        return 3 * pow2(2 * k + 2 * s - 1) - 3 * pow2(k + 4 * s - 2);  // j == s + 1
    }
    if (j == 0) return pow2(k + s - 1);
    if (j <= m - 1) return 3 * pow2(k + s + 2 * j - 3);
    if (j == m) return 11 * pow2(k + s + 2 * m - 3);
    if (j <= m + s - 1) return 21 * pow2(k + s + 2 * m + 3 * (j - m) - 4);
    return 3 * pow2(2 * k + 2 * s + m - 2) - 3 * pow2(k + 4 * s + 2 * m - 4);  // j == s + m
}

/// Third computation path for the upper rank indices: reduce to a rank-(s'+1)
/// boundary count of a smaller family and scale by a power of 8. Ranks s+1
/// through s+m shrink m; ranks above s+m shrink both blocks to a square
/// family. The boundary counts come from the closed-form tables.
inline BigInt gamma_via_reduction(const ShapeParams& p, int i) {
    const int s = p.s, m = p.m, k = p.k;
    if (s < 2) throw std::domain_error("gamma_via_reduction: needs s >= 2");
    if (i < s + 1 || i > 2 * s + m) throw std::domain_error("gamma_via_reduction: rank not reducible");
    if (k < i) throw std::domain_error("gamma_via_reduction: needs k >= rank");
    if (i <= s + m) {
        const int j = i - s;  // 1 <= j <= m
        return pow2(3 * (j - 1)) * gamma(ShapeParams(s, m - (j - 1), k - (j - 1)), s + 1);
    }
    const int j = i - s - m - 1;  // 0 <= j <= s - 1
    return pow2(3 * (2 * j + m)) * gamma(ShapeParams(s - j, 0, k - m - 2 * j), s - j + 1);
}

}  // namespace persymm
