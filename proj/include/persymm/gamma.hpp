#pragma once

#include "persymm/build.hpp"
#include "persymm/common.hpp"

#include <stdexcept>
#include <vector>

namespace persymm {

namespace detail {

// c * 2^e with e possibly negative; the small-index table entries combine
// half-integer terms into integers, so evaluation is exact-rational.
inline BigRational term(long c, long e) { return BigRational(c) * pow2q(e); }

}  // namespace detail

/// Rank-i count for the base family with a single top row: one 1 x k block
/// over a (1+M) x k block. M = 0 and M = 1 have their own small tables;
/// k <= 2 is forced by the two moment identities; larger shapes follow the
/// general two-regime table.
inline BigInt gamma_s1(int M, int k, int i) {
    if (M < 0 || k < 1) throw std::invalid_argument("gamma_s1: need M>=0, k>=1");
    if (i < 0 || i > std::min(M + 2, k)) return 0;
    if (i == 0) return 1;
    if (M == 0) {
        if (i == 1) return 3 * (pow2(k) - 1);
        return pow2(2 * k) - 3 * pow2(k) + 2;  // i == 2
    }
    if (k == 1) return pow2(2 + M) - 1;  // i == 1, the only nonzero rank
    if (k == 2) {
        if (i == 1) return 9;
        return pow2(4 + M) - 10;  // i == 2
    }
    if (M == 1) {
        if (i == 1) return pow2(k) + 5;
        if (i == 2) return 11 * (pow2(k) - 2);
        return pow2(2 * k + 1) - 3 * pow2(k + 2) + 16;  // i == 3
    }
    // M >= 2, k >= 3.
    if (i == 1) return pow2(k) + 5;
    if (k <= M + 1) {
        if (i <= k - 1) return 3 * pow2(k + 2 * i - 4) + 21 * pow2(3 * i - 5);
        return pow2(2 * k + M) - 5 * pow2(3 * k - 5);  // i == k
    }
    if (i <= M) return 3 * pow2(k + 2 * i - 4) + 21 * pow2(3 * i - 5);
    if (i == M + 1) return 11 * (pow2(k + 2 * M - 2) - pow2(3 * M - 2));
    return pow2(2 * k + M) - 3 * pow2(k + 2 * M) + pow2(3 * M + 1);  // i == M + 2
}

namespace detail {

// k > i regime, s >= 2.
inline BigInt gamma_wide(int s, int m, int k, int i) {
    using detail::term;
    BigRational v;
    if (i <= s - 1) {
        v = term(21, 3 * i - 4) - term(3, 2 * i - 3);
    } else if (m == 0) {
        if (i == s)
            v = term(3, k + s - 1) + term(21, 3 * s - 4) - term(27, 2 * s - 3);
        else if (i <= 2 * s - 1)
            v = term(21, k - 2 * s + 3 * i - 4) + term(21, 3 * i - 4) - term(105, 4 * i - 2 * s - 5);
        else
            v = term(1, 2 * k + 2 * s - 2) - term(3, k + 4 * s - 4) + term(1, 6 * s - 5);
    } else if (m == 1) {
        if (i == s)
            v = term(1, k + s - 1) + term(21, 3 * s - 4) - term(11, 2 * s - 3);
        else if (i == s + 1)
            v = term(11, k + s - 1) + term(21, 3 * s - 1) - term(53, 2 * s - 1);
        else if (i <= 2 * s)
            v = term(21, k - 2 * s + 3 * i - 5) + term(21, 3 * i - 4) - term(105, 4 * i - 2 * s - 6);
        else
            v = term(1, 2 * k + 2 * s - 1) - term(3, k + 4 * s - 2) + term(1, 6 * s - 2);
    } else {
        if (i == s)
            v = term(1, k + s - 1) + term(21, 3 * s - 4) - term(11, 2 * s - 3);
        else if (i <= s + m - 1)
            v = term(3, k - s + 2 * i - 3) + term(21, 3 * i - 4) - term(21, 3 * i - s - 4);
        else if (i == s + m)
            v = term(11, k + s + 2 * m - 3) + term(21, 3 * s + 3 * m - 4) - term(53, 2 * s + 3 * m - 4);
        else if (i <= 2 * s + m - 1)
            v = term(21, k - 2 * s + 3 * i - m - 4) + term(21, 3 * i - 4) - term(105, 4 * i - 2 * s - m - 5);
        else
            v = term(1, 2 * k + 2 * s + m - 2) - term(3, k + 4 * s + 2 * m - 4) + term(1, 6 * s + 3 * m - 5);
    }
    return to_integer(v, "gamma");
}

// k == i regime (square counts), s >= 2. The leading exponent is
// 2s + 2i + m - 2 throughout; only the smallest correction term changes.
inline BigInt gamma_square(int s, int m, int i) {
    using detail::term;
    BigRational lead = term(1, 2 * s + 2 * i + m - 2) - term(3, 3 * i - 4);
    BigRational tail;
    if (m == 0) {
        tail = (i <= s) ? term(1, 2 * i - 3) : term(1, 4 * i - 2 * s - 5);
    } else if (m == 1) {
        tail = (i <= s + 1) ? term(1, 2 * i - 3) : term(1, 4 * i - 2 * s - 6);
    } else {
        if (i <= s + 1)
            tail = term(1, 2 * i - 3);
        else if (i <= s + m + 1)
            tail = term(1, 3 * i - s - 4);
        else
            tail = term(1, 4 * i - 2 * s - m - 5);
    }
    return to_integer(lead + tail, "gamma");
}

}  // namespace detail

/// Number of rank-i matrices in the (s, s+m) x k family, by the closed-form
/// tables. Total over all valid shapes: out-of-range ranks count zero.
inline BigInt gamma(const ShapeParams& p, int i) {
    if (i < 0 || i > p.rank_bound()) return 0;
    if (i == 0) return 1;
    if (p.s == 1) return gamma_s1(p.m, p.k, i);
    if (p.k == i) return detail::gamma_square(p.s, p.m, i);
    return detail::gamma_wide(p.s, p.m, p.k, i);
}

/// Full rank distribution of a family; counts[i] holds the rank-i count.
struct RankDistribution {
    ShapeParams params;
    std::vector<BigInt> counts;

    BigInt total() const {
        BigInt t = 0;
        for (const BigInt& c : counts) t += c;
        return t;
    }
};

/// Both linear constraints every valid distribution satisfies, checked in
/// cleared-denominator integer form.
inline bool moments_hold(const RankDistribution& d) {
    const int s = d.params.s, m = d.params.m, k = d.params.k;
    const int I = d.params.rank_bound();
    if (static_cast<int>(d.counts.size()) != I + 1) return false;
    if (d.total() != pow2(2 * k + 2 * s + m - 2)) return false;
    BigInt weighted = 0;
    for (int i = 0; i <= I; ++i) weighted += d.counts[static_cast<size_t>(i)] << (I - i + 2);
    BigInt rhs = pow2(I) * (pow2(k + 2 * s + m) + pow2(2 * k) - pow2(k));
    return weighted == rhs;
}

/// Vectorized closed form. A moment-identity failure here means the
/// dispatcher picked a wrong branch, so it is a hard error.
inline RankDistribution gamma_distribution(const ShapeParams& p) {
    RankDistribution d{p, {}};
    d.counts.reserve(static_cast<size_t>(p.rank_bound()) + 1);
    for (int i = 0; i <= p.rank_bound(); ++i) d.counts.push_back(gamma(p, i));
    if (!moments_hold(d)) throw std::logic_error("gamma_distribution: moment identity failed");
    return d;
}

}  // namespace persymm
