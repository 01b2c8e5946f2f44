#pragma once

#include "persymm/build.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace persymm {

/// The fourteen character sums over bounded-degree polynomial triples
/// (Y, Z, U). Each is a triple sum of E(tYZ)E(etaYU) and differs only in the
/// three degree selectors.
enum class SumTag { g, g1, g2, f1, f2, h, v, psi, phi, phi1, phi2, theta1, theta2, theta3 };

constexpr SumTag kAllSumTags[] = {SumTag::g,    SumTag::g1,     SumTag::g2,   SumTag::f1,
                                  SumTag::f2,   SumTag::h,      SumTag::v,    SumTag::psi,
                                  SumTag::phi,  SumTag::phi1,   SumTag::phi2, SumTag::theta1,
                                  SumTag::theta2, SumTag::theta3};

inline const char* sum_tag_name(SumTag t) {
    switch (t) {
        case SumTag::g: return "g";
        case SumTag::g1: return "g1";
        case SumTag::g2: return "g2";
        case SumTag::f1: return "f1";
        case SumTag::f2: return "f2";
        case SumTag::h: return "h";
        case SumTag::v: return "v";
        case SumTag::psi: return "psi";
        case SumTag::phi: return "phi";
        case SumTag::phi1: return "phi1";
        case SumTag::phi2: return "phi2";
        case SumTag::theta1: return "theta1";
        case SumTag::theta2: return "theta2";
        case SumTag::theta3: return "theta3";
    }
    return "?";
}

/// One degree constraint: all polynomials of degree <= bound (including 0),
/// or exactly the 2^bound polynomials with top coefficient at bound.
struct DegreeRange {
    int bound;
    bool exact;
};

struct SumKind {
    SumTag tag;
    DegreeRange y, z, u;
};

/// Degree selectors per tag, in terms of the shape. The exact-degree ranges
/// never contain the zero polynomial; the bounded ranges always do.
inline SumKind sum_kind(SumTag tag, const ShapeParams& p) {
    const int k = p.k, s = p.s, sm = p.s + p.m;
    auto le = [](int b) { return DegreeRange{b, false}; };
    auto eq = [](int b) { return DegreeRange{b, true}; };
    switch (tag) {
        case SumTag::g: return {tag, le(k - 1), le(s - 1), le(sm - 1)};
        case SumTag::g1: return {tag, le(k - 1), eq(s - 1), le(sm - 1)};
        case SumTag::g2: return {tag, le(k - 1), le(s - 1), eq(sm - 1)};
        case SumTag::f1: return {tag, le(k - 1), eq(s - 1), le(sm - 2)};
        case SumTag::f2: return {tag, le(k - 1), le(s - 2), eq(sm - 1)};
        case SumTag::h: return {tag, le(k - 1), eq(s - 1), eq(sm - 1)};
        case SumTag::v: return {tag, le(k - 1), le(s - 2), le(sm - 2)};
        case SumTag::psi: return {tag, eq(k - 1), le(s - 1), le(sm - 1)};
        case SumTag::phi: return {tag, eq(k - 1), le(s - 1), eq(sm - 1)};
        case SumTag::phi1: return {tag, eq(k - 1), le(s - 1), le(sm - 2)};
        case SumTag::phi2: return {tag, le(k - 2), le(s - 1), eq(sm - 1)};
        case SumTag::theta1: return {tag, eq(k - 1), eq(s - 1), le(sm - 2)};
        case SumTag::theta2: return {tag, le(k - 2), le(s - 1), eq(sm - 1)};
        case SumTag::theta3: return {tag, le(k - 2), eq(s - 1), le(sm - 2)};
    }
    throw std::invalid_argument("sum_kind: unknown tag");
}

/// Coefficient of T^{-1} in the fractional part of t*P: with t's coefficients
/// packed little-endian from index 1 and P's from degree 0, the matching
/// indices line up bit for bit.
inline int residue_bit(std::uint64_t coeffs, int coeff_len, std::uint64_t poly) {
    if (poly != 0 && std::bit_width(poly) > static_cast<unsigned>(coeff_len))
        throw std::length_error("residue_bit: coefficient vector too short");
    return std::popcount(coeffs & poly) & 1;
}

namespace detail {

inline std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r = 0;
    while (y != 0) {
        r ^= x << std::countr_zero(y);
        y &= y - 1;
    }
    return r;
}

// E(t * P) as +-1.
inline long long character(std::uint64_t coeffs, int coeff_len, std::uint64_t poly) {
    return residue_bit(coeffs, coeff_len, poly) ? -1 : 1;
}

template <class Fn>
void for_each_poly(const DegreeRange& r, Fn&& fn) {
    if (r.exact) {
        if (r.bound < 0) return;
        const std::uint64_t top = std::uint64_t{1} << r.bound;
        for (std::uint64_t low = 0; low < top; ++low) fn(top | low);
        return;
    }
    if (r.bound < 0) {
        fn(0);
        return;
    }
    const std::uint64_t count = std::uint64_t{1} << (r.bound + 1);
    for (std::uint64_t v = 0; v < count; ++v) fn(v);
}

}  // namespace detail

/// Literal evaluation of the triple sum, factored through the inner Z- and
/// U-sums per Y. Exists to police the rank formulas, so it is gated to tiny
/// shapes.
inline long long exp_sum_direct(SumTag tag, const ShapeParams& p, const CoefficientPair& c,
                                int budget_bits = 26) {
    if (p.total_rows() + p.k > budget_bits)
        throw BudgetExceeded("exp_sum_direct: shape too large for direct evaluation");
    const SumKind kind = sum_kind(tag, p);
    const int alen = p.alpha_len(), blen = p.beta_len();
    long long total = 0;
    detail::for_each_poly(kind.y, [&](std::uint64_t y) {
        long long zsum = 0, usum = 0;
        detail::for_each_poly(kind.z, [&](std::uint64_t z) {
            zsum += detail::character(c.alpha, alen, detail::clmul(y, z));
        });
        detail::for_each_poly(kind.u, [&](std::uint64_t u) {
            usum += detail::character(c.beta, blen, detail::clmul(y, u));
        });
        total += zsum * usum;
    });
    return total;
}

namespace detail {

inline long long pow2ll(int e) {
    if (e < 0) throw std::logic_error("exp_sum_rank_formula: negative exponent");
    return 1LL << e;
}

}  // namespace detail

/// The same fourteen sums evaluated through ranks of the associated stacked
/// matrices: a power of two cut down by the full rank, gated (and for the
/// leading-coefficient kinds, signed) by agreement between neighbouring
/// matrices in the family.
inline long long exp_sum_rank_formula(SumTag tag, const ShapeParams& p, const CoefficientPair& c) {
    const int s = p.s, m = p.m, k = p.k;
    const int e = 2 * s + m + k;
    auto fr = [&](int a_rows, int b_rows, int cols) {
        return detail::family_rank(c.alpha, c.beta, a_rows, b_rows, cols);
    };
    switch (tag) {
        case SumTag::g:
            return detail::pow2ll(e - fr(s, s + m, k));
        case SumTag::g1: {
            const int full = fr(s, s + m, k);
            return fr(s - 1, s + m, k) == full ? detail::pow2ll(e - 1 - full) : 0;
        }
        case SumTag::g2: {
            const int full = fr(s, s + m, k);
            return fr(s, s + m - 1, k) == full ? detail::pow2ll(e - 1 - full) : 0;
        }
        case SumTag::f1: {
            const int base = fr(s - 1, s + m - 1, k);
            return fr(s, s + m - 1, k) == base ? detail::pow2ll(e - 2 - base) : 0;
        }
        case SumTag::f2: {
            const int base = fr(s - 1, s + m - 1, k);
            return fr(s - 1, s + m, k) == base ? detail::pow2ll(e - 2 - base) : 0;
        }
        case SumTag::h: {
            if (s < 2) throw std::invalid_argument("exp_sum_rank_formula: h needs s >= 2");
            const int base = fr(s - 1, s + m - 1, k);
            const int aug = rank(augmented_sum_row_matrix(p, c));
            return aug == base ? detail::pow2ll(e - 2 - base) : 0;
        }
        case SumTag::v:
            return detail::pow2ll(e - 2 - fr(s - 1, s + m - 1, k));
        case SumTag::psi: {
            const int full = fr(s, s + m, k);
            return fr(s, s + m, k - 1) == full ? detail::pow2ll(e - 1 - full) : 0;
        }
        case SumTag::phi: {
            const int j = fr(s, s + m - 1, k - 1);
            if (fr(s, s + m - 1, k) != j || fr(s, s + m, k - 1) != j) return 0;
            const int full = fr(s, s + m, k);
            if (full == j) return detail::pow2ll(e - 2 - j);
            return -detail::pow2ll(e - 2 - j);  // full == j + 1 is the only alternative
        }
        case SumTag::phi1: {
            const int j = fr(s, s + m - 1, k - 1);
            return fr(s, s + m - 1, k) == j ? detail::pow2ll(e - 2 - j) : 0;
        }
        case SumTag::phi2:
        case SumTag::theta2: {
            const int j = fr(s, s + m - 1, k - 1);
            return fr(s, s + m, k - 1) == j ? detail::pow2ll(e - 2 - j) : 0;
        }
        case SumTag::theta1: {
            const int j = fr(s - 1, s + m - 1, k - 1);
            if (fr(s - 1, s + m - 1, k) != j || fr(s, s + m - 1, k - 1) != j) return 0;
            const int grown = fr(s, s + m - 1, k);
            if (grown == j) return detail::pow2ll(e - 3 - j);
            return -detail::pow2ll(e - 3 - j);  // grown == j + 1
        }
        case SumTag::theta3: {
            const int base = fr(s - 1, s + m - 1, k - 1);
            return fr(s, s + m - 1, k - 1) == base ? detail::pow2ll(e - 3 - base) : 0;
        }
    }
    throw std::invalid_argument("exp_sum_rank_formula: unknown tag");
}

}  // namespace persymm
