#pragma once

#include "persymm/expsums.hpp"
#include "persymm/gamma.hpp"
#include "persymm/oracle.hpp"

#include <cstdint>
#include <vector>

namespace persymm {

/// Query: number of q-term solutions of the paired bilinear equations
///   sum Y_i Z_i = 0 and sum Y_i U_i = 0
/// with deg Y_i <= k-1, deg Z_i <= s-1, deg U_i <= s+m-1.
struct SolutionCountQuery {
    int q;
    ShapeParams p;

    SolutionCountQuery(int q_, ShapeParams p_) : q(q_), p(p_) {
        if (q < 1) throw std::invalid_argument("SolutionCountQuery: need q >= 1");
    }
};

/// Exact count through the rank distribution: a power of two times the
/// rank-weighted sum of the Gamma values. Evaluated with cleared
/// denominators; a non-exact final division means a Gamma bug.
inline BigInt count_solutions_formula(const SolutionCountQuery& query) {
    const int s = query.p.s, m = query.p.m, k = query.p.k, q = query.q;
    const int I = query.p.rank_bound();
    BigInt weighted = 0;
    for (int i = 0; i <= I; ++i) weighted += gamma(query.p, i) << static_cast<unsigned>(q * (I - i));
    const long shift = static_cast<long>(2 * s + m + k) * (q - 1) - k + 2 - static_cast<long>(q) * I;
    if (shift >= 0) return weighted << static_cast<unsigned>(shift);
    const unsigned down = static_cast<unsigned>(-shift);
    if ((weighted & ((BigInt(1) << down) - 1)) != 0)
        throw std::logic_error("count_solutions_formula: non-integral result");
    return weighted >> down;
}

namespace detail {

inline std::uint64_t count_solutions_rec(int depth, int q, int k, int s, int sm,
                                         std::uint64_t acc_z, std::uint64_t acc_u) {
    if (depth == q) return (acc_z == 0 && acc_u == 0) ? 1 : 0;
    const std::uint64_t ys = std::uint64_t{1} << k;
    const std::uint64_t zs = std::uint64_t{1} << s;
    const std::uint64_t us = std::uint64_t{1} << sm;
    std::uint64_t total = 0;
    for (std::uint64_t y = 0; y < ys; ++y)
        for (std::uint64_t z = 0; z < zs; ++z) {
            const std::uint64_t yz = acc_z ^ clmul(y, z);
            for (std::uint64_t u = 0; u < us; ++u)
                total += count_solutions_rec(depth + 1, q, k, s, sm, yz, clmul(y, u) ^ acc_u);
        }
    return total;
}

}  // namespace detail

/// Exhaustive count over the full tuple space; the canonical oracle for the
/// formula. Work is 2^(q*(2s+m+k)) tuples, partitioned over the first
/// tuple's Y range.
inline BigInt count_solutions_bruteforce(const SolutionCountQuery& query, int budget_bits = 24,
                                         int workers = 0) {
    const int s = query.p.s, m = query.p.m, k = query.p.k, q = query.q;
    const int sm = s + m;
    const int work_bits = q * (2 * s + m + k);
    if (work_bits > budget_bits) {
        std::ostringstream os;
        os << "count_solutions_bruteforce: 2^" << work_bits << " tuples exceed budget of 2^"
           << budget_bits;
        throw BudgetExceeded(os.str());
    }
    const std::uint64_t ys = std::uint64_t{1} << k;
    const int nworkers = detail::resolve_workers(workers, ys);
    std::vector<std::uint64_t> partial(static_cast<size_t>(nworkers), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) {
        const std::uint64_t y0 = ys / nworkers * w + std::min<std::uint64_t>(w, ys % nworkers);
        const std::uint64_t y1 = y0 + ys / nworkers + (static_cast<std::uint64_t>(w) < ys % nworkers ? 1 : 0);
        threads.emplace_back([&partial, w, y0, y1, q, k, s, sm] {
            std::uint64_t total = 0;
            const std::uint64_t zs = std::uint64_t{1} << s;
            const std::uint64_t us = std::uint64_t{1} << sm;
            for (std::uint64_t y = y0; y < y1; ++y)
                for (std::uint64_t z = 0; z < zs; ++z) {
                    const std::uint64_t yz = detail::clmul(y, z);
                    for (std::uint64_t u = 0; u < us; ++u)
                        total += detail::count_solutions_rec(1, q, k, s, sm, yz, detail::clmul(y, u));
                }
            partial[static_cast<size_t>(w)] = total;
        });
    }
    for (auto& t : threads) t.join();
    BigInt total = 0;
    for (std::uint64_t part : partial) total += part;
    return total;
}

}  // namespace persymm
