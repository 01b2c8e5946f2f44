#pragma once

#include "persymm/build.hpp"
#include "persymm/gamma.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

namespace persymm {

struct OracleOptions {
    int budget_bits = 26;  // refuse enumerations beyond 2^budget_bits pairs
    int workers = 0;       // 0 = hardware concurrency
};

enum class StatKind { SigmaTriple, PartitionSix, SigmaAugmented, SigmaAlphaRow };

/// Joint rank statistics: count of coefficient pairs per rank tuple.
struct JointRankStats {
    ShapeParams params;
    StatKind kind;
    std::map<std::vector<int>, BigInt> table;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [key, count] : table) t += count;
        return t;
    }

    BigInt at(std::vector<int> key) const {
        auto it = table.find(key);
        return it == table.end() ? BigInt(0) : it->second;
    }
};

namespace detail {

inline void check_budget(int pair_bits, const OracleOptions& opts, const char* what) {
    if (pair_bits > opts.budget_bits) {
        std::ostringstream os;
        os << what << ": 2^" << pair_bits << " pairs exceed budget of 2^" << opts.budget_bits;
        throw BudgetExceeded(os.str());
    }
}

inline int resolve_workers(int requested, std::uint64_t beta_count) {
    unsigned hw = std::thread::hardware_concurrency();
    int w = requested > 0 ? requested : (hw != 0 ? static_cast<int>(hw) : 1);
    if (static_cast<std::uint64_t>(w) > beta_count) w = static_cast<int>(beta_count);
    return std::max(w, 1);
}

// Full scan of the coefficient space, beta outer / alpha inner, the beta
// range split into one contiguous chunk per worker. fn(worker, alpha, beta)
// must write only worker-owned state; merging in worker order afterwards
// keeps results independent of the worker count.
template <class PairFn>
void for_each_pair(int alpha_bits, int beta_bits, int workers, PairFn&& fn) {
    const std::uint64_t acount = std::uint64_t{1} << alpha_bits;
    const std::uint64_t bcount = std::uint64_t{1} << beta_bits;
    if (workers == 1) {
        for (std::uint64_t b = 0; b < bcount; ++b)
            for (std::uint64_t a = 0; a < acount; ++a) fn(0, a, b);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t b0 = bcount / workers * w + std::min<std::uint64_t>(w, bcount % workers);
        const std::uint64_t b1 = b0 + bcount / workers + (static_cast<std::uint64_t>(w) < bcount % workers ? 1 : 0);
        threads.emplace_back([&fn, w, b0, b1, acount] {
            for (std::uint64_t b = b0; b < b1; ++b)
                for (std::uint64_t a = 0; a < acount; ++a) fn(w, a, b);
        });
    }
    for (auto& t : threads) t.join();
}

// Shared driver for the joint statistics: KeyFn maps (alpha, beta) to a
// small rank tuple; per-worker tables merge in worker order.
template <class KeyFn>
JointRankStats tabulate(const ShapeParams& p, StatKind kind, int alpha_bits, int beta_bits,
                        const OracleOptions& opts, KeyFn&& key_fn) {
    const int workers = resolve_workers(opts.workers, std::uint64_t{1} << beta_bits);
    std::vector<std::map<std::vector<int>, std::uint64_t>> partial(static_cast<size_t>(workers));
    for_each_pair(alpha_bits, beta_bits, workers,
                  [&partial, &key_fn](int w, std::uint64_t a, std::uint64_t b) {
                      ++partial[static_cast<size_t>(w)][key_fn(a, b)];
                  });
    JointRankStats stats{p, kind, {}};
    for (const auto& part : partial)
        for (const auto& [key, count] : part) stats.table[key] += count;
    return stats;
}

}  // namespace detail

/// Ground truth: rank histogram of the full family over every coefficient
/// pair. One plain rank computation per pair, no incremental shortcuts.
inline RankDistribution enumerate_rank_distribution(const ShapeParams& p,
                                                    const OracleOptions& opts = {}) {
    detail::check_budget(p.pair_bits(), opts, "enumerate_rank_distribution");
    const int bound = p.rank_bound();
    const int workers = detail::resolve_workers(opts.workers, std::uint64_t{1} << p.beta_len());
    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<size_t>(workers), std::vector<std::uint64_t>(static_cast<size_t>(bound) + 1, 0));
    const int s = p.s, m = p.m, k = p.k;
    detail::for_each_pair(p.alpha_len(), p.beta_len(), workers,
                          [&partial, s, m, k](int w, std::uint64_t a, std::uint64_t b) {
                              ++partial[static_cast<size_t>(w)]
                                       [static_cast<size_t>(detail::family_rank(a, b, s, s + m, k))];
                          });
    RankDistribution d{p, std::vector<BigInt>(static_cast<size_t>(bound) + 1, BigInt(0))};
    for (const auto& part : partial)
        for (int i = 0; i <= bound; ++i) d.counts[static_cast<size_t>(i)] += part[static_cast<size_t>(i)];
    return d;
}

/// Joint ranks (j1, j2, j3) of the three nested matrices obtained by deleting
/// the last row of each block: neither deleted row, the beta row restored,
/// and the full matrix.
inline JointRankStats sigma_triples(const ShapeParams& p, const OracleOptions& opts = {}) {
    if (p.s < 2) throw std::invalid_argument("sigma_triples: needs s >= 2");
    detail::check_budget(p.pair_bits(), opts, "sigma_triples");
    const int s = p.s, m = p.m, k = p.k;
    return detail::tabulate(p, StatKind::SigmaTriple, p.alpha_len(), p.beta_len(), opts,
                            [s, m, k](std::uint64_t a, std::uint64_t b) {
                                return std::vector<int>{
                                    detail::family_rank(a, b, s - 1, s + m - 1, k),
                                    detail::family_rank(a, b, s, s + m - 1, k),
                                    detail::family_rank(a, b, s, s + m, k)};
                            });
}

/// Joint ranks (j1..j6) of the three row sets of the triple partition crossed
/// with the first k-1 and all k columns.
inline JointRankStats partition_six_tuple(const ShapeParams& p, const OracleOptions& opts = {}) {
    if (p.s < 2 || p.k < 2) throw std::invalid_argument("partition_six_tuple: needs s >= 2, k >= 2");
    detail::check_budget(p.pair_bits(), opts, "partition_six_tuple");
    const int s = p.s, m = p.m, k = p.k;
    return detail::tabulate(p, StatKind::PartitionSix, p.alpha_len(), p.beta_len(), opts,
                            [s, m, k](std::uint64_t a, std::uint64_t b) {
                                return std::vector<int>{
                                    detail::family_rank(a, b, s - 1, s + m - 1, k - 1),
                                    detail::family_rank(a, b, s - 1, s + m - 1, k),
                                    detail::family_rank(a, b, s, s + m - 1, k - 1),
                                    detail::family_rank(a, b, s, s + m - 1, k),
                                    detail::family_rank(a, b, s, s + m, k - 1),
                                    detail::family_rank(a, b, s, s + m, k)};
                            });
}

/// Joint ranks of the (s-1, s+m-1) block matrix and the variant whose last
/// row is the sum of the two deleted rows.
inline JointRankStats sigma_augmented_row(const ShapeParams& p, const OracleOptions& opts = {}) {
    if (p.s < 2) throw std::invalid_argument("sigma_augmented_row: needs s >= 2");
    detail::check_budget(p.pair_bits(), opts, "sigma_augmented_row");
    const ShapeParams shape = p;
    return detail::tabulate(
        p, StatKind::SigmaAugmented, p.alpha_len(), p.beta_len(), opts,
        [shape](std::uint64_t a, std::uint64_t b) {
            const int s = shape.s, m = shape.m, k = shape.k;
            std::uint64_t rows[64];
            const std::uint64_t mask = low_mask(k);
            int n = 0;
            for (int r = 0; r < s - 1; ++r) rows[n++] = (a >> r) & mask;
            for (int r = 0; r < s + m - 1; ++r) rows[n++] = (b >> r) & mask;
            const int base = detail::rank_inplace(rows, n);
            n = 0;
            for (int r = 0; r < s - 1; ++r) rows[n++] = (a >> r) & mask;
            for (int r = 0; r < s + m - 1; ++r) rows[n++] = (b >> r) & mask;
            rows[n++] = ((a >> (s - 1)) ^ (b >> (s + m - 1))) & mask;
            return std::vector<int>{base, detail::rank_inplace(rows, n)};
        });
}

/// Joint ranks of the (s-1, s+m-1) block matrix and the variant that restores
/// only the last alpha row, counted over the coefficient space that matrix
/// pair actually depends on (one beta coefficient fewer).
inline JointRankStats sigma_alpha_row(const ShapeParams& p, const OracleOptions& opts = {}) {
    if (p.s < 2) throw std::invalid_argument("sigma_alpha_row: needs s >= 2");
    detail::check_budget(p.pair_bits() - 1, opts, "sigma_alpha_row");
    const int s = p.s, m = p.m, k = p.k;
    return detail::tabulate(p, StatKind::SigmaAlphaRow, p.alpha_len(), p.beta_len() - 1, opts,
                            [s, m, k](std::uint64_t a, std::uint64_t b) {
                                return std::vector<int>{
                                    detail::family_rank(a, b, s - 1, s + m - 1, k),
                                    detail::family_rank(a, b, s, s + m - 1, k)};
                            });
}

}  // namespace persymm
