#pragma once

#include "persymm/expsums.hpp"
#include "persymm/gamma.hpp"
#include "persymm/oracle.hpp"
#include "persymm/recurrence.hpp"
#include "persymm/solutions.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace persymm {

/// Inclusive parameter ranges and resource limits for a verification sweep.
struct SweepConfig {
    int s_lo = 2, s_hi = 3;
    int m_lo = 0, m_hi = 2;
    int k_lo = 1, k_hi = 6;
    int budget_bits = 26;
    int workers = 0;

    void validate() const {
        if (s_lo < 1 || s_lo > s_hi || m_lo < 0 || m_lo > m_hi || k_lo < 1 || k_lo > k_hi)
            throw std::invalid_argument("SweepConfig: empty or invalid range");
        if (budget_bits < 0 || budget_bits > 30)
            throw std::invalid_argument("SweepConfig: budget_bits must be in [0, 30]");
    }

    template <class Fn>
    void for_each_shape(Fn&& fn) const {
        for (int s = s_lo; s <= s_hi; ++s)
            for (int m = m_lo; m <= m_hi; ++m)
                for (int k = k_lo; k <= k_hi; ++k) fn(ShapeParams(s, m, k));
    }
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

using GammaFn = std::function<BigInt(const ShapeParams&, int)>;

namespace detail {

struct CheckRecorder {
    std::string name;
    bool failed = false;
    int checked = 0;
    int skipped = 0;
    std::string first_failure;

    explicit CheckRecorder(std::string name_) : name(std::move(name_)) {}

    void pass() { ++checked; }
    void skip() { ++skipped; }

    template <class A, class B>
    void expect_eq(const A& lhs, const B& rhs, const std::string& where) {
        ++checked;
        if (lhs == rhs) return;
        if (!failed) {
            std::ostringstream os;
            os << where << ": " << lhs << " != " << rhs;
            first_failure = os.str();
        }
        failed = true;
    }

    CheckResult result() const {
        if (failed) return {name, CheckStatus::Fail, first_failure};
        std::ostringstream os;
        os << checked << " comparisons";
        if (skipped > 0) os << ", " << skipped << " skipped (budget)";
        if (checked == 0) return {name, CheckStatus::Skip, os.str()};
        return {name, CheckStatus::Pass, os.str()};
    }
};

inline std::string shape_str(const ShapeParams& p) {
    std::ostringstream os;
    os << "s=" << p.s << " m=" << p.m << " k=" << p.k;
    return os.str();
}

inline std::string shape_str(const ShapeParams& p, int i) {
    std::ostringstream os;
    os << shape_str(p) << " i=" << i;
    return os.str();
}

}  // namespace detail

/// Runs the full invariant suite over the configured sweep. gamma_fn defaults
/// to the closed-form tables; tests may inject a wrapper to prove that a
/// corrupted table is detected and cited.
inline std::vector<CheckResult> run_verification(const SweepConfig& cfg, GammaFn gamma_fn = {}) {
    cfg.validate();
    if (!gamma_fn) gamma_fn = [](const ShapeParams& p, int i) { return gamma(p, i); };
    const OracleOptions oracle_opts{cfg.budget_bits, cfg.workers};
    std::vector<CheckResult> results;

    auto fn_distribution = [&gamma_fn](const ShapeParams& p) {
        RankDistribution d{p, {}};
        for (int i = 0; i <= p.rank_bound(); ++i) d.counts.push_back(gamma_fn(p, i));
        return d;
    };

    {  // Both linear moment constraints on the closed-form distribution.
        detail::CheckRecorder rec("moment-identities");
        cfg.for_each_shape([&](const ShapeParams& p) {
            rec.expect_eq(moments_hold(fn_distribution(p)), true, detail::shape_str(p));
        });
        results.push_back(rec.result());
    }

    {  // Closed form vs recurrence vs reduction, wherever each is defined.
        detail::CheckRecorder rec("three-path-gamma");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.s < 2) return;
            for (int i = 0; i <= p.rank_bound(); ++i) {
                rec.expect_eq(gamma_fn(p, i), gamma_via_recurrence(p, i),
                              "recurrence " + detail::shape_str(p, i));
                if (i >= p.s + 1)
                    rec.expect_eq(gamma_fn(p, i), gamma_via_reduction(p, i),
                                  "reduction " + detail::shape_str(p, i));
            }
        });
        results.push_back(rec.result());
    }

    {  // The closed-form remainder must not depend on widths beyond i+1.
        detail::CheckRecorder rec("delta-k-independence");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.s < 2) return;
            for (int i = 0; i <= p.total_rows(); ++i) {
                const int k_ref = std::max(1, i >= p.total_rows() - 2 ? i : i + 1);
                if (p.k < k_ref) continue;
                rec.expect_eq(delta_remainder(p, i),
                              delta_remainder(ShapeParams(p.s, p.m, k_ref), i),
                              detail::shape_str(p, i));
            }
        });
        results.push_back(rec.result());
    }

    {  // Master property: exhaustive enumeration equals the closed form.
        detail::CheckRecorder rec("oracle-gamma-equality");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.pair_bits() > cfg.budget_bits) {
                rec.skip();
                return;
            }
            const RankDistribution lhs = enumerate_rank_distribution(p, oracle_opts);
            const RankDistribution rhs = fn_distribution(p);
            for (int i = 0; i <= p.rank_bound(); ++i)
                rec.expect_eq(lhs.counts[static_cast<size_t>(i)], rhs.counts[static_cast<size_t>(i)],
                              detail::shape_str(p, i));
        });
        results.push_back(rec.result());
    }

    {  // Zero-pattern and partition identities on the enumerated tables.
        detail::CheckRecorder rec("partition-rank-identities");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.s < 2 || p.k < 2) return;
            if (p.pair_bits() > cfg.budget_bits) {
                rec.skip();
                return;
            }
            const JointRankStats six = partition_six_tuple(p, oracle_opts);
            const int jmax = std::min(p.total_rows() - 2, p.k - 1);
            for (int j = 0; j <= jmax; ++j) {
                rec.expect_eq(six.at({j, j, j, j, j, j}), six.at({j, j, j, j, j, j + 1}),
                              "equal-growth " + detail::shape_str(p, j));
                rec.expect_eq(six.at({j, j, j, j, j, j}) + six.at({j, j, j, j, j, j + 1}),
                              six.at({j, j, j, j + 1, j, j + 1}),
                              "split-growth " + detail::shape_str(p, j));
            }
            for (int j = 0; j <= std::min(p.total_rows() - 3, p.k - 2); ++j)
                rec.expect_eq(six.at({j, j + 1, j, j + 1, j, j + 1}), BigInt(0),
                              "zero-pattern " + detail::shape_str(p, j));
            // Four-row marginal: growth of the full family is independent of
            // the smaller blocks' joint value.
            std::map<std::vector<int>, BigInt> marg;
            for (const auto& [key, count] : six.table)
                marg[{key[2], key[3], key[4], key[5]}] += count;
            for (int j = 0; j <= std::min(p.total_rows() - 1, p.k - 1); ++j) {
                auto get = [&marg](std::vector<int> key) {
                    auto it = marg.find(key);
                    return it == marg.end() ? BigInt(0) : it->second;
                };
                rec.expect_eq(get({j, j, j, j}), get({j, j, j, j + 1}),
                              "four-row " + detail::shape_str(p, j));
            }
            // Doubling of the summed-last-row diagonal.
            const JointRankStats aug = sigma_augmented_row(p, oracle_opts);
            const JointRankStats alpha_row = sigma_alpha_row(p, oracle_opts);
            for (int i = 0; i <= std::min(p.total_rows() - 1, p.k); ++i)
                rec.expect_eq(aug.at({i, i}), 2 * alpha_row.at({i, i}),
                              "sum-row-doubling " + detail::shape_str(p, i));
        });
        results.push_back(rec.result());
    }

    {  // Every character sum against its rank formula, pointwise.
        detail::CheckRecorder rec("expsum-equivalence");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.s < 2 || p.k < 2) return;
            if (p.pair_bits() > std::min(cfg.budget_bits, 12)) {
                rec.skip();
                return;
            }
            const std::uint64_t acount = std::uint64_t{1} << p.alpha_len();
            const std::uint64_t bcount = std::uint64_t{1} << p.beta_len();
            for (std::uint64_t b = 0; b < bcount && !rec.failed; ++b)
                for (std::uint64_t a = 0; a < acount && !rec.failed; ++a) {
                    const CoefficientPair c{a, b};
                    for (SumTag tag : kAllSumTags)
                        rec.expect_eq(exp_sum_direct(tag, p, c), exp_sum_rank_formula(tag, p, c),
                                      std::string(sum_tag_name(tag)) + " " + detail::shape_str(p) +
                                          " alpha=" + std::to_string(a) + " beta=" + std::to_string(b));
                }
        });
        results.push_back(rec.result());
    }

    {  // Formula vs exhaustive solution count for small systems.
        detail::CheckRecorder rec("solution-count-agreement");
        cfg.for_each_shape([&](const ShapeParams& p) {
            for (int q = 1; q <= 2; ++q) {
                if (q * (p.total_rows() + p.k) > std::min(cfg.budget_bits, 24)) {
                    rec.skip();
                    continue;
                }
                const SolutionCountQuery query(q, p);
                rec.expect_eq(count_solutions_formula(query),
                              count_solutions_bruteforce(query, 24, cfg.workers),
                              "q=" + std::to_string(q) + " " + detail::shape_str(p));
            }
        });
        results.push_back(rec.result());
    }

    {  // Width-increment differences against their closed form.
        detail::CheckRecorder rec("difference-telescoping");
        cfg.for_each_shape([&](const ShapeParams& p) {
            if (p.s < 2) return;
            const ShapeParams wider(p.s, p.m, p.k + 1);
            for (int i = 0; i <= p.total_rows(); ++i) {
                if (p.k <= i) continue;  // out of regime
                rec.expect_eq(gamma_fn(wider, i) - gamma_fn(p, i), gamma_difference(p, i),
                              detail::shape_str(p, i));
            }
        });
        results.push_back(rec.result());
    }

    {  // Fraction of invertible square matrices is exactly 3/8.
        detail::CheckRecorder rec("invertibility-fraction");
        for (int s = std::max(cfg.s_lo, 2); s <= cfg.s_hi; ++s)
            for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
                const int n = 2 * s + m;
                const ShapeParams p(s, m, n);
                rec.expect_eq(8 * gamma_fn(p, n), 3 * pow2(p.pair_bits()), detail::shape_str(p, n));
            }
        results.push_back(rec.result());
    }

    return results;
}

}  // namespace persymm
