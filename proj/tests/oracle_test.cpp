#include "persymm/oracle.hpp"

#include "persymm/gamma.hpp"

#include <gtest/gtest.h>

namespace persymm {
namespace {

std::vector<BigInt> big(std::vector<long long> v) { return {v.begin(), v.end()}; }

TEST(Oracle, SmallestShape) {
    // 2x1 matrices: rank 1 unless both leading coefficients vanish.
    const RankDistribution d = enumerate_rank_distribution(ShapeParams(1, 0, 1));
    EXPECT_EQ(d.counts, big({1, 3}));
}

TEST(Oracle, ReproducesReferenceTable) {
    const RankDistribution d = enumerate_rank_distribution(ShapeParams(3, 2, 4));
    EXPECT_EQ(d.counts, big({1, 9, 78, 648, 15648}));
}

TEST(Oracle, BudgetRefusal) {
    OracleOptions opts;
    opts.budget_bits = 10;
    EXPECT_THROW(enumerate_rank_distribution(ShapeParams(3, 2, 4), opts), BudgetExceeded);
    EXPECT_THROW(sigma_triples(ShapeParams(3, 2, 4), opts), BudgetExceeded);
}

TEST(Oracle, DeterministicAcrossWorkerCounts) {
    const ShapeParams p(2, 1, 4);
    OracleOptions one{26, 1}, two{26, 2}, three{26, 3};
    const RankDistribution d1 = enumerate_rank_distribution(p, one);
    const RankDistribution d2 = enumerate_rank_distribution(p, two);
    const RankDistribution d3 = enumerate_rank_distribution(p, three);
    EXPECT_EQ(d1.counts, d2.counts);
    EXPECT_EQ(d1.counts, d3.counts);
    EXPECT_EQ(sigma_triples(p, one).table, sigma_triples(p, three).table);
}

TEST(Oracle, SigmaTriplesPartitionAndMarginal) {
    const ShapeParams p(2, 1, 3);
    const JointRankStats stats = sigma_triples(p);
    EXPECT_EQ(stats.total(), pow2(p.pair_bits()));
    // All-zero pair lands on (0,0,0).
    EXPECT_GE(stats.at({0, 0, 0}), 1);
    // Every tuple component respects its submatrix dimensions.
    for (const auto& [key, count] : stats.table) {
        EXPECT_LE(key[0], std::min(p.total_rows() - 2, p.k));
        EXPECT_LE(key[1], std::min(p.total_rows() - 1, p.k));
        EXPECT_LE(key[2], p.rank_bound());
    }
    // Marginal over the two partial ranks reproduces the rank distribution.
    std::vector<BigInt> marginal(static_cast<size_t>(p.rank_bound()) + 1, BigInt(0));
    for (const auto& [key, count] : stats.table) {
        ASSERT_EQ(key.size(), 3u);
        marginal[static_cast<size_t>(key[2])] += count;
    }
    EXPECT_EQ(marginal, gamma_distribution(p).counts);
}

TEST(Oracle, SigmaDiagonalClosedForm) {
    // sigma_{i,i,i} == 4*Gamma_i(square) - Gamma_{i+1}(square) of the reduced
    // family, in every regime the width allows.
    for (const ShapeParams p : {ShapeParams(2, 0, 2), ShapeParams(2, 1, 3), ShapeParams(3, 0, 2)}) {
        const JointRankStats stats = sigma_triples(p);
        const int top = std::min(p.total_rows() - 2, p.k);
        for (int i = 0; i <= top; ++i) {
            BigInt want = 1;
            if (i >= 1) {
                want = 4 * gamma(ShapeParams(p.s - 1, p.m, i), i);
                if (i + 1 <= p.k) want -= gamma(ShapeParams(p.s - 1, p.m, i + 1), i + 1);
            }
            EXPECT_EQ(stats.at({i, i, i}), want) << "s=" << p.s << " m=" << p.m << " k=" << p.k
                                                 << " i=" << i;
        }
    }
}

TEST(Oracle, PartitionSixTupleTotals) {
    const ShapeParams p(2, 0, 3);
    const JointRankStats stats = partition_six_tuple(p);
    EXPECT_EQ(stats.total(), pow2(p.pair_bits()));
    for (const auto& [key, count] : stats.table) {
        ASSERT_EQ(key.size(), 6u);
        // Column growth can only keep or raise a rank by one; row growth too.
        EXPECT_LE(key[0], key[1]);
        EXPECT_LE(key[1], key[0] + 1);
        EXPECT_LE(key[0], key[2]);
        EXPECT_LE(key[4], key[5]);
    }
    EXPECT_THROW(partition_six_tuple(ShapeParams(2, 0, 1)), std::invalid_argument);
}

TEST(Oracle, AugmentedRowStats) {
    const ShapeParams p(2, 1, 3);
    const JointRankStats aug = sigma_augmented_row(p);
    EXPECT_EQ(aug.total(), pow2(p.pair_bits()));
    EXPECT_GE(aug.at({0, 0}), 1);

    // Doubling identity against the alpha-row partition over its own coset
    // space (one beta coefficient fewer).
    const JointRankStats alpha_row = sigma_alpha_row(p);
    EXPECT_EQ(alpha_row.total(), pow2(p.pair_bits() - 1));
    for (int i = 0; i <= p.rank_bound(); ++i)
        EXPECT_EQ(aug.at({i, i}), 2 * alpha_row.at({i, i})) << "i=" << i;
}

TEST(Oracle, RequiresTwoRowBlocks) {
    EXPECT_THROW(sigma_triples(ShapeParams(1, 0, 2)), std::invalid_argument);
    EXPECT_THROW(sigma_augmented_row(ShapeParams(1, 2, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace persymm
