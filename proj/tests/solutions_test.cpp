#include "persymm/solutions.hpp"

#include <gtest/gtest.h>

namespace persymm {
namespace {

TEST(SolutionCount, SingleTermClosedForm) {
    // One term: either Y = 0 with Z, U free, or Y != 0 forcing Z = U = 0.
    for (int s = 1; s <= 4; ++s)
        for (int m = 0; m <= 3; ++m)
            for (int k = 1; k <= 5; ++k) {
                const SolutionCountQuery query(1, ShapeParams(s, m, k));
                const BigInt want = pow2(2 * s + m) + pow2(k) - 1;
                EXPECT_EQ(count_solutions_formula(query), want);
                if (2 * s + m + k <= 24) {
                    EXPECT_EQ(count_solutions_bruteforce(query), want)
                        << "s=" << s << " m=" << m << " k=" << k;
                }
            }
}

TEST(SolutionCount, ReferenceValues) {
    EXPECT_EQ(count_solutions_formula(SolutionCountQuery(3, ShapeParams(3, 2, 4))), 35356672);
    EXPECT_EQ(count_solutions_formula(SolutionCountQuery(4, ShapeParams(5, 0, 6))),
              BigInt(37014016) * pow2(20));
}

TEST(SolutionCount, TwoTermBruteForceAgreement) {
    const SolutionCountQuery query(2, ShapeParams(2, 0, 2));
    EXPECT_EQ(count_solutions_formula(query), 424);
    EXPECT_EQ(count_solutions_bruteforce(query), 424);
}

TEST(SolutionCount, BruteForceMatchesFormulaOnSmallQueries) {
    const std::vector<ShapeParams> shapes = {ShapeParams(2, 0, 1), ShapeParams(2, 0, 2),
                                             ShapeParams(2, 1, 1), ShapeParams(2, 1, 2),
                                             ShapeParams(3, 0, 2)};
    for (int q = 1; q <= 2; ++q)
        for (const ShapeParams& p : shapes) {
            const SolutionCountQuery query(q, p);
            EXPECT_EQ(count_solutions_bruteforce(query), count_solutions_formula(query))
                << "q=" << q << " s=" << p.s << " m=" << p.m << " k=" << p.k;
        }
    const SolutionCountQuery q3(3, ShapeParams(2, 0, 1));
    EXPECT_EQ(count_solutions_bruteforce(q3), count_solutions_formula(q3));
}

TEST(SolutionCount, MonotoneInEveryParameter) {
    auto count = [](int q, int s, int m, int k) {
        return count_solutions_formula(SolutionCountQuery(q, ShapeParams(s, m, k)));
    };
    for (int q = 1; q <= 3; ++q)
        for (int s = 1; s <= 3; ++s)
            for (int m = 0; m <= 2; ++m)
                for (int k = 1; k <= 4; ++k) {
                    EXPECT_LE(count(q, s, m, k), count(q + 1, s, m, k));
                    EXPECT_LE(count(q, s, m, k), count(q, s + 1, m, k));
                    EXPECT_LE(count(q, s, m, k), count(q, s, m + 1, k));
                    EXPECT_LE(count(q, s, m, k), count(q, s, m, k + 1));
                }
}

TEST(SolutionCount, BudgetRefusalAndDeterminism) {
    EXPECT_THROW(count_solutions_bruteforce(SolutionCountQuery(4, ShapeParams(4, 3, 8))),
                 BudgetExceeded);
    const SolutionCountQuery query(2, ShapeParams(2, 1, 2));
    EXPECT_EQ(count_solutions_bruteforce(query, 24, 1), count_solutions_bruteforce(query, 24, 3));
}

TEST(SolutionCount, RejectsBadQuery) {
    EXPECT_THROW(SolutionCountQuery(0, ShapeParams(2, 0, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace persymm
