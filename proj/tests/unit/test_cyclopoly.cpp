#include <gtest/gtest.h>

#include "cyclocond/arith.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/errors.hpp"

using namespace cyclocond;

TEST(Cyclotomic, SmallClosedForms)
{
    EXPECT_EQ(cyclotomic(1).poly, IntPoly({-1, 1}));
    EXPECT_EQ(cyclotomic(2).poly, IntPoly({1, 1}));
    EXPECT_EQ(cyclotomic(4).poly, IntPoly({1, 0, 1}));
    EXPECT_EQ(cyclotomic(6).poly, IntPoly({1, -1, 1}));
    EXPECT_EQ(cyclotomic(9).poly, IntPoly({1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(cyclotomic(12).poly, IntPoly({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic(30).poly, IntPoly({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST(Cyclotomic, OneHundredFive)
{
    const CycloData c = cyclotomic(105);
    EXPECT_EQ(c.m, 48u);
    EXPECT_EQ(c.height, 2);
    EXPECT_EQ(c.poly.coeff(7), -2);
    EXPECT_EQ(c.poly.coeff(41), -2);
    int minusTwo = 0;
    for (const auto& a : c.poly.coeffs())
        minusTwo += a == -2;
    EXPECT_EQ(minusTwo, 2);
}

// Record heights, computed by a separate exact Moebius-product routine.
TEST(Cyclotomic, RecordHeights)
{
    const std::pair<std::uint64_t, long> records[] = {
        {105, 2},    {385, 3},     {1365, 4},    {1785, 5},    {2805, 6},    {3135, 7},   {6545, 9},
        {10465, 14}, {11305, 23},  {17255, 25},  {20615, 27},  {26565, 59},  {40755, 359},
    };
    for (const auto& [n, a] : records) {
        EXPECT_EQ(cyclotomicHeight(n), a) << "n=" << n;
        EXPECT_EQ(cyclotomic(n).height, a) << "n=" << n;
    }
}

TEST(Cyclotomic, HeightIgnoresStretchAndEvenPart)
{
    EXPECT_EQ(cyclotomicHeight(105 * 105), 2);
    EXPECT_EQ(cyclotomicHeight(210), 2);
    EXPECT_EQ(cyclotomicHeight(4 * 385), 3);
}

TEST(Cyclotomic, RejectsOutOfRange)
{
    EXPECT_THROW(cyclotomic(0), DomainError);
    EXPECT_THROW(cyclotomic(kMaxCyclotomicConductor + 1), DomainError);
    EXPECT_THROW(cyclotomicOracle(kMaxOracleConductor + 1), DomainError);
}

TEST(Oracle, MatchesMainPathOnAMixedRange)
{
    for (std::uint64_t n = 1; n <= 600; ++n)
        ASSERT_EQ(cyclotomic(n).poly, cyclotomicOracle(n)) << "n=" << n;
    for (std::uint64_t n : {1155u, 2310u, 4095u, 15015u})
        ASSERT_EQ(cyclotomic(n).poly, cyclotomicOracle(n)) << "n=" << n;
}

TEST(PrimePowerClosedForm, Examples)
{
    EXPECT_EQ(primePowerClosedForm(2, 1), IntPoly({1, 1}));
    EXPECT_EQ(primePowerClosedForm(2, 3), IntPoly({1, 0, 0, 0, 1}));
    EXPECT_EQ(primePowerClosedForm(3, 2), IntPoly({1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(primePowerClosedForm(5, 1), IntPoly({1, 1, 1, 1, 1}));
    EXPECT_THROW(primePowerClosedForm(6, 1), DomainError);
    EXPECT_THROW(primePowerClosedForm(3, 0), DomainError);
}

TEST(ExactDivision, SmallAndBigAgree)
{
    // (x^6 - 1) / (x^2 - x + 1) over both routes
    const std::vector<std::int64_t> a = {-1, 0, 0, 0, 0, 0, 1};
    const std::vector<std::int64_t> b = {1, -1, 1};
    const auto q = detail::divideExactSmall(a, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, (std::vector<std::int64_t>{-1, -1, 0, 1, 1}));
    const auto qb = detail::divideExactBig({-1, 0, 0, 0, 0, 0, 1}, {1, -1, 1});
    ASSERT_EQ(qb.size(), 5u);
    for (std::size_t i = 0; i < qb.size(); ++i)
        EXPECT_EQ(qb[i], (*q)[i]);
}

TEST(ExactDivision, NonzeroRemainderIsAnInconsistency)
{
    EXPECT_THROW(detail::divideExactSmall({1, 0, 1}, {1, 1}), InconsistencyError);
    EXPECT_THROW(detail::divideExactBig({1, 0, 1}, {1, 1}), InconsistencyError);
}

TEST(ExactDivision, SmallPathDeclinesNearOverflow)
{
    const std::int64_t big = std::int64_t{1} << 61;
    const auto q = detail::divideExactSmall({big, big, big, big}, {1, 1});
    if (q) {
        const auto qb = detail::divideExactBig({BigInt(big), BigInt(big), BigInt(big), BigInt(big)}, {1, 1});
        for (std::size_t i = 0; i < qb.size(); ++i)
            EXPECT_EQ(qb[i], (*q)[i]);
    }
}

TEST(IntPoly, Basics)
{
    const IntPoly p({1, -3, 0, 2});
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.derivative(), IntPoly({-3, 0, 6}));
    EXPECT_EQ(p.maxAbsCoeff(), 3);
    EXPECT_EQ(p.evaluate(2), 11);
    EXPECT_EQ(IntPoly({0, 0}).degree(), -1);
}
