#include <gtest/gtest.h>

#include <cmath>

#include "cyclocond/bounds.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/errors.hpp"

using namespace cyclocond;

namespace {

double lg(double x) { return std::log10(x); }

double general(std::uint64_t n) { return boundGeneral(factor(n), cyclotomicHeight(n)); }

}  // namespace

TEST(General, DirectSubstitution)
{
    EXPECT_NEAR(general(3), lg(1458), 1e-12);
    EXPECT_NEAR(general(4), lg(4.0 * std::pow(4.0, 5)), 1e-12);
    EXPECT_NEAR(general(15), lg(2.0 * 15 * std::pow(15.0, 8)), 1e-12);
    EXPECT_THROW(boundGeneral(factor(1), 1), DomainError);
}

TEST(General, HugeExponentStaysFinite)
{
    // k = 6: n^(64+6+2) is far beyond double range before the log
    const double v = general(30030);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 300.0);
}

TEST(Corollary, Exponents)
{
    EXPECT_NEAR(boundCorollary(factor(9), 0), 6 * lg(9), 1e-12);
    EXPECT_NEAR(boundCorollary(factor(15), 0), 9 * lg(15), 1e-12);
    EXPECT_NEAR(boundCorollary(factor(105), 1), 15 * lg(105), 1e-12);
    EXPECT_EQ(corollaryHeightExponent(2), 0.0);
    EXPECT_EQ(corollaryHeightExponent(4), 1.0);
    EXPECT_FALSE(corollaryHeightExponent(5).has_value());
}

TEST(Ladder, Prime)
{
    EXPECT_NEAR(boundPrime(3), lg(16), 1e-12);
    EXPECT_NEAR(boundPrime(5), lg(64), 1e-12);
    EXPECT_NEAR(boundPrime(101), lg(40000), 1e-12);
    EXPECT_THROW(boundPrime(2), DomainError);
    EXPECT_THROW(boundPrime(9), DomainError);
}

TEST(Ladder, PrimePower)
{
    EXPECT_NEAR(boundPrimePower(3, 2), lg(48), 1e-12);
    EXPECT_NEAR(boundPrimePower(5, 2), lg(320), 1e-12);
    EXPECT_NEAR(boundPrimePower(3, 3), lg(144), 1e-12);
    EXPECT_THROW(boundPrimePower(3, 1), DomainError);
}

TEST(Ladder, TwoPrimes)
{
    EXPECT_NEAR(boundTwoPrimes(3, 5), lg(2048), 1e-12);
    EXPECT_NEAR(boundTwoPrimes(3, 7), lg(4.0 * 12 * 12 * 12), 1e-12);
    EXPECT_NEAR(boundTwoPrimes(5, 7), lg(4.0 * 24 * 24 * 24), 1e-12);
    EXPECT_THROW(boundTwoPrimes(3, 3), DomainError);
    EXPECT_THROW(boundTwoPrimes(2, 3), DomainError);
}

TEST(Ladder, TwoPrimePowers)
{
    EXPECT_NEAR(boundTwoPrimePowers(factor(45)), lg(2.0 * 8 * 576), 1e-12);
    EXPECT_NEAR(boundTwoPrimePowers(factor(15)), lg(2.0 * 8 * 64), 1e-12);
    EXPECT_NEAR(boundTwoPrimePowers(factor(75)), lg(2.0 * 8 * 1600), 1e-12);
    EXPECT_THROW(boundTwoPrimePowers(factor(30)), DomainError);
}

TEST(Ladder, ThreePrimes)
{
    EXPECT_NEAR(boundThreePrimes(factor(105)), lg(2.0 * std::pow(48.0, 4)), 1e-12);
    EXPECT_NEAR(boundThreePrimes(factor(165)), lg(2.0 * std::pow(80.0, 4)), 1e-12);
    EXPECT_NEAR(boundThreePrimes(factor(231)), lg(2.0 * std::pow(120.0, 4)), 1e-12);
    EXPECT_THROW(boundThreePrimes(factor(315)), DomainError);
}

TEST(Ladder, ThreePrimePowers)
{
    EXPECT_NEAR(boundThreePrimePowers(factor(315)), lg(2.0 * 48 * 48 * 144 * 144), 1e-12);
    EXPECT_NEAR(boundThreePrimePowers(factor(105)), lg(2.0 * std::pow(48.0, 4)), 1e-12);
    EXPECT_NEAR(boundThreePrimePowers(factor(525)), lg(2.0 * 48 * 48 * 240 * 240), 1e-12);
}

TEST(Envelopes, Substitution)
{
    const double x = 16.0;
    EXPECT_NEAR(batemanEnvelope(16, 0.1), std::pow(x, 1.1 * std::log(2.0) / std::log(std::log(x))) / std::log(10.0),
                1e-12);
    EXPECT_TRUE(std::isfinite(batemanEnvelope(100000, 0.1)));
    EXPECT_TRUE(std::isfinite(batemanEnvelope(3, 0.1)));
    EXPECT_THROW(batemanEnvelope(2, 0.1), DomainError);

    const double y = 100.0;
    const double ll = std::log(std::log(y));
    const double t = std::pow(y, 1.0 / ll);
    EXPECT_NEAR(subexpEnvelope(100), (t + std::log(y) / ll + 3.0) * 2.0 + t / std::log(10.0), 1e-9);
    EXPECT_TRUE(std::isfinite(subexpEnvelope(10)));
    EXPECT_TRUE(std::isfinite(subexpEnvelope(3)));
    EXPECT_THROW(subexpEnvelope(2), DomainError);
}

TEST(WireIds, RoundTrip)
{
    for (BoundId id : kAllBounds)
        EXPECT_EQ(parseBoundWireId(boundWireId(id)), id);
    EXPECT_EQ(boundWireId(BoundId::General), "THM_3_10");
    EXPECT_EQ(boundWireId(BoundId::SubexponentialEnvelope), "SUBEXP_5_6_ENVELOPE");
    EXPECT_FALSE(parseBoundWireId("NOPE").has_value());
}

TEST(Tightest, NinePicksPrimePower)
{
    const CondReport r = conditionNumber(9, PrecisionContext(128));
    const BoundSet s = tightestBound(factor(9), cyclotomic(9), r);
    EXPECT_EQ(s.tightestApplicable, BoundId::PrimePower);
    EXPECT_NEAR(*s.tightestLog10, lg(48), 1e-12);
    EXPECT_TRUE(s.violations.empty());
    EXPECT_GT(*s.marginLog10, 0.0);
}

TEST(Tightest, EightOnlyGeneral)
{
    const CondReport r = conditionNumber(8, PrecisionContext(128));
    const BoundSet s = tightestBound(factor(8), cyclotomic(8), r);
    EXPECT_EQ(s.tightestApplicable, BoundId::General);
    EXPECT_NEAR(*s.condLog10, lg(4), 1e-15);
    for (const auto& e : s.entries)
        if (e.id != BoundId::General)
            EXPECT_FALSE(e.applicable) << boundWireId(e.id);
}

TEST(Tightest, TieBreaksByDeclarationOrder)
{
    const BoundSet s = evaluateBounds(factor(105), 2, std::nullopt);
    EXPECT_EQ(*s.entry(BoundId::ThreePrimes).log10Value, *s.entry(BoundId::ThreePrimePowers).log10Value);
    EXPECT_EQ(s.tightestApplicable, BoundId::ThreePrimes);
    EXPECT_FALSE(s.marginLog10.has_value());
}

TEST(Tightest, EvenHalfCarriesOddBounds)
{
    const BoundSet s = evaluateBounds(factor(30), 1, 1.0);
    const BoundEntry& e = s.entry(BoundId::TwoPrimes);
    EXPECT_TRUE(e.applicable);
    EXPECT_EQ(e.evaluatedAt, 15u);
    EXPECT_NEAR(*e.log10Value, lg(2048), 1e-12);
    EXPECT_EQ(s.entry(BoundId::General).evaluatedAt, 15u);
    EXPECT_EQ(s.tightestApplicable, BoundId::TwoPrimePowers);
}

TEST(Tightest, AsymptoticNeverApplicable)
{
    const BoundSet s = evaluateBounds(factor(1001), cyclotomicHeight(1001), 2.0);
    for (BoundId id : {BoundId::Corollary, BoundId::BatemanEnvelope, BoundId::SubexponentialEnvelope}) {
        EXPECT_TRUE(s.entry(id).log10Value.has_value());
        EXPECT_FALSE(s.entry(id).applicable);
    }
    EXPECT_TRUE(s.entry(BoundId::ThreePrimes).applicable);
}

TEST(Tightest, ViolationIsRecorded)
{
    // A fabricated cond far above every bound must be itemized, not dropped.
    const BoundSet s = evaluateBounds(factor(15), 1, 100.0);
    EXPECT_FALSE(s.violations.empty());
    EXPECT_LT(*s.marginLog10, 0.0);
}

TEST(EntryBound, HoldsOnSmallRange)
{
    for (std::uint64_t n : {2u, 9u, 12u, 105u, 225u}) {
        const EntryBoundCheck e = entryBoundCheck(n, PrecisionContext(128));
        EXPECT_EQ(e.violationsPlusOne, 0u) << n;
        EXPECT_EQ(e.violationsTwice, 0u) << n;
        EXPECT_GT(e.maxRatioPlusOne, 0.0);
    }
}

TEST(Crossover, Reported)
{
    const EnvelopeCrossover x = subexpCrossover(3, 300);
    EXPECT_EQ(x.from, 3u);
    EXPECT_EQ(x.to, 300u);
    EXPECT_THROW(subexpCrossover(2, 10), DomainError);
}
