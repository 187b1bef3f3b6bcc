#include <gtest/gtest.h>

#include "cyclocond/arith.hpp"
#include "cyclocond/bounds.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/distortion.hpp"
#include "cyclocond/vandermonde.hpp"
#include "gen.hpp"

using namespace cyclocond;

namespace {

IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return IntPoly(std::move(out));
}

IntPoly substitute(const IntPoly& p, std::uint64_t s, bool negate)
{
    std::vector<BigInt> out((p.size() - 1) * s + 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i * s] = (negate && i % 2 == 1) ? BigInt(-p[i]) : p[i];
    return IntPoly(std::move(out));
}

}  // namespace

TEST(Property, PhiMultiplicative)
{
    Gen g(1);
    for (int t = 0; t < 2000; ++t) {
        const std::uint64_t a = g.uniform(1, 10000);
        const std::uint64_t b = g.coprimeTo(a, 1, 10000);
        ASSERT_EQ(eulerPhi(a * b), eulerPhi(a) * eulerPhi(b)) << a << " " << b;
    }
}

TEST(Property, DivisorSums)
{
    Gen g(2);
    for (int t = 0; t < 500; ++t) {
        const std::uint64_t n = g.uniform(2, 10000);
        std::uint64_t phiSum = 0;
        long muSum = 0;
        for (std::uint64_t d : divisors(factor(n))) {
            phiSum += eulerPhi(d);
            muSum += moebius(d);
        }
        ASSERT_EQ(phiSum, n);
        ASSERT_EQ(muSum, 0);
    }
}

TEST(Property, ProductOfCyclotomicsIsBinomial)
{
    Gen g(3);
    for (int t = 0; t < 40; ++t) {
        const std::uint64_t n = g.uniform(1, 400);
        IntPoly prod({1});
        for (std::uint64_t d : divisors(factor(n)))
            prod = multiply(prod, cyclotomic(d).poly);
        std::vector<BigInt> expect(n + 1, BigInt(0));
        expect.front() = -1;
        expect.back() = 1;
        ASSERT_EQ(prod, IntPoly(std::move(expect))) << n;
    }
}

TEST(Property, PalindromicDegreeAndValueAtOne)
{
    Gen g(4);
    for (int t = 0; t < 300; ++t) {
        const std::uint64_t n = g.uniform(2, 30000);
        const CycloData c = cyclotomic(n);
        ASSERT_EQ(c.poly.degree(), static_cast<int>(eulerPhi(n)));
        for (std::size_t i = 0; i <= c.m; ++i)
            ASSERT_EQ(c.poly[i], c.poly[c.m - i]) << n;
        const Factored f = factor(n);
        const BigInt at1 = c.poly.evaluate(1);
        ASSERT_EQ(at1, f.factors.size() == 1 ? BigInt(static_cast<unsigned long>(f.factors[0].prime)) : BigInt(1))
            << n;
    }
}

TEST(Property, StretchAndSignRelations)
{
    Gen g(5);
    for (int t = 0; t < 60; ++t) {
        const std::uint64_t u = g.oddSquarefree(3, 999);
        ASSERT_EQ(cyclotomic(2 * u).poly, substitute(cyclotomic(u).poly, 1, true)) << u;
        const std::uint64_t p = factor(u).factors.front().prime;
        ASSERT_EQ(cyclotomic(u * p).poly, substitute(cyclotomic(u).poly, p, false)) << u;
    }
}

TEST(Property, HeightOfRadical)
{
    Gen g(6);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t n = g.uniform(2, 20000);
        ASSERT_EQ(cyclotomicOracle(n).maxAbsCoeff(), cyclotomic(radical(n)).height) << n;
    }
}

TEST(Property, CondAtLeastDegreeAndStable)
{
    Gen g(7);
    for (int t = 0; t < 40; ++t) {
        const std::uint64_t n = g.uniform(3, 600);
        const CondReport a = conditionNumber(n, PrecisionContext(128));
        const CondReport b = conditionNumber(n, PrecisionContext(256));
        // ||V||_F ||V^-1||_F >= trace(I) = m
        ASSERT_GE(a.cond.toDouble(), static_cast<double>(a.m) * (1 - 1e-15)) << n;
        ASSERT_NEAR(a.cond.toDouble() / b.cond.toDouble(), 1.0, 1e-15) << n;
        ASSERT_NEAR(a.frobV.toDouble(), static_cast<double>(a.m), 1e-25) << n;
    }
}

TEST(Property, ClosedFormInverse)
{
    Gen g(8);
    const PrecisionContext ctx(128);
    for (int t = 0; t < 15; ++t) {
        const std::uint64_t n = g.uniform(2, 150);
        const RootList r = primitiveRoots(n, ctx);
        const CMatrix v = buildV(r);
        const CMatrix w = inverseClosedForm(cyclotomic(n), r);
        ASSERT_LT(frobNorm(v * w - CMatrix::identity(r.size(), 128)).toDouble(), 1e-28) << n;
    }
}

TEST(Property, TightestNeverAboveGeneral)
{
    Gen g(9);
    for (int t = 0; t < 300; ++t) {
        const std::uint64_t n = g.uniform(2, 100000);
        const Factored f = factor(n);
        const BoundSet s = evaluateBounds(f, cyclotomicHeight(n), std::nullopt);
        ASSERT_EQ(s.entries.size(), kAllBounds.size());
        for (std::size_t i = 0; i < s.entries.size(); ++i)
            ASSERT_EQ(s.entries[i].id, kAllBounds[i]);
        ASSERT_TRUE(s.entry(BoundId::General).applicable);
        ASSERT_LE(*s.tightestLog10, *s.entry(BoundId::General).log10Value);
        const std::uint64_t u = n % 4 == 2 ? n / 2 : n;
        const Factored fu = factor(u);
        const bool oddShape = u % 2 == 1 && fu.factors.size() <= 3;
        bool anyLadder = false;
        for (BoundId id : {BoundId::Prime, BoundId::PrimePower, BoundId::TwoPrimes, BoundId::TwoPrimePowers,
                           BoundId::ThreePrimes, BoundId::ThreePrimePowers})
            anyLadder = anyLadder || s.entry(id).applicable;
        ASSERT_EQ(anyLadder, oddShape && u > 1) << n;
    }
}

TEST(Property, PrimePowerBelowGeneral)
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 101u})
        for (unsigned l = 2; l <= 4; ++l) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < l; ++i)
                q *= p;
            EXPECT_LT(boundPrimePower(p, l), boundGeneral(factor(q), 1));
        }
}

TEST(Property, DistortionDeterministicPerSeed)
{
    Gen g(10);
    for (int t = 0; t < 5; ++t) {
        const std::uint64_t n = g.uniform(1, 60);
        const std::uint64_t seed = g.uniform(0, ~0ULL);
        const DistortionStats a = measureDistortion(n, 2.5, 100, seed, PrecisionContext(128));
        const DistortionStats b = measureDistortion(n, 2.5, 100, seed, PrecisionContext(128));
        ASSERT_EQ(a.maxRoundTrip, b.maxRoundTrip);
        ASSERT_EQ(a.meanBackward, b.meanBackward);
        ASSERT_TRUE(a.roundTripWithinCond) << n;
        ASSERT_TRUE(a.forwardWithinFrobenius) << n;
        ASSERT_TRUE(a.backwardWithinFrobenius) << n;
    }
}
