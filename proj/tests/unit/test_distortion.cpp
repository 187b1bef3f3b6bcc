#include <gtest/gtest.h>

#include <cmath>

#include "cyclocond/distortion.hpp"
#include "cyclocond/errors.hpp"

using namespace cyclocond;

namespace {

const PrecisionContext kCtx(128);

}  // namespace

TEST(Sampler, Deterministic)
{
    EXPECT_EQ(sampleErrors(8, 3.2, 50, 99), sampleErrors(8, 3.2, 50, 99));
    EXPECT_NE(sampleErrors(8, 3.2, 50, 99), sampleErrors(8, 3.2, 50, 100));
    EXPECT_NE(sampleErrors(8, 3.2, 50, 99, 0), sampleErrors(8, 3.2, 50, 99, 1));
}

TEST(Sampler, PrefixStable)
{
    const auto a = sampleErrors(5, 2.0, 10, 4);
    const auto b = sampleErrors(5, 2.0, 20, 4);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i], b[i]);
}

TEST(Sampler, TinySigmaGivesZeros)
{
    for (const auto& v : sampleErrors(6, 1e-9, 100, 1))
        for (long x : v)
            EXPECT_EQ(x, 0);
}

TEST(Sampler, Variance)
{
    const double sigma = 3.2;
    double sum = 0, sq = 0;
    std::size_t cnt = 0;
    for (const auto& v : sampleErrors(4, sigma, 1000, 2024))
        for (long x : v) {
            sum += x;
            sq += double(x) * x;
            ++cnt;
        }
    const double mean = sum / cnt;
    EXPECT_NEAR(sq / cnt - mean * mean, sigma * sigma, 0.15 * sigma * sigma);
}

TEST(Sampler, Domain)
{
    EXPECT_THROW(sampleErrors(4, 0.0, 1, 0), DomainError);
    EXPECT_THROW(sampleErrors(4, 1.0, 0, 0), DomainError);
}

TEST(Measure, PowerOfTwoRoundTrip)
{
    const DistortionStats s = measureDistortion(8, 3.2, 1000, 7, kCtx);
    EXPECT_LE(s.maxRoundTrip, 4.0);
    EXPECT_NEAR(s.cond, 4.0, 1e-14);
    // V / sqrt(m) is unitary, so every ratio is exactly sqrt(m) or its inverse
    EXPECT_NEAR(s.maxForward, 2.0, 1e-14);
    EXPECT_NEAR(s.maxBackward, 0.5, 1e-14);
    EXPECT_TRUE(s.roundTripWithinCond);
}

TEST(Measure, TrivialConductor)
{
    const DistortionStats s = measureDistortion(1, 3.2, 100, 1, kCtx);
    EXPECT_EQ(s.maxForward, 1.0);
    EXPECT_EQ(s.meanForward, 1.0);
    EXPECT_EQ(s.maxBackward, 1.0);
    EXPECT_EQ(s.maxRoundTrip, 1.0);
}

TEST(Measure, FifteenForwardBelowDegree)
{
    const DistortionStats s = measureDistortion(15, 3.2, 500, 3, kCtx);
    EXPECT_LE(s.maxForward, 8.0);
    EXPECT_TRUE(s.forwardWithinFrobenius);
    EXPECT_TRUE(s.backwardWithinFrobenius);
    EXPECT_LE(s.maxRoundTrip, s.cond);
}

TEST(Measure, ZeroDrawsAreSkipped)
{
    const DistortionStats s = measureDistortion(3, 0.05, 200, 11, kCtx);
    EXPECT_GT(s.skippedZero, 0u);
    EXPECT_EQ(s.sampleCount, 200u);
}

TEST(Measure, ThreadsDoNotChangeResults)
{
    const DistortionStats a = measureDistortion(21, 3.2, 200, 5, kCtx, 1);
    const DistortionStats b = measureDistortion(21, 3.2, 200, 5, kCtx, 4);
    EXPECT_EQ(a.meanForward, b.meanForward);
    EXPECT_EQ(a.maxRoundTrip, b.maxRoundTrip);
}

TEST(Measure, Domain)
{
    EXPECT_THROW(measureDistortion(1001, 3.2, 10, 1, kCtx), DomainError);
    EXPECT_THROW(measureDistortion(0, 3.2, 10, 1, kCtx), DomainError);
}
