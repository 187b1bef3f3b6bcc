#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclocond/mp.hpp"
#include "cyclocond/numerics.hpp"

namespace cyclocond {

inline constexpr std::string_view kDistortionGenerator = "splitmix64+box-muller";
inline constexpr std::string_view kDistortionDistribution = "rounded-gaussian";
inline constexpr std::uint64_t kMaxDistortionConductor = 1000;

/// Counter-based SplitMix64: stream s of seed k starts from an independent
/// state, so any sample can be regenerated without replaying the others.
class SplitMix64 {
public:
    SplitMix64(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    /// Uniform in (0, 1].
    double uniform();

private:
    std::uint64_t state_;
};

/// `count` integer vectors of length m, each entry round(sigma * N(0,1)).
/// Vector i of `stream` depends only on (seed, stream, i).
std::vector<std::vector<long>> sampleErrors(std::uint64_t m, double sigma, std::uint64_t count,
                                            std::uint64_t seed, std::uint64_t stream = 0);

struct DistortionStats {
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    std::uint64_t sampleCount = 0;
    /// Draws that came out all-zero and were left out of the ratios.
    std::uint64_t skippedZero = 0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    unsigned bits = 0;

    double meanForward = 0.0;
    double maxForward = 0.0;
    double meanBackward = 0.0;
    double maxBackward = 0.0;
    double maxRoundTrip = 0.0;

    double frobV = 0.0;
    double frobVinv = 0.0;
    double cond = 0.0;

    // Invariants, decided at working precision.
    bool forwardWithinFrobenius = true;
    bool backwardWithinFrobenius = true;
    bool roundTripWithinCond = true;
};

/// Forward ratios ||V a|| / ||a|| over coordinate-space draws a; backward
/// ratios ||V^{-1} b|| / ||b|| with b = V a' for a second batch a'; the
/// round trip of pair i is forward_i * backward_i. 1 <= n <= 1000.
DistortionStats measureDistortion(std::uint64_t n, double sigma, std::uint64_t count, std::uint64_t seed,
                                  const PrecisionContext& ctx, unsigned threads = 1);

}  // namespace cyclocond
