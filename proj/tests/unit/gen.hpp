#pragma once

#include <cstdint>
#include <random>

#include "cyclocond/arith.hpp"

// Deterministic draws for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    std::uint64_t oddSquarefree(std::uint64_t lo, std::uint64_t hi)
    {
        for (;;) {
            const std::uint64_t n = uniform(lo, hi) | 1;
            if (n <= hi && cyclocond::isSquarefree(cyclocond::factor(n)))
                return n;
        }
    }

    std::uint64_t coprimeTo(std::uint64_t a, std::uint64_t lo, std::uint64_t hi)
    {
        for (;;) {
            const std::uint64_t b = uniform(lo, hi);
            if (cyclocond::gcd(a, b) == 1)
                return b;
        }
    }

private:
    std::mt19937_64 rng_;
};
