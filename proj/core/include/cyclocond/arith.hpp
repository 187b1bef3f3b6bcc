#pragma once

#include <cstdint>
#include <vector>

namespace cyclocond {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer together with its prime factorization, primes strictly
/// increasing. n = 1 has an empty factor list.
struct Factored {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factored&, const Factored&) = default;
};

/// Deterministic trial-division factorization. Throws DomainError for n = 0.
Factored factor(std::uint64_t n);

bool isPrime(std::uint64_t n);

std::uint64_t eulerPhi(const Factored& f);
std::uint64_t radical(const Factored& f);
unsigned omega(const Factored& f);
int moebius(const Factored& f);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(const Factored& f);

bool isSquarefree(const Factored& f);

// Convenience overloads that factor first.
inline std::uint64_t eulerPhi(std::uint64_t n) { return eulerPhi(factor(n)); }
inline std::uint64_t radical(std::uint64_t n) { return radical(factor(n)); }
inline unsigned omega(std::uint64_t n) { return omega(factor(n)); }
inline int moebius(std::uint64_t n) { return moebius(factor(n)); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace cyclocond
