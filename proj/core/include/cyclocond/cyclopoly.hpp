#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclocond/int_poly.hpp"

namespace cyclocond {

inline constexpr std::uint64_t kMaxCyclotomicConductor = 1'000'000;
inline constexpr std::uint64_t kMaxOracleConductor = 100'000;

/// The n-th cyclotomic polynomial with its degree m = phi(n) and height
/// A(n) = max |coefficient|.
struct CycloData {
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    IntPoly poly;
    BigInt height;
};

/// Exact Phi_n for 1 <= n <= 10^6.
///
/// The radical R of n is computed first and expanded back with x -> x^(n/R).
/// An even radical 2u (u odd, u > 1) is obtained from Phi_u(-x). Odd
/// squarefree radicals are assembled one prime at a time, largest prime
/// last, via the exact division Phi_{rp}(x) = Phi_r(x^p) / Phi_r(x).
/// Odd squarefree intermediates are memoized in a bounded, thread-safe cache.
CycloData cyclotomic(std::uint64_t n);

/// Independent route: Phi_n = prod_{d | n} (x^{n/d} - 1)^{mu(d)}, all
/// multiplications first, then exact divisions. Any nonzero remainder raises
/// InconsistencyError. Valid for 1 <= n <= 10^5.
IntPoly cyclotomicOracle(std::uint64_t n);

/// Closed form of Phi_{p^k}: x^(2^(k-1)) + 1 for p = 2 (x + 1 when k = 1),
/// sum_{i<p} x^(i p^(k-1)) for odd p.
IntPoly primePowerClosedForm(std::uint64_t p, unsigned k);

BigInt heightA(const CycloData& c);

/// A(n) without materializing Phi_n: A(n) equals the height of the odd
/// squarefree kernel of n. Memoized.
BigInt cyclotomicHeight(std::uint64_t n);

/// Drops every memoized polynomial and height.
void clearCyclotomicCache();

namespace detail {

/// Ascending-power exact division in 64-bit arithmetic. Returns nullopt when
/// an intermediate could leave the safe range; throws InconsistencyError on
/// a nonzero remainder.
std::optional<std::vector<std::int64_t>> divideExactSmall(const std::vector<std::int64_t>& dividend,
                                                          const std::vector<std::int64_t>& divisor);

/// Same contract with arbitrary-precision coefficients.
std::vector<BigInt> divideExactBig(const std::vector<BigInt>& dividend,
                                   const std::vector<BigInt>& divisor);

}  // namespace detail

}  // namespace cyclocond
