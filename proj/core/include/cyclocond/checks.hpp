#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocond/numerics.hpp"

namespace cyclocond {

/// Outcome of one invariant over a range of cases.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::uint64_t failureCount = 0;
    /// First few failures, itemized.
    std::vector<std::string> failures{};
    std::string summary{};

    void fail(std::string detail);
};

inline constexpr std::size_t kMaxListedFailures = 25;

// arith
CheckResult checkFactorization(std::uint64_t limit);
CheckResult checkPhiMultiplicative(std::uint64_t limit);
CheckResult checkDivisorSums(std::uint64_t limit);
CheckResult checkRadical(std::uint64_t limit);

// poly
CheckResult checkOracleEquivalence(std::uint64_t limit);
CheckResult checkPrimePowerClosedForm(std::uint64_t limit);
/// A(n) = A(rad n): the oracle's Phi_n against the main path's Phi_rad(n)
/// for every non-squarefree n <= limit.
CheckResult checkHeightRadical(std::uint64_t limit);
/// A(n) <= 1 when the odd part of n has at most two distinct primes.
CheckResult checkHeightSmallOmega(std::uint64_t limit);
CheckResult checkHeight105();
/// A(n) <= n^(2^(k-1)) for squarefree n.
CheckResult checkBatemanHeight(std::uint64_t limit);
/// A(pqr) <= p - 1 for odd primes p < q < r.
CheckResult checkBangHeight(std::uint64_t limit);

// inverse
/// cond = phi(n) within 1e-9 and ||V V* - m I|| <= 1e-9 m for n = 2^k.
CheckResult checkPowerOfTwoIsometry(unsigned maxExponent, const PrecisionContext& ctx);
/// Full n-th roots Vandermonde has cond = n within 1e-9.
CheckResult checkFullRoots(std::uint64_t limit, const PrecisionContext& ctx);
/// Closed-form inverse against LU, entrywise within 1e-8 ||V^-1||, and
/// ||V V^-1 - I|| <= 1e-10 m. Entry (i, j) of V V^-1 is the j-th Lagrange
/// polynomial at node i, so the product is also held to delta_ij within
/// 1e-10 entrywise.
CheckResult checkClosedFormVsLU(std::uint64_t limit, const PrecisionContext& ctx);
/// Full symmetric functions from Phi_n against the deflated ones.
CheckResult checkSymmetricIdentities(std::uint64_t limit, const PrecisionContext& ctx);
/// |e_(m-k)(deflated at zeta_j)| <= (k-1) A(n) + 1.
CheckResult checkNumeratorBound(std::uint64_t limit, const PrecisionContext& ctx);
/// 1 / |Phi_n'(zeta_j)| <= n^(2^k+k) for squarefree n.
CheckResult checkDerivativeBound(std::uint64_t limit, const PrecisionContext& ctx);
/// Horner, radical-chain and divisor-product derivatives agree.
CheckResult checkDerivativeMethods(std::uint64_t limit, const PrecisionContext& ctx);
/// Real-subfield cond exceeds 2^(phi(n)/2 - 1).
CheckResult checkRealSubfield(const std::vector<std::uint64_t>& conductors, const PrecisionContext& ctx);

// bounds
/// cond against every applicable ladder bound for 2 <= n <= limit at the
/// default precision of each n.
CheckResult checkBoundLadder(std::uint64_t limit, unsigned threads = 1);
CheckResult checkEntryBound(std::uint64_t limit, const PrecisionContext& ctx);
/// |w_ij| <= 4 for odd prime powers.
CheckResult checkPrimePowerEntries(std::uint64_t limit, const PrecisionContext& ctx);
/// |e_i| <= m for n = p^r q^l, p and q odd.
CheckResult checkTwoPrimeNumerators(std::uint64_t limit, const PrecisionContext& ctx);
CheckResult checkPrimePowerVsGeneral(std::uint64_t limit);
/// Envelopes are evaluated and their measured ratios reported; passes
/// whenever every value is finite.
CheckResult reportEnvelopes(std::uint64_t from, std::uint64_t to);

// distortion
CheckResult checkDistortion(const std::vector<std::uint64_t>& conductors, std::uint64_t count, double sigma,
                            std::uint64_t seed, const PrecisionContext& ctx);
CheckResult checkSamplerVariance();

enum class Suite { Arith, Poly, Inverse, Bounds, Distortion, All };

std::string_view suiteName(Suite s);

struct SuiteOptions {
    unsigned threads = 1;
    unsigned bits = 128;
};

std::vector<CheckResult> runSuite(Suite s, const SuiteOptions& opts = {});

}  // namespace cyclocond
