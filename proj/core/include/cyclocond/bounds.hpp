#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclocond/arith.hpp"
#include "cyclocond/int_poly.hpp"
#include "cyclocond/numerics.hpp"
#include "cyclocond/vandermonde.hpp"

namespace cyclocond {

/// Upper bounds on the condition number, in declaration order. Ties in
/// tightest-bound selection go to the earlier enumerator.
enum class BoundId {
    General,                 ///< 2 rad(n) n^(2^k+k+2) A(n)
    Corollary,               ///< n^(2^k+k+3+r), asymptotic
    Prime,                   ///< 4 (p-1)^2
    PrimePower,              ///< 4 (p-1) m
    TwoPrimes,               ///< 4 m^3
    TwoPrimePowers,          ///< 2 phi(rad n) m^2
    ThreePrimes,             ///< 2 m^4
    ThreePrimePowers,        ///< 2 phi(rad n)^2 m^2
    BatemanEnvelope,         ///< height envelope, asymptotic
    SubexponentialEnvelope,  ///< condition envelope, asymptotic
};

inline constexpr std::array<BoundId, 10> kAllBounds = {
    BoundId::General,       BoundId::Corollary,      BoundId::Prime,           BoundId::PrimePower,
    BoundId::TwoPrimes,     BoundId::TwoPrimePowers, BoundId::ThreePrimes,     BoundId::ThreePrimePowers,
    BoundId::BatemanEnvelope, BoundId::SubexponentialEnvelope,
};

/// Stable identifier used in CSV and JSON output.
std::string_view boundWireId(BoundId id);
std::optional<BoundId> parseBoundWireId(std::string_view s);

/// Envelopes bound the height rather than the condition number.
bool boundsHeight(BoundId id);
/// Asymptotic statements are reported but never asserted.
bool isAsymptotic(BoundId id);

/// log10 of |z|; -inf for zero.
double log10Big(const BigInt& z);

// Each returns log10 of the bound. Preconditions violated -> DomainError.
double boundGeneral(const Factored& f, const BigInt& height);
double boundCorollary(const Factored& f, double r);
double boundPrime(std::uint64_t p);
double boundPrimePower(std::uint64_t p, unsigned l);
double boundTwoPrimes(std::uint64_t p, std::uint64_t q);
double boundTwoPrimePowers(const Factored& f);
double boundThreePrimes(const Factored& f);
double boundThreePrimePowers(const Factored& f);
double batemanEnvelope(std::uint64_t n, double eps);
double subexpEnvelope(std::uint64_t n);

/// Exponent r with A(n) = O(n^r) used for the corollary: 0 for k <= 2,
/// 1 for k = 3, 4, none beyond.
std::optional<double> corollaryHeightExponent(unsigned k);

inline constexpr double kDefaultBatemanEps = 0.1;

struct BoundEntry {
    BoundId id = BoundId::General;
    /// Null when no evaluation point satisfies the formula's preconditions.
    std::optional<double> log10Value;
    bool applicable = false;
    /// n itself, or n/2 when the odd half gave the smaller value.
    std::uint64_t evaluatedAt = 0;
    /// log10Value minus log10 of the bounded quantity (cond, or A(n) for the
    /// height envelope). Negative means the inequality fails here.
    std::optional<double> slackLog10;
};

struct BoundSet {
    std::uint64_t n = 0;
    std::vector<BoundEntry> entries;  // kAllBounds order
    std::optional<BoundId> tightestApplicable;
    std::optional<double> tightestLog10;
    std::optional<double> condLog10;
    std::optional<double> marginLog10;
    double heightLog10 = 0.0;
    /// Applicable bounds whose value lies below condLog10.
    std::vector<BoundId> violations;

    const BoundEntry& entry(BoundId id) const { return entries[static_cast<std::size_t>(id)]; }
};

/// Evaluates every bound for n >= 2. condLog10 may be absent (bounds-only
/// sweeps); margin and violations are then left empty.
BoundSet evaluateBounds(const Factored& f, const BigInt& height, std::optional<double> condLog10,
                        double batemanEps = kDefaultBatemanEps);

BoundSet tightestBound(const Factored& f, const CycloData& c, const CondReport& report);

/// Per-entry check of |w_ij| <= rad(n) (A(n)+1) / |Phi_rad'(zeta_j^(n/rad))|
/// and of the same with 2 A(n) in place of A(n)+1.
struct EntryBoundCheck {
    std::uint64_t n = 0;
    /// max over entries of |w_ij| / bound; <= 1 means the bound holds.
    double maxRatioPlusOne = 0.0;
    double maxRatioTwice = 0.0;
    std::uint64_t violationsPlusOne = 0;
    std::uint64_t violationsTwice = 0;
};

EntryBoundCheck entryBoundCheck(std::uint64_t n, const PrecisionContext& ctx);

/// Range where the subexponential envelope dominates the general bound.
struct EnvelopeCrossover {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    /// Smallest N in range such that the envelope is >= the general bound on
    /// all of [N, to]; absent if it fails at `to`.
    std::optional<std::uint64_t> dominatesFrom;
    std::uint64_t countBelow = 0;
};

EnvelopeCrossover subexpCrossover(std::uint64_t from, std::uint64_t to);

}  // namespace cyclocond
