#include "cyclocond/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/errors.hpp"

namespace cyclocond {

namespace {

constexpr std::array<std::string_view, 10> kWireIds = {
    "THM_3_10",        "COR_3_11",        "PRIME_4_1A",         "PRIME_POWER_4_1",     "TWO_PRIME_4_2",
    "TWO_PRIME_POWER_4_4", "THREE_PRIME_4_6", "THREE_PRIME_POWER_4_7", "BATEMAN_5_3_ENVELOPE",
    "SUBEXP_5_6_ENVELOPE",
};

bool isOdd(const Factored& f) { return f.n % 2 == 1; }

unsigned maxExponent(const Factored& f)
{
    unsigned e = 0;
    for (const auto& pp : f.factors)
        e = std::max(e, pp.exponent);
    return e;
}

void requireOddPrimes(const Factored& f, unsigned count, bool squarefree, const char* what)
{
    if (!isOdd(f) || f.factors.size() != count || (squarefree && maxExponent(f) > 1))
        throw DomainError(std::string(what) + ": shape of n = " + std::to_string(f.n) + " does not match");
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigInt bigPow(std::uint64_t base, unsigned long e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

std::optional<double> ladderValue(BoundId id, const Factored& f, const BigInt& height)
{
    const std::uint64_t n = f.n;
    if (n < 2)
        return std::nullopt;
    const auto k = static_cast<unsigned>(f.factors.size());
    const bool odd = isOdd(f);
    const bool sqfree = maxExponent(f) == 1;
    switch (id) {
    case BoundId::General:
        return boundGeneral(f, height);
    case BoundId::Corollary:
        if (auto r = corollaryHeightExponent(k))
            return boundCorollary(f, *r);
        return std::nullopt;
    case BoundId::Prime:
        if (odd && k == 1 && sqfree)
            return boundPrime(n);
        return std::nullopt;
    case BoundId::PrimePower:
        if (odd && k == 1 && !sqfree)
            return boundPrimePower(f.factors[0].prime, f.factors[0].exponent);
        return std::nullopt;
    case BoundId::TwoPrimes:
        if (odd && k == 2 && sqfree)
            return boundTwoPrimes(f.factors[0].prime, f.factors[1].prime);
        return std::nullopt;
    case BoundId::TwoPrimePowers:
        if (odd && k == 2)
            return boundTwoPrimePowers(f);
        return std::nullopt;
    case BoundId::ThreePrimes:
        if (odd && k == 3 && sqfree)
            return boundThreePrimes(f);
        return std::nullopt;
    case BoundId::ThreePrimePowers:
        if (odd && k == 3)
            return boundThreePrimePowers(f);
        return std::nullopt;
    case BoundId::BatemanEnvelope:
    case BoundId::SubexponentialEnvelope:
        break;
    }
    return std::nullopt;
}

}  // namespace

std::string_view boundWireId(BoundId id) { return kWireIds[static_cast<std::size_t>(id)]; }

std::optional<BoundId> parseBoundWireId(std::string_view s)
{
    for (std::size_t i = 0; i < kWireIds.size(); ++i)
        if (kWireIds[i] == s)
            return kAllBounds[i];
    return std::nullopt;
}

bool boundsHeight(BoundId id) { return id == BoundId::BatemanEnvelope; }

bool isAsymptotic(BoundId id)
{
    return id == BoundId::Corollary || id == BoundId::BatemanEnvelope || id == BoundId::SubexponentialEnvelope;
}

double log10Big(const BigInt& z)
{
    if (z == 0)
        return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
}

double boundGeneral(const Factored& f, const BigInt& height)
{
    if (f.n < 2)
        throw DomainError("boundGeneral: n must be at least 2");
    const auto k = static_cast<unsigned long>(f.factors.size());
    BigInt v = 2 * big(radical(f)) * bigPow(f.n, (1UL << k) + k + 2) * height;
    return log10Big(v);
}

double boundCorollary(const Factored& f, double r)
{
    if (f.n < 2)
        throw DomainError("boundCorollary: n must be at least 2");
    if (!(r >= 0.0))
        throw DomainError("boundCorollary: exponent r must be nonnegative");
    const auto k = static_cast<double>(f.factors.size());
    return (std::exp2(k) + k + 3.0 + r) * std::log10(static_cast<double>(f.n));
}

double boundPrime(std::uint64_t p)
{
    if (p % 2 == 0 || !isPrime(p))
        throw DomainError("boundPrime: " + std::to_string(p) + " is not an odd prime");
    return log10Big(4 * big(p - 1) * big(p - 1));
}

double boundPrimePower(std::uint64_t p, unsigned l)
{
    if (!isPrime(p) || l < 2)
        throw DomainError("boundPrimePower: needs a prime and exponent >= 2");
    const BigInt m = bigPow(p, l - 1) * big(p - 1);
    return log10Big(4 * big(p - 1) * m);
}

double boundTwoPrimes(std::uint64_t p, std::uint64_t q)
{
    if (p == q || p % 2 == 0 || q % 2 == 0 || !isPrime(p) || !isPrime(q))
        throw DomainError("boundTwoPrimes: needs two distinct odd primes");
    const BigInt m = big(p - 1) * big(q - 1);
    return log10Big(4 * m * m * m);
}

double boundTwoPrimePowers(const Factored& f)
{
    requireOddPrimes(f, 2, false, "boundTwoPrimePowers");
    const BigInt m = big(eulerPhi(f));
    return log10Big(2 * big(eulerPhi(radical(f))) * m * m);
}

double boundThreePrimes(const Factored& f)
{
    requireOddPrimes(f, 3, true, "boundThreePrimes");
    const BigInt m = big(eulerPhi(f));
    return log10Big(2 * m * m * m * m);
}

double boundThreePrimePowers(const Factored& f)
{
    requireOddPrimes(f, 3, false, "boundThreePrimePowers");
    const BigInt m = big(eulerPhi(f));
    const BigInt pr = big(eulerPhi(radical(f)));
    return log10Big(2 * pr * pr * m * m);
}

double batemanEnvelope(std::uint64_t n, double eps)
{
    if (n < 3)
        throw DomainError("batemanEnvelope: n must be at least 3");
    if (!(eps > 0.0))
        throw DomainError("batemanEnvelope: eps must be positive");
    const double x = static_cast<double>(n);
    return std::pow(x, (1.0 + eps) * std::log(2.0) / std::log(std::log(x))) / std::log(10.0);
}

double subexpEnvelope(std::uint64_t n)
{
    if (n < 3)
        throw DomainError("subexpEnvelope: n must be at least 3");
    const double x = static_cast<double>(n);
    const double ll = std::log(std::log(x));
    const double t = std::pow(x, 1.0 / ll);
    return (t + std::log(x) / ll + 3.0) * std::log10(x) + t / std::log(10.0);
}

std::optional<double> corollaryHeightExponent(unsigned k)
{
    if (k <= 2)
        return 0.0;
    if (k <= 4)
        return 1.0;
    return std::nullopt;
}

BoundSet evaluateBounds(const Factored& f, const BigInt& height, std::optional<double> condLog10,
                        double batemanEps)
{
    if (f.n < 2)
        throw DomainError("evaluateBounds: n must be at least 2");
    BoundSet set;
    set.n = f.n;
    set.condLog10 = condLog10;
    set.heightLog10 = log10Big(height);

    // Phi_n(x) = Phi_{n/2}(-x) for n = 2 mod 4, so the odd half's bounds carry over.
    std::optional<Factored> half;
    if (f.n % 4 == 2 && f.n > 2)
        half = factor(f.n / 2);

    for (BoundId id : kAllBounds) {
        BoundEntry e;
        e.id = id;
        e.evaluatedAt = f.n;
        if (id == BoundId::BatemanEnvelope) {
            if (f.n >= 3)
                e.log10Value = batemanEnvelope(f.n, batemanEps);
        } else if (id == BoundId::SubexponentialEnvelope) {
            if (f.n >= 3)
                e.log10Value = subexpEnvelope(f.n);
        } else {
            e.log10Value = ladderValue(id, f, height);
            if (half) {
                const auto h = ladderValue(id, *half, height);
                if (h && (!e.log10Value || *h < *e.log10Value)) {
                    e.log10Value = h;
                    e.evaluatedAt = half->n;
                }
            }
        }
        e.applicable = e.log10Value.has_value() && !isAsymptotic(id);
        if (e.log10Value) {
            if (boundsHeight(id))
                e.slackLog10 = *e.log10Value - set.heightLog10;
            else if (condLog10)
                e.slackLog10 = *e.log10Value - *condLog10;
        }
        set.entries.push_back(e);
    }

    for (const auto& e : set.entries) {
        if (!e.applicable)
            continue;
        if (!set.tightestLog10 || *e.log10Value < *set.tightestLog10) {
            set.tightestLog10 = e.log10Value;
            set.tightestApplicable = e.id;
        }
        if (e.slackLog10 && *e.slackLog10 < 0.0)
            set.violations.push_back(e.id);
    }
    if (condLog10 && set.tightestLog10)
        set.marginLog10 = *set.tightestLog10 - *condLog10;
    return set;
}

BoundSet tightestBound(const Factored& f, const CycloData& c, const CondReport& report)
{
    if (f.n != c.n || c.n != report.n)
        throw DomainError("tightestBound: inputs describe different conductors");
    return evaluateBounds(f, c.height, report.condLog10());
}

EntryBoundCheck entryBoundCheck(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n < 2 || n > kMaxClosedFormConductor)
        throw DomainError("entryBoundCheck: n out of range");
    const Factored f = factor(n);
    const CycloData c = cyclotomic(n);
    const std::uint64_t rad = radical(f);
    const CycloData cr = rad == n ? c : cyclotomic(rad);
    const Factored fr = factor(rad);
    const RootList roots = primitiveRoots(n, ctx);
    PolyWorkspace ws(c.poly, ctx);

    const unsigned bits = ctx.bits();
    const mp::Real numPlusOne(bits, BigInt(big(rad) * (c.height + 1)));
    const mp::Real numTwice(bits, BigInt(big(rad) * 2 * c.height));

    EntryBoundCheck out;
    out.n = n;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const mp::Complex& z = roots.roots[j];
        mp::Real maxNum(bits);
        mp::Complex rem = ws.deflate(z, [&](std::size_t, const mp::Real& re, const mp::Real& im) {
            mp::Real a = mp::Complex(re, im).abs();
            if (a > maxNum)
                maxNum = a;
        });
        ws.checkRemainder(rem);
        const mp::Real den = ws.evaluateDerivative(z).abs();
        const mp::Complex lifted = mp::pow(z, n / rad);
        const mp::Real radDen = derivativeAtRoot(cr, fr, lifted, ctx, DerivativeMethod::DivisorProduct).abs();

        // |w_ij| = |numerator| / |Phi_n'(zeta_j)|, bound = num / |Phi_rad'(.)|
        const mp::Real entry = maxNum / den;
        const double rPlus = (entry * radDen / numPlusOne).toDouble();
        const double rTwice = (entry * radDen / numTwice).toDouble();
        out.maxRatioPlusOne = std::max(out.maxRatioPlusOne, rPlus);
        out.maxRatioTwice = std::max(out.maxRatioTwice, rTwice);
        if (rPlus > 1.0)
            ++out.violationsPlusOne;
        if (rTwice > 1.0)
            ++out.violationsTwice;
    }
    return out;
}

EnvelopeCrossover subexpCrossover(std::uint64_t from, std::uint64_t to)
{
    if (from < 3 || from > to)
        throw DomainError("subexpCrossover: need 3 <= from <= to");
    EnvelopeCrossover out;
    out.from = from;
    out.to = to;
    bool dominatingTail = true;
    for (std::uint64_t n = to; n >= from; --n) {
        const Factored f = factor(n);
        const bool above = subexpEnvelope(n) >= boundGeneral(f, cyclotomicHeight(n));
        if (!above)
            ++out.countBelow;
        if (dominatingTail && above)
            out.dominatesFrom = n;
        else
            dominatingTail = false;
        if (n == 0)
            break;
    }
    return out;
}

}  // namespace cyclocond
