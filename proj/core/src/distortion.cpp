#include "cyclocond/distortion.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/errors.hpp"
#include "cyclocond/parallel.hpp"
#include "cyclocond/vandermonde.hpp"

namespace cyclocond {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream index for vector i of batch `stream`.
std::uint64_t vectorStream(std::uint64_t stream, std::uint64_t i) { return (i << 1) | (stream & 1); }

std::vector<long> drawVector(std::uint64_t m, double sigma, std::uint64_t seed, std::uint64_t streamId)
{
    SplitMix64 rng(seed, streamId);
    std::vector<long> v(m);
    for (std::uint64_t i = 0; i < m; i += 2) {
        const double r = std::sqrt(-2.0 * std::log(rng.uniform()));
        const double t = 2.0 * std::numbers::pi * rng.uniform();
        v[i] = std::lround(sigma * r * std::cos(t));
        if (i + 1 < m)
            v[i + 1] = std::lround(sigma * r * std::sin(t));
    }
    return v;
}

bool allZero(const std::vector<long>& v)
{
    for (long x : v)
        if (x != 0)
            return false;
    return true;
}

mp::Real intNorm(const std::vector<long>& a, unsigned bits)
{
    BigInt s = 0;
    for (long x : a)
        s += BigInt(x) * x;
    return mp::sqrt(mp::Real(bits, s));
}

// V a: entry j is the polynomial with coefficients a evaluated at root j.
std::vector<mp::Complex> applyV(const RootList& roots, const std::vector<long>& a)
{
    const unsigned bits = roots.context.bits();
    std::vector<mp::Complex> out;
    out.reserve(roots.size());
    mp::Real tre(bits), tim(bits);
    for (const auto& z : roots.roots) {
        mp::Complex acc(bits);
        for (std::size_t p = a.size(); p-- > 0;) {
            mpfr_fmms(tre.get(), acc.re.get(), z.re.get(), acc.im.get(), z.im.get(), MPFR_RNDN);
            mpfr_fmma(tim.get(), acc.re.get(), z.im.get(), acc.im.get(), z.re.get(), MPFR_RNDN);
            mpfr_add_si(acc.re.get(), tre.get(), a[p], MPFR_RNDN);
            mpfr_swap(acc.im.get(), tim.get());
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<mp::Complex> applyMatrix(const CMatrix& w, const std::vector<mp::Complex>& b)
{
    const unsigned bits = w.bits();
    std::vector<mp::Complex> out;
    out.reserve(w.rows());
    mp::Real tre(bits), tim(bits);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        mp::Complex acc(bits);
        for (std::size_t j = 0; j < w.cols(); ++j) {
            const mp::Complex& x = w(i, j);
            mpfr_fmms(tre.get(), x.re.get(), b[j].re.get(), x.im.get(), b[j].im.get(), MPFR_RNDN);
            mpfr_fmma(tim.get(), x.re.get(), b[j].im.get(), x.im.get(), b[j].re.get(), MPFR_RNDN);
            mpfr_add(acc.re.get(), acc.re.get(), tre.get(), MPFR_RNDN);
            mpfr_add(acc.im.get(), acc.im.get(), tim.get(), MPFR_RNDN);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

mp::Real complexNorm(const std::vector<mp::Complex>& v, unsigned bits)
{
    mp::Real s(bits);
    for (const auto& z : v)
        s += z.norm();
    return mp::sqrt(s);
}

struct SampleResult {
    bool skipped = false;
    mp::Real forward;
    mp::Real backward;
};

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream + kGolden)))
{
}

std::uint64_t SplitMix64::next()
{
    state_ += kGolden;
    return mix64(state_);
}

double SplitMix64::uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

std::vector<std::vector<long>> sampleErrors(std::uint64_t m, double sigma, std::uint64_t count,
                                            std::uint64_t seed, std::uint64_t stream)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("sampleErrors: sigma must be positive");
    if (count == 0)
        throw DomainError("sampleErrors: count must be at least 1");
    std::vector<std::vector<long>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(drawVector(m, sigma, seed, vectorStream(stream, i)));
    return out;
}

DistortionStats measureDistortion(std::uint64_t n, double sigma, std::uint64_t count, std::uint64_t seed,
                                  const PrecisionContext& ctx, unsigned threads)
{
    if (n == 0 || n > kMaxDistortionConductor)
        throw DomainError("measureDistortion: n must lie in [1, " + std::to_string(kMaxDistortionConductor) + "]");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("measureDistortion: sigma must be positive");
    if (count == 0)
        throw DomainError("measureDistortion: count must be at least 1");

    const CycloData c = cyclotomic(n);
    const CondReport report = conditionNumber(n, ctx);
    const PrecisionContext pc(report.bits);
    const unsigned bits = pc.bits();
    const RootList roots = primitiveRoots(n, pc);
    const CMatrix inv = inverseClosedForm(c, roots);

    std::vector<SampleResult> results(count);
    parallelFor(count, threads, [&](unsigned, std::size_t i) {
        const auto a = drawVector(c.m, sigma, seed, vectorStream(0, i));
        const auto a2 = drawVector(c.m, sigma, seed, vectorStream(1, i));
        SampleResult& r = results[i];
        if (allZero(a) || allZero(a2)) {
            r.skipped = true;
            return;
        }
        r.forward = complexNorm(applyV(roots, a), bits) / intNorm(a, bits);
        const auto b = applyV(roots, a2);
        r.backward = complexNorm(applyMatrix(inv, b), bits) / complexNorm(b, bits);
    });

    DistortionStats s;
    s.n = n;
    s.m = c.m;
    s.sampleCount = count;
    s.sigma = sigma;
    s.seed = seed;
    s.bits = bits;
    s.frobV = report.frobV.toDouble();
    s.frobVinv = report.frobVinv.toDouble();
    s.cond = report.cond.toDouble();

    mp::Real sumF(bits), sumB(bits), maxF(bits), maxB(bits), maxRT(bits);
    std::uint64_t used = 0;
    for (const auto& r : results) {
        if (r.skipped) {
            ++s.skippedZero;
            continue;
        }
        ++used;
        sumF += r.forward;
        sumB += r.backward;
        maxF = mp::max(maxF, r.forward);
        maxB = mp::max(maxB, r.backward);
        maxRT = mp::max(maxRT, r.forward * r.backward);
    }
    if (used > 0) {
        const mp::Real cnt(bits, static_cast<long>(used));
        s.meanForward = (sumF / cnt).toDouble();
        s.meanBackward = (sumB / cnt).toDouble();
    }
    s.maxForward = maxF.toDouble();
    s.maxBackward = maxB.toDouble();
    s.maxRoundTrip = maxRT.toDouble();
    s.forwardWithinFrobenius = maxF <= report.frobV;
    s.backwardWithinFrobenius = maxB <= report.frobVinv;
    s.roundTripWithinCond = maxRT <= report.cond;
    return s;
}

}  // namespace cyclocond
