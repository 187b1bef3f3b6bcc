#include "cyclocond/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace cyclocond {

namespace {

unsigned ceilLog2(std::uint64_t v)
{
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < v)
        ++bits;
    return bits;
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned bits) : bits_(bits)
{
    if (bits < kMinBits)
        throw DomainError("precision must be at least 53 bits, got " + std::to_string(bits));
}

mp::Real PrecisionContext::tolerance(double scale) const
{
    mp::Real t = mp::Real::pow2(bits_, -static_cast<long>(bits_ / 2));
    mpfr_mul_d(t.get(), t.get(), scale, MPFR_RNDN);
    return t;
}

unsigned defaultBits(std::uint64_t n, std::uint64_t m)
{
    return std::max(128u, 4 * ceilLog2(n) + 2 * ceilLog2(m));
}

PrecisionContext defaultContext(std::uint64_t n)
{
    return PrecisionContext(defaultBits(n, eulerPhi(factor(n))));
}

unsigned precisionCeiling()
{
    if (const char* env = std::getenv("CYCLOCOND_MAX_BITS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= PrecisionContext::kMinBits && v <= (1ul << 24))
            return static_cast<unsigned>(v);
    }
    return 4096;
}

mp::Complex unityRoot(std::uint64_t r, std::uint64_t n, const PrecisionContext& ctx)
{
    if (n == 0)
        throw DomainError("unityRoot: n must be positive");
    r %= n;
    const unsigned bits = ctx.bits();
    if ((4 * r) % n == 0) {
        switch ((4 * r) / n) {
        case 0: return mp::Complex(bits, 1.0, 0.0);
        case 1: return mp::Complex(bits, 0.0, 1.0);
        case 2: return mp::Complex(bits, -1.0, 0.0);
        default: return mp::Complex(bits, 0.0, -1.0);
        }
    }
    if (2 * r > n)
        return unityRoot(n - r, n, ctx).conj();

    // angle = 2 pi r / n with guard bits, then rounded sin/cos
    mp::Real angle = mp::Real::pi(bits + 64);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * r, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    mp::Complex z(bits);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    return z;
}

std::vector<mp::Complex> unityTable(std::uint64_t n, const PrecisionContext& ctx)
{
    std::vector<mp::Complex> table;
    table.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        if (2 * r > n)
            table.push_back(table[n - r].conj());
        else
            table.push_back(unityRoot(r, n, ctx));
    }
    return table;
}

RootList primitiveRoots(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n == 0)
        throw DomainError("primitiveRoots: n must be positive");
    RootList out{n, ctx, {}, {}};
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1)
            continue;
        out.exponents.push_back(k);
        out.roots.push_back(unityRoot(k, n, ctx));
    }
    return out;
}

PolyWorkspace::PolyWorkspace(const IntPoly& p, const PrecisionContext& ctx)
    : poly_(p),
      deriv_(p.derivative()),
      ctx_(ctx),
      tolerance_(ctx.tolerance(std::max(1, p.degree()))),
      acc_(ctx.bits()),
      nre_(ctx.bits()),
      nim_(ctx.bits()),
      scratch_(ctx.bits())
{
    if (auto s = poly_.toLong()) {
        small_ = std::move(*s);
        useSmall_ = true;
    }
    if (auto s = deriv_.toLong()) {
        smallDeriv_ = std::move(*s);
        useSmallDeriv_ = true;
    }
}

void PolyWorkspace::addCoefficient(mpfr_ptr target, std::size_t k, bool derivative)
{
    if (derivative) {
        if (useSmallDeriv_)
            mpfr_add_si(target, target, smallDeriv_[k], MPFR_RNDN);
        else
            mpfr_add_z(target, target, deriv_[k].get_mpz_t(), MPFR_RNDN);
    } else {
        if (useSmall_)
            mpfr_add_si(target, target, small_[k], MPFR_RNDN);
        else
            mpfr_add_z(target, target, poly_[k].get_mpz_t(), MPFR_RNDN);
    }
}

// acc <- acc * z
void PolyWorkspace::step(const mp::Complex& z)
{
    mpfr_fmms(nre_.get(), acc_.re.get(), z.re.get(), acc_.im.get(), z.im.get(), MPFR_RNDN);
    mpfr_fmma(nim_.get(), acc_.re.get(), z.im.get(), acc_.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_swap(acc_.re.get(), nre_.get());
    mpfr_swap(acc_.im.get(), nim_.get());
}

mp::Complex PolyWorkspace::evaluate(const mp::Complex& z)
{
    mpfr_set_zero(acc_.re.get(), 1);
    mpfr_set_zero(acc_.im.get(), 1);
    for (int k = poly_.degree(); k >= 0; --k) {
        step(z);
        addCoefficient(acc_.re.get(), static_cast<std::size_t>(k), false);
    }
    return acc_;
}

mp::Complex PolyWorkspace::evaluateDerivative(const mp::Complex& z)
{
    mpfr_set_zero(acc_.re.get(), 1);
    mpfr_set_zero(acc_.im.get(), 1);
    for (int k = deriv_.degree(); k >= 0; --k) {
        step(z);
        addCoefficient(acc_.re.get(), static_cast<std::size_t>(k), true);
    }
    return acc_;
}

void PolyWorkspace::checkRemainder(const mp::Complex& remainder) const
{
    mp::Real mag = remainder.abs();
    if (mag > tolerance_)
        throw PrecisionError("deflation remainder " + mag.toString(6) + " exceeds tolerance " +
                             tolerance_.toString(6) + " at " + std::to_string(ctx_.bits()) + " bits");
}

mp::Real PolyWorkspace::deflatedNormSquared(const mp::Complex& z)
{
    mp::Real sum(ctx_.bits());
    mp::Complex rem = deflate(z, [&](std::size_t, const mp::Real& re, const mp::Real& im) {
        mpfr_fmma(scratch_.get(), re.get(), re.get(), im.get(), im.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), scratch_.get(), MPFR_RNDN);
    });
    checkRemainder(rem);
    return sum;
}

mp::Complex hornerEval(const IntPoly& p, const mp::Complex& z, const PrecisionContext& ctx)
{
    if (p.isZero())
        return mp::Complex(ctx.bits());
    PolyWorkspace ws(p, ctx);
    return ws.evaluate(z);
}

mp::Complex derivativeAtRoot(const CycloData& c, const Factored& f, const mp::Complex& zeta,
                             const PrecisionContext& ctx, DerivativeMethod method)
{
    if (f.n != c.n)
        throw DomainError("derivativeAtRoot: factorization does not match the conductor");
    if (method == DerivativeMethod::Direct)
        return hornerEval(c.poly.derivative(), zeta, ctx);
    if (method == DerivativeMethod::DivisorProduct) {
        if (c.n == 1)
            return mp::Complex(ctx.bits(), 1.0, 0.0);
        // x^n - 1 supplies the vanishing factor; every other factor is a unit
        // away from zero at a primitive root.
        mp::Complex num = mp::pow(zeta, c.n - 1);
        num = num * mp::Real(ctx.bits(), static_cast<long>(c.n));
        mp::Complex den(ctx.bits(), 1.0, 0.0);
        const mp::Real one(ctx.bits(), 1L);
        for (std::uint64_t d : divisors(f)) {
            if (d == c.n)
                continue;
            const int mu = moebius(factor(c.n / d));
            if (mu == 0)
                continue;
            mp::Complex t = mp::pow(zeta, d);
            t.re -= one;
            if (mu > 0)
                num = num * t;
            else
                den = den * t;
        }
        return num / den;
    }

    const std::uint64_t rad = radical(f);
    const std::uint64_t stretch = c.n / rad;
    const CycloData base = rad == c.n ? c : cyclotomic(rad);
    const mp::Complex lifted = mp::pow(zeta, stretch);
    mp::Complex d = hornerEval(base.poly.derivative(), lifted, ctx);
    if (stretch > 1) {
        d = d * mp::pow(zeta, stretch - 1);
        mp::Real s(ctx.bits(), static_cast<long>(stretch));
        d = d * s;
    }
    return d;
}

std::vector<mp::Complex> deflate(const IntPoly& p, const mp::Complex& zeta, const PrecisionContext& ctx)
{
    PolyWorkspace ws(p, ctx);
    std::vector<mp::Complex> out(static_cast<std::size_t>(std::max(0, p.degree())), mp::Complex(ctx.bits()));
    mp::Complex rem = ws.deflate(zeta, [&](std::size_t i, const mp::Real& re, const mp::Real& im) {
        out[i] = mp::Complex(re, im);
    });
    ws.checkRemainder(rem);
    return out;
}

}  // namespace cyclocond
