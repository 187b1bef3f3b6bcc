#include "cyclocond/checks.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

#include "cyclocond/arith.hpp"
#include "cyclocond/bounds.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/distortion.hpp"
#include "cyclocond/errors.hpp"
#include "cyclocond/parallel.hpp"
#include "cyclocond/vandermonde.hpp"

namespace cyclocond {

namespace {

std::string fmt(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string str(const BigInt& z) { return z.get_str(); }

// Runs body, turning any escaping error into a recorded failure.
template <typename F>
void guarded(CheckResult& r, const std::string& where, F&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        r.fail(where + ": " + e.what());
    }
}


std::uint64_t oddPart(std::uint64_t n)
{
    while (n % 2 == 0 && n > 0)
        n /= 2;
    return n;
}

// E_i, i = 0..m, of the roots of the monic polynomial with ascending coeffs a.
std::vector<mp::Complex> fullSymmetric(const IntPoly& p, unsigned bits)
{
    const int m = p.degree();
    std::vector<mp::Complex> e;
    for (int i = 0; i <= m; ++i) {
        mp::Real v(bits, p.coeff(static_cast<std::size_t>(m - i)));
        if (i % 2 == 1)
            v = -v;
        e.emplace_back(std::move(v), mp::Real(bits));
    }
    return e;
}

// e_i, i = 0..m-1, of all roots except z.
std::vector<mp::Complex> deflatedSymmetric(PolyWorkspace& ws, const mp::Complex& z, unsigned bits)
{
    const int m = ws.degree();
    std::vector<mp::Complex> e(static_cast<std::size_t>(m), mp::Complex(bits));
    mp::Complex rem = ws.deflate(z, [&](std::size_t k, const mp::Real& re, const mp::Real& im) {
        // quotient coefficient of x^k is (-1)^i e_i with i = m-1-k
        const std::size_t i = static_cast<std::size_t>(m - 1) - k;
        e[i] = mp::Complex(re, im);
        if (i % 2 == 1)
            e[i] = mp::Complex(-e[i].re, -e[i].im);
    });
    ws.checkRemainder(rem);
    return e;
}

mp::Real toleranceFor(const PrecisionContext& ctx, std::uint64_t m)
{
    return ctx.tolerance(static_cast<double>(m));
}

}  // namespace

void CheckResult::fail(std::string detail)
{
    passed = false;
    ++failureCount;
    if (failures.size() < kMaxListedFailures)
        failures.push_back(std::move(detail));
}

// ---------------------------------------------------------------- arith

CheckResult checkFactorization(std::uint64_t limit)
{
    CheckResult r{"factor round trip"};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        ++r.cases;
        const Factored f = factor(n);
        std::uint64_t prod = 1;
        std::uint64_t prev = 1;
        bool ok = f.n == n && (n != 1 || f.factors.empty());
        for (const auto& pp : f.factors) {
            ok = ok && pp.prime > prev && isPrime(pp.prime) && pp.exponent >= 1;
            prev = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e)
                prod *= pp.prime;
        }
        if (!ok || prod != n)
            r.fail("n=" + std::to_string(n));
    }
    r.summary = "n <= " + std::to_string(limit);
    return r;
}

CheckResult checkPhiMultiplicative(std::uint64_t limit)
{
    CheckResult r{"phi multiplicative on coprime pairs"};
    auto test = [&](std::uint64_t a, std::uint64_t b) {
        if (std::gcd(a, b) != 1)
            return;
        ++r.cases;
        if (eulerPhi(a * b) != eulerPhi(a) * eulerPhi(b))
            r.fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
    };
    const std::uint64_t dense = std::min<std::uint64_t>(limit, 150);
    for (std::uint64_t a = 1; a <= dense; ++a)
        for (std::uint64_t b = 1; b <= dense; ++b)
            test(a, b);
    SplitMix64 rng(0x5eed, 0);
    for (int i = 0; i < 20000; ++i)
        test(1 + rng.next() % limit, 1 + rng.next() % limit);
    r.summary = "all pairs <= " + std::to_string(dense) + " plus 20000 drawn pairs <= " + std::to_string(limit);
    return r;
}

CheckResult checkDivisorSums(std::uint64_t limit)
{
    CheckResult r{"divisor sums of phi and mu"};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        ++r.cases;
        const auto ds = divisors(factor(n));
        std::uint64_t phiSum = 0;
        long muSum = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (i > 0 && ds[i] <= ds[i - 1])
                r.fail("divisors of " + std::to_string(n) + " not strictly ascending");
            if (n % ds[i] != 0)
                r.fail(std::to_string(ds[i]) + " does not divide " + std::to_string(n));
            phiSum += eulerPhi(ds[i]);
            muSum += moebius(ds[i]);
        }
        if (phiSum != n)
            r.fail("sum phi(d) over d | " + std::to_string(n) + " = " + std::to_string(phiSum));
        if (muSum != (n == 1 ? 1 : 0))
            r.fail("sum mu(d) over d | " + std::to_string(n) + " = " + std::to_string(muSum));
    }
    r.summary = "n <= " + std::to_string(limit);
    return r;
}

CheckResult checkRadical(std::uint64_t limit)
{
    CheckResult r{"radical divides n, same omega"};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        ++r.cases;
        const Factored f = factor(n);
        const std::uint64_t rad = radical(f);
        if (n % rad != 0 || omega(rad) != omega(f) || !isSquarefree(factor(rad)))
            r.fail("n=" + std::to_string(n));
    }
    r.summary = "n <= " + std::to_string(limit);
    return r;
}

// ---------------------------------------------------------------- poly

CheckResult checkOracleEquivalence(std::uint64_t limit)
{
    CheckResult r{"cyclotomic equals Moebius oracle"};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const IntPoly o = cyclotomicOracle(n);
            if (!(c.poly == o))
                r.fail("n=" + std::to_string(n) + " coefficients differ");
            else if (c.height != o.maxAbsCoeff() || c.m != eulerPhi(n))
                r.fail("n=" + std::to_string(n) + " metadata differs");
        });
    }
    r.summary = "exact equality for n <= " + std::to_string(limit);
    return r;
}

CheckResult checkPrimePowerClosedForm(std::uint64_t limit)
{
    CheckResult r{"prime power closed forms"};
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!isPrime(p))
            continue;
        std::uint64_t q = p;
        for (unsigned k = 1; q <= limit; ++k, q *= p) {
            ++r.cases;
            const IntPoly closed = primePowerClosedForm(p, k);
            if (!(cyclotomic(q).poly == closed))
                r.fail(std::to_string(p) + "^" + std::to_string(k) + " main path");
            if (q <= kMaxOracleConductor && q <= 20000 && !(cyclotomicOracle(q) == closed))
                r.fail(std::to_string(p) + "^" + std::to_string(k) + " oracle");
            if (q > limit / p)
                break;
        }
    }
    r.summary = "p^k <= " + std::to_string(limit);
    return r;
}

CheckResult checkHeightRadical(std::uint64_t limit)
{
    CheckResult r{"A(n) = A(rad n)"};
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const Factored f = factor(n);
        if (isSquarefree(f))
            continue;
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const BigInt a = cyclotomicOracle(n).maxAbsCoeff();
            const BigInt b = heightA(cyclotomic(radical(f)));
            if (a != b)
                r.fail("n=" + std::to_string(n) + " A(n)=" + str(a) + " A(rad)=" + str(b));
        });
    }
    r.summary = "every non-squarefree n <= " + std::to_string(limit) + ", oracle against main path";
    return r;
}

CheckResult checkHeightSmallOmega(std::uint64_t limit)
{
    CheckResult r{"A(n) <= 1 when the odd part has <= 2 primes"};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (omega(oddPart(n)) > 2)
            continue;
        ++r.cases;
        const BigInt a = cyclotomicHeight(n);
        if (a > 1)
            r.fail("n=" + std::to_string(n) + " A=" + str(a));
    }
    r.summary = std::to_string(r.cases) + " conductors <= " + std::to_string(limit);
    return r;
}

CheckResult checkHeight105()
{
    CheckResult r{"A(105) = 2"};
    r.cases = 1;
    const BigInt a = cyclotomic(105).height;
    const BigInt o = cyclotomicOracle(105).maxAbsCoeff();
    if (a != 2 || o != 2)
        r.fail("main " + str(a) + ", oracle " + str(o));
    r.summary = "main path and oracle";
    return r;
}

CheckResult checkBatemanHeight(std::uint64_t limit)
{
    CheckResult r{"A(n) <= n^(2^(k-1)), squarefree n"};
    double worst = -INFINITY;
    std::uint64_t worstN = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const Factored f = factor(n);
        if (!isSquarefree(f))
            continue;
        ++r.cases;
        const BigInt a = cyclotomicHeight(n);
        const auto k = static_cast<unsigned long>(f.factors.size());
        BigInt bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), n, 1UL << (k - 1));
        if (a > bound)
            r.fail("n=" + std::to_string(n) + " A=" + str(a));
        const double gap = log10Big(a) - log10Big(bound);
        if (gap > worst) {
            worst = gap;
            worstN = n;
        }
    }
    r.summary = "squarefree n <= " + std::to_string(limit) + ", closest log10(A/bound) = " + fmt(worst) +
                " at n=" + std::to_string(worstN);
    return r;
}

CheckResult checkBangHeight(std::uint64_t limit)
{
    CheckResult r{"A(pqr) <= p - 1, odd p < q < r"};
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        const Factored f = factor(n);
        if (f.factors.size() != 3 || !isSquarefree(f))
            continue;
        ++r.cases;
        const BigInt a = cyclotomicHeight(n);
        const std::uint64_t p = f.factors[0].prime;
        if (a > BigInt(static_cast<unsigned long>(p - 1)))
            r.fail("n=" + std::to_string(n) + " A=" + str(a) + " p-1=" + std::to_string(p - 1));
    }
    r.summary = std::to_string(r.cases) + " odd pqr <= " + std::to_string(limit);
    return r;
}

// ---------------------------------------------------------------- inverse

CheckResult checkPowerOfTwoIsometry(unsigned maxExponent, const PrecisionContext& ctx)
{
    CheckResult r{"power-of-two isometry"};
    double worstRel = 0.0;
    double worstGram = 0.0;
    for (unsigned k = 1; k <= maxExponent; ++k) {
        const std::uint64_t n = 1ULL << k;
        const double m = static_cast<double>(n / 2);
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CondReport rep = conditionNumber(n, ctx);
            const mp::Real mm(rep.cond.bits(), static_cast<long>(n / 2));
            const double rel = (mp::abs(rep.cond - mm) / mm).toDouble();
            worstRel = std::max(worstRel, rel);
            if (!(rel <= 1e-9))
                r.fail("n=" + std::to_string(n) + " cond=" + rep.cond.toString(17));
            const double gram = grammResidual(n, ctx).toDouble() / m;
            worstGram = std::max(worstGram, gram);
            if (!(gram <= 1e-9))
                r.fail("n=" + std::to_string(n) + " gram residual / m = " + fmt(gram));
        });
    }
    r.summary = "n = 2..2^" + std::to_string(maxExponent) + ", max rel err " + fmt(worstRel) +
                ", max gram residual / m " + fmt(worstGram);
    return r;
}

CheckResult checkFullRoots(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"full roots cond = n"};
    double worst = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CondReport rep = fullRootsCond(n, ctx);
            const mp::Real nn(rep.cond.bits(), static_cast<long>(n));
            const double rel = (mp::abs(rep.cond - nn) / nn).toDouble();
            worst = std::max(worst, rel);
            if (!(rel <= 1e-9))
                r.fail("n=" + std::to_string(n) + " cond=" + rep.cond.toString(17));
        });
    }
    r.summary = "n = 2.." + std::to_string(limit) + ", max rel err " + fmt(worst);
    return r;
}

CheckResult checkClosedFormVsLU(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"closed-form inverse against LU"};
    double worstEntry = 0.0;
    double worstResidual = 0.0;
    double worstDelta = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const RootList roots = primitiveRoots(n, ctx);
            const CMatrix v = buildV(roots);
            const CMatrix w = inverseClosedForm(c, roots);
            const CMatrix lu = inverseLU(v);
            const mp::Real scale = frobNorm(w);
            const double entry = (maxAbsDifference(w, lu) / scale).toDouble();
            const CMatrix prod = v * w;
            const CMatrix id = CMatrix::identity(c.m, ctx.bits());
            const double residual = frobNorm(prod - id).toDouble() / static_cast<double>(c.m);
            const double delta = maxAbsDifference(prod, id).toDouble();
            worstEntry = std::max(worstEntry, entry);
            worstResidual = std::max(worstResidual, residual);
            worstDelta = std::max(worstDelta, delta);
            if (!(entry <= 1e-8))
                r.fail("n=" + std::to_string(n) + " entrywise gap / ||V^-1|| = " + fmt(entry));
            if (!(residual <= 1e-10))
                r.fail("n=" + std::to_string(n) + " ||V V^-1 - I|| / m = " + fmt(residual));
            if (!(delta <= 1e-10))
                r.fail("n=" + std::to_string(n) + " Lagrange delta off by " + fmt(delta));
        });
    }
    r.summary = "n = 2.." + std::to_string(limit) + ", max entry gap " + fmt(worstEntry) + ", max residual/m " +
                fmt(worstResidual) + ", max |P_j(zeta_i) - delta_ij| " + fmt(worstDelta);
    return r;
}

CheckResult checkSymmetricIdentities(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"full vs deflated symmetric functions"};
    const unsigned bits = ctx.bits();
    for (std::uint64_t n = 2; n <= limit; ++n) {
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const std::size_t m = c.m;
            const auto full = fullSymmetric(c.poly, bits);
            const mp::Real tol = toleranceFor(ctx, m);
            const RootList roots = primitiveRoots(n, ctx);
            PolyWorkspace ws(c.poly, ctx);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                const mp::Complex& z = roots.roots[j];
                const auto e = deflatedSymmetric(ws, z, bits);
                for (std::size_t i = 1; i <= m; ++i) {
                    ++r.cases;
                    // E_i = zeta_j e_(i-1) + e_i, with e_m = 0
                    mp::Complex rhs = z * e[i - 1];
                    if (i < m)
                        rhs = rhs + e[i];
                    const mp::Real gap = (full[i] - rhs).abs();
                    if (gap > tol)
                        r.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + " i=" + std::to_string(i) +
                               " gap " + gap.toString(4));
                }
            }
        });
    }
    r.summary = "n <= " + std::to_string(limit) + ", all roots, all degrees, tolerance 2^-(bits/2) m";
    return r;
}

CheckResult checkNumeratorBound(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"|e_(m-k)| <= (k-1) A(n) + 1"};
    const unsigned bits = ctx.bits();
    double tightest = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const std::size_t m = c.m;
            const mp::Real tol = toleranceFor(ctx, m);
            const mp::Real a(bits, c.height);
            const RootList roots = primitiveRoots(n, ctx);
            PolyWorkspace ws(c.poly, ctx);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                const auto e = deflatedSymmetric(ws, roots.roots[j], bits);
                for (std::size_t k = 1; k <= m; ++k) {
                    ++r.cases;
                    mp::Real bound = a * mp::Real(bits, static_cast<long>(k - 1));
                    bound += mp::Real(bits, 1L);
                    const mp::Real v = e[m - k].abs();
                    tightest = std::max(tightest, (v / bound).toDouble());
                    if (v > bound + tol)
                        r.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + " k=" + std::to_string(k) +
                               " |e|=" + v.toString(8) + " bound=" + bound.toString(8));
                }
            }
        });
    }
    r.summary = "n <= " + std::to_string(limit) + ", max |e|/bound " + fmt(tightest);
    return r;
}

CheckResult checkDerivativeBound(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"1/|Phi_n'(zeta_j)| <= n^(2^k+k), squarefree n"};
    double closest = -INFINITY;
    std::uint64_t closestN = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const Factored f = factor(n);
        if (!isSquarefree(f))
            continue;
        guarded(r, "n=" + std::to_string(n), [&] {
            const auto k = static_cast<double>(f.factors.size());
            const double boundLog = (std::exp2(k) + k) * std::log10(static_cast<double>(n));
            const auto table = unityTable(n, ctx);
            const mp::Real one(ctx.bits(), 1L);
            // |Phi_n'(zeta)| = n prod_{d | n, d < n} |zeta^d - 1|^mu(n/d)
            std::vector<std::pair<std::uint64_t, int>> terms;
            for (std::uint64_t d : divisors(f))
                if (d < n)
                    if (const int mu = moebius(factor(n / d)); mu != 0)
                        terms.emplace_back(d, mu);
            for (std::uint64_t kk = 1; kk < n; ++kk) {
                if (std::gcd(kk, n) != 1)
                    continue;
                ++r.cases;
                mp::Real mag(ctx.bits(), static_cast<long>(n));
                for (const auto& [d, mu] : terms) {
                    const mp::Complex& t = table[(kk * d) % n];
                    const mp::Real dist = mp::Complex(t.re - one, t.im).abs();
                    if (mu > 0)
                        mag *= dist;
                    else
                        mag /= dist;
                }
                const double invLog = -mag.log10Abs();
                if (invLog - boundLog > closest) {
                    closest = invLog - boundLog;
                    closestN = n;
                }
                if (invLog > boundLog)
                    r.fail("n=" + std::to_string(n) + " k=" + std::to_string(kk) + " log10(1/|Phi'|)=" + fmt(invLog));
            }
        });
    }
    r.summary = "squarefree n <= " + std::to_string(limit) + ", all roots, closest log10 gap " + fmt(closest) +
                " at n=" + std::to_string(closestN);
    return r;
}

CheckResult checkDerivativeMethods(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"derivative methods agree"};
    for (std::uint64_t n = 2; n <= limit; ++n) {
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const Factored f = factor(n);
            const RootList roots = primitiveRoots(n, ctx);
            for (const auto& z : roots.roots) {
                ++r.cases;
                const mp::Complex a = derivativeAtRoot(c, f, z, ctx, DerivativeMethod::Direct);
                const mp::Complex b = derivativeAtRoot(c, f, z, ctx, DerivativeMethod::RadicalChain);
                const mp::Complex d = derivativeAtRoot(c, f, z, ctx, DerivativeMethod::DivisorProduct);
                const mp::Real tol = ctx.tolerance(static_cast<double>(c.m)) * mp::max(a.abs(), mp::Real(ctx.bits(), 1L));
                if ((a - b).abs() > tol || (a - d).abs() > tol)
                    r.fail("n=" + std::to_string(n) + " methods disagree");
            }
        });
    }
    r.summary = "direct, radical chain and divisor product, n <= " + std::to_string(limit);
    return r;
}

CheckResult checkRealSubfield(const std::vector<std::uint64_t>& conductors, const PrecisionContext& ctx)
{
    CheckResult r{"real subfield cond > 2^(phi/2 - 1)"};
    std::ostringstream out;
    for (std::uint64_t n : conductors) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CondReport rep = realSubfieldCond(n, ctx);
            const mp::Real threshold = mp::Real::pow2(rep.cond.bits(), static_cast<long>(rep.m) - 1);
            out << " n=" << n << ":" << rep.cond.toString(8) << ">" << threshold.toString(3);
            if (!(rep.cond > threshold))
                r.fail("n=" + std::to_string(n) + " cond=" + rep.cond.toString(12));
        });
    }
    r.summary = out.str().empty() ? "" : out.str().substr(1);
    return r;
}

// ---------------------------------------------------------------- bounds

CheckResult checkBoundLadder(std::uint64_t limit, unsigned threads)
{
    CheckResult r{"cond below every applicable bound"};
    struct Row {
        std::optional<BoundSet> set;
        std::string error;
    };
    std::vector<Row> rows(limit + 1);
    if (limit >= 2)
        parallelFor(limit - 1, threads, [&](unsigned, std::size_t i) {
            const std::uint64_t n = i + 2;
            try {
                const Factored f = factor(n);
                const CycloData c = cyclotomic(n);
                const CondReport rep = conditionNumber(n, defaultContext(n));
                rows[n].set = tightestBound(f, c, rep);
            } catch (const std::exception& e) {
                rows[n].error = e.what();
            }
        });

    double minMargin = INFINITY;
    std::uint64_t minMarginN = 0;
    std::uint64_t comparisons = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        ++r.cases;
        const Row& row = rows[n];
        if (!row.set) {
            r.fail("n=" + std::to_string(n) + ": " + row.error);
            continue;
        }
        for (const auto& e : row.set->entries) {
            if (!e.applicable)
                continue;
            ++comparisons;
            if (*e.slackLog10 < minMargin) {
                minMargin = *e.slackLog10;
                minMarginN = n;
            }
        }
        for (BoundId id : row.set->violations) {
            const auto& e = row.set->entry(id);
            r.fail("n=" + std::to_string(n) + " " + std::string(boundWireId(id)) + " log10 bound " +
                   fmt(*e.log10Value, 10) + " < log10 cond " + fmt(*row.set->condLog10, 10));
        }
    }
    r.summary = "n = 2.." + std::to_string(limit) + ", " + std::to_string(comparisons) +
                " applicable comparisons, smallest log10 slack " + fmt(minMargin) + " at n=" +
                std::to_string(minMarginN);
    return r;
}

CheckResult checkEntryBound(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"|w_ij| <= rad (A+1) / |Phi_rad'|, and with 2A"};
    double worstPlus = 0.0;
    double worstTwice = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const EntryBoundCheck e = entryBoundCheck(n, ctx);
            worstPlus = std::max(worstPlus, e.maxRatioPlusOne);
            worstTwice = std::max(worstTwice, e.maxRatioTwice);
            if (e.violationsPlusOne > 0)
                r.fail("n=" + std::to_string(n) + " A+1 form ratio " + fmt(e.maxRatioPlusOne));
            if (e.violationsTwice > 0)
                r.fail("n=" + std::to_string(n) + " 2A form ratio " + fmt(e.maxRatioTwice));
        });
    }
    r.summary = "n = 2.." + std::to_string(limit) + ", max |w|/bound " + fmt(worstPlus) + " (A+1), " +
                fmt(worstTwice) + " (2A)";
    return r;
}

CheckResult checkPrimePowerEntries(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"|w_ij| <= 4 for odd prime powers"};
    double worst = 0.0;
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        const Factored f = factor(n);
        if (f.factors.size() != 1)
            continue;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const RootList roots = primitiveRoots(n, ctx);
            const CMatrix w = inverseClosedForm(c, roots);
            for (std::size_t i = 0; i < w.rows(); ++i)
                for (std::size_t j = 0; j < w.cols(); ++j) {
                    ++r.cases;
                    const double a = w(i, j).abs().toDouble();
                    worst = std::max(worst, a);
                    if (a > 4.0)
                        r.fail("n=" + std::to_string(n) + " |w|=" + fmt(a));
                }
        });
    }
    r.summary = "odd p^l <= " + std::to_string(limit) + ", max |w_ij| " + fmt(worst);
    return r;
}

CheckResult checkTwoPrimeNumerators(std::uint64_t limit, const PrecisionContext& ctx)
{
    CheckResult r{"|e_i| <= m for odd p^r q^l"};
    double worst = 0.0;
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        const Factored f = factor(n);
        if (f.factors.size() != 2)
            continue;
        guarded(r, "n=" + std::to_string(n), [&] {
            const CycloData c = cyclotomic(n);
            const mp::Real tol = toleranceFor(ctx, c.m);
            const mp::Real m(ctx.bits(), static_cast<long>(c.m));
            const RootList roots = primitiveRoots(n, ctx);
            PolyWorkspace ws(c.poly, ctx);
            for (const auto& z : roots.roots) {
                const auto e = deflatedSymmetric(ws, z, ctx.bits());
                for (std::size_t i = 1; i < c.m; ++i) {
                    ++r.cases;
                    const mp::Real v = e[i].abs();
                    worst = std::max(worst, (v / m).toDouble());
                    if (v > m + tol)
                        r.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + " |e|=" + v.toString(8));
                }
            }
        });
    }
    r.summary = "odd n <= " + std::to_string(limit) + " with two primes, max |e_i|/m " + fmt(worst);
    return r;
}

CheckResult checkPrimePowerVsGeneral(std::uint64_t limit)
{
    CheckResult r{"prime-power bound below general bound"};
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!isPrime(p))
            continue;
        std::uint64_t q = p * p;
        for (unsigned l = 2; q <= limit; ++l) {
            ++r.cases;
            const double pp = boundPrimePower(p, l);
            const double g = boundGeneral(factor(q), cyclotomicHeight(q));
            if (!(pp < g))
                r.fail(std::to_string(p) + "^" + std::to_string(l));
            if (q > limit / p)
                break;
            q *= p;
        }
    }
    r.summary = "p^l <= " + std::to_string(limit) + ", l >= 2";
    return r;
}

CheckResult reportEnvelopes(std::uint64_t from, std::uint64_t to)
{
    CheckResult r{"asymptotic envelopes reported"};
    double maxHeightRatio = -INFINITY;
    std::uint64_t maxHeightN = 0;
    for (std::uint64_t n = from; n <= to; ++n) {
        ++r.cases;
        const double env = batemanEnvelope(n, kDefaultBatemanEps);
        if (!std::isfinite(env)) {
            r.fail("n=" + std::to_string(n) + " height envelope not finite");
            continue;
        }
        const double ratio = log10Big(cyclotomicHeight(n)) - env;
        if (ratio > maxHeightRatio) {
            maxHeightRatio = ratio;
            maxHeightN = n;
        }
    }
    const EnvelopeCrossover x = subexpCrossover(from, to);
    r.summary = "n = " + std::to_string(from) + ".." + std::to_string(to) +
                ", max log10(A / height envelope) " + fmt(maxHeightRatio) + " at n=" + std::to_string(maxHeightN) +
                "; condition envelope below general bound at " + std::to_string(x.countBelow) +
                " conductors, dominates from " + (x.dominatesFrom ? std::to_string(*x.dominatesFrom) : "nowhere");
    return r;
}

// ---------------------------------------------------------------- distortion

CheckResult checkDistortion(const std::vector<std::uint64_t>& conductors, std::uint64_t count, double sigma,
                            std::uint64_t seed, const PrecisionContext& ctx)
{
    CheckResult r{"distortion ratios within norms, reproducible"};
    std::ostringstream out;
    for (std::uint64_t n : conductors) {
        ++r.cases;
        guarded(r, "n=" + std::to_string(n), [&] {
            const DistortionStats a = measureDistortion(n, sigma, count, seed, ctx);
            const DistortionStats b = measureDistortion(n, sigma, count, seed, ctx);
            const std::string tag = "n=" + std::to_string(n);
            if (!a.roundTripWithinCond)
                r.fail(tag + " round trip " + fmt(a.maxRoundTrip, 17) + " > cond " + fmt(a.cond, 17));
            if (!a.forwardWithinFrobenius || a.maxForward > static_cast<double>(a.m))
                r.fail(tag + " forward " + fmt(a.maxForward, 17));
            if (!a.backwardWithinFrobenius)
                r.fail(tag + " backward " + fmt(a.maxBackward, 17) + " > " + fmt(a.frobVinv, 17));
            const bool same = a.meanForward == b.meanForward && a.maxForward == b.maxForward &&
                              a.meanBackward == b.meanBackward && a.maxBackward == b.maxBackward &&
                              a.maxRoundTrip == b.maxRoundTrip && a.skippedZero == b.skippedZero;
            if (!same)
                r.fail(tag + " repeat run differs");
            if (n == 1 && (a.maxForward != 1.0 || a.maxBackward != 1.0 || a.maxRoundTrip != 1.0))
                r.fail(tag + " ratios are not all 1");
            out << " " << tag << ": roundtrip " << fmt(a.maxRoundTrip) << " <= cond " << fmt(a.cond);
        });
    }
    r.summary = std::to_string(count) + " samples each;" + out.str();
    return r;
}

CheckResult checkSamplerVariance()
{
    CheckResult r{"sampler variance near sigma^2"};
    const double sigma = 3.2;
    const auto vs = sampleErrors(4, sigma, 1000, 12345);
    double sum = 0.0;
    double sq = 0.0;
    std::size_t cnt = 0;
    for (const auto& v : vs)
        for (long x : v) {
            sum += static_cast<double>(x);
            sq += static_cast<double>(x) * static_cast<double>(x);
            ++cnt;
        }
    r.cases = cnt;
    const double mean = sum / static_cast<double>(cnt);
    const double var = sq / static_cast<double>(cnt) - mean * mean;
    if (std::fabs(var - sigma * sigma) > 0.15 * sigma * sigma)
        r.fail("variance " + fmt(var));
    if (sampleErrors(4, sigma, 1000, 12345) != vs)
        r.fail("same seed gave different draws");
    r.summary = "m=4 sigma=3.2 count=1000: variance " + fmt(var) + " vs " + fmt(sigma * sigma);
    return r;
}

// ---------------------------------------------------------------- suites

std::string_view suiteName(Suite s)
{
    switch (s) {
    case Suite::Arith: return "arith";
    case Suite::Poly: return "poly";
    case Suite::Inverse: return "inverse";
    case Suite::Bounds: return "bounds";
    case Suite::Distortion: return "distortion";
    case Suite::All: return "all";
    }
    return "";
}

std::vector<CheckResult> runSuite(Suite s, const SuiteOptions& opts)
{
    const PrecisionContext ctx(opts.bits);
    std::vector<CheckResult> out;
    const bool all = s == Suite::All;
    if (all || s == Suite::Arith) {
        out.push_back(checkFactorization(10000));
        out.push_back(checkPhiMultiplicative(10000));
        out.push_back(checkDivisorSums(10000));
        out.push_back(checkRadical(10000));
    }
    if (all || s == Suite::Poly) {
        out.push_back(checkOracleEquivalence(20000));
        out.push_back(checkPrimePowerClosedForm(100000));
        out.push_back(checkHeight105());
        out.push_back(checkHeightRadical(100000));
        out.push_back(checkHeightSmallOmega(100000));
        out.push_back(checkBatemanHeight(100000));
        out.push_back(checkBangHeight(100000));
    }
    if (all || s == Suite::Inverse) {
        out.push_back(checkPowerOfTwoIsometry(10, ctx));
        out.push_back(checkFullRoots(64, ctx));
        out.push_back(checkClosedFormVsLU(200, ctx));
        out.push_back(checkSymmetricIdentities(500, ctx));
        out.push_back(checkNumeratorBound(500, ctx));
        out.push_back(checkDerivativeBound(2000, ctx));
        out.push_back(checkDerivativeMethods(300, ctx));
        out.push_back(checkRealSubfield({11, 13, 17, 19}, ctx));
    }
    if (all || s == Suite::Bounds) {
        out.push_back(checkBoundLadder(1500, opts.threads));
        out.push_back(checkEntryBound(500, ctx));
        out.push_back(checkPrimePowerEntries(500, ctx));
        out.push_back(checkTwoPrimeNumerators(500, ctx));
        out.push_back(checkPrimePowerVsGeneral(100000));
        out.push_back(reportEnvelopes(3, 20000));
    }
    if (all || s == Suite::Distortion) {
        out.push_back(checkDistortion({1, 8, 15, 105}, 1000, 3.2, 7, ctx));
        out.push_back(checkSamplerVariance());
    }
    return out;
}

}  // namespace cyclocond
