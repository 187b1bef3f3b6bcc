#include "cyclocond/vandermonde.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include "cyclocond/arith.hpp"
#include "cyclocond/errors.hpp"
#include "cyclocond/parallel.hpp"

namespace cyclocond {

namespace {

void validateConductor(std::uint64_t n, std::uint64_t limit, const char* what)
{
    if (n == 0 || n > limit)
        throw DomainError(std::string(what) + ": conductor must lie in [1, " + std::to_string(limit) +
                          "], got " + std::to_string(n));
}

// Frobenius norm of the matrix whose (j, p) entry is table[(e_j * p) mod n],
// p = 0..cols-1, using a residue histogram instead of touching every entry.
mp::Real frobeniusFromExponents(const std::vector<mp::Complex>& table,
                                const std::vector<std::uint64_t>& exps, std::size_t cols)
{
    const std::uint64_t n = table.size();
    std::vector<std::uint64_t> count(n, 0);
    for (std::uint64_t e : exps) {
        std::uint64_t r = 0;
        const std::uint64_t step = e % n;
        for (std::size_t p = 0; p < cols; ++p) {
            ++count[r];
            r += step;
            if (r >= n)
                r -= n;
        }
    }
    const unsigned bits = table.front().bits();
    mp::Real sum(bits);
    mp::Real term(bits);
    for (std::uint64_t r = 0; r < n; ++r) {
        if (count[r] == 0)
            continue;
        mpfr_fmma(term.get(), table[r].re.get(), table[r].re.get(), table[r].im.get(), table[r].im.get(),
                  MPFR_RNDN);
        mpfr_mul_ui(term.get(), term.get(), count[r], MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    return mp::sqrt(sum);
}

struct NormPair {
    mp::Real frobV;
    mp::Real frobVinv;
};

// Sum over the given nodes of weight * ||deflate(f, z)||^2 / |f'(z)|^2.
mp::Real lagrangeInverseNormSquared(const IntPoly& f, const std::vector<const mp::Complex*>& nodes,
                                    const std::vector<unsigned>& weights, const PrecisionContext& ctx,
                                    unsigned threads)
{
    std::vector<std::optional<mp::Real>> partial(nodes.size());
    std::vector<std::optional<PolyWorkspace>> workspaces(std::max(1u, threads));
    parallelFor(nodes.size(), threads, [&](unsigned worker, std::size_t j) {
        auto& ws = workspaces[worker];
        if (!ws)
            ws.emplace(f, ctx);
        mp::Real col = ws->deflatedNormSquared(*nodes[j]);
        mp::Real den = ws->evaluateDerivative(*nodes[j]).norm();
        if (den.isZero())
            throw PrecisionError("derivative vanished at a node");
        mpfr_div(col.get(), col.get(), den.get(), MPFR_RNDN);
        mpfr_mul_ui(col.get(), col.get(), weights[j], MPFR_RNDN);
        partial[j] = std::move(col);
    });
    mp::Real sum(ctx.bits());
    for (const auto& p : partial)
        sum += *p;
    return sum;
}

double relativeChange(const mp::Real& base, const mp::Real& refined)
{
    mp::Real diff = mp::abs(base - refined);
    if (refined.isZero())
        return diff.isZero() ? 0.0 : INFINITY;
    return (diff / mp::abs(refined)).toDouble();
}

void requireVerificationHeadroom(const PrecisionContext& pc)
{
    if (pc.bits() * 2 > precisionCeiling())
        throw PrecisionCeilingError("precision ceiling of " + std::to_string(precisionCeiling()) +
                                    " bits leaves no room for the doubled-precision check at " +
                                    std::to_string(pc.bits()) + " bits");
}

CondReport trivialReport(std::uint64_t n, unsigned bits, CondMethod method)
{
    CondReport r;
    r.n = n;
    r.m = 1;
    r.frobV = mp::Real(bits, 1L);
    r.frobVinv = mp::Real(bits, 1L);
    r.cond = mp::Real(bits, 1L);
    r.method = method;
    r.bits = bits;
    r.relErr = 0.0;
    return r;
}

// Runs `compute` at pc and 2 pc and packages the base result with the
// observed relative change. Non-convergence is reported as PrecisionError so
// the escalation loop retries.
template <typename Compute>
CondReport convergedReport(std::uint64_t n, std::uint64_t m, CondMethod method, const PrecisionContext& start,
                           Compute&& compute)
{
    return withEscalation(start, [&](const PrecisionContext& pc) {
        requireVerificationHeadroom(pc);
        NormPair base = compute(pc);
        NormPair fine = compute(pc.doubled());
        mp::Real condBase = base.frobV * base.frobVinv;
        mp::Real condFine = fine.frobV * fine.frobVinv;
        const double rel = relativeChange(condBase, condFine);
        if (!(rel <= kConvergenceTolerance))
            throw PrecisionError("condition number changed by " + std::to_string(rel) +
                                 " relative under doubled precision");
        CondReport r;
        r.n = n;
        r.m = m;
        r.frobV = std::move(base.frobV);
        r.frobVinv = std::move(base.frobVinv);
        r.cond = std::move(condBase);
        r.method = method;
        r.bits = pc.bits();
        r.relErr = rel;
        return r;
    });
}

}  // namespace

std::string_view condMethodName(CondMethod m)
{
    return m == CondMethod::ClosedForm ? "closed-form" : "lu-oracle";
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, unsigned bits)
    : rows_(rows), cols_(cols), bits_(bits), data_(rows * cols, mp::Complex(bits))
{
}

CMatrix CMatrix::identity(std::size_t size, unsigned bits)
{
    CMatrix out(size, size, bits);
    for (std::size_t i = 0; i < size; ++i)
        mpfr_set_ui(out(i, i).re.get(), 1, MPFR_RNDN);
    return out;
}

CMatrix CMatrix::conjugateTranspose() const
{
    CMatrix out(cols_, rows_, bits_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i).re = (*this)(i, j).re;
            mpfr_neg(out(j, i).im.get(), (*this)(i, j).im.get(), MPFR_RNDN);
        }
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix product: inner dimensions differ");
    const unsigned bits = std::max(a.bits(), b.bits());
    CMatrix out(a.rows(), b.cols(), bits);
    mp::Real tre(bits), tim(bits);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mp::Complex& x = a(i, k);
            if (x.re.isZero() && x.im.isZero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mp::Complex& y = b(k, j);
                mp::Complex& z = out(i, j);
                mpfr_fmms(tre.get(), x.re.get(), y.re.get(), x.im.get(), y.im.get(), MPFR_RNDN);
                mpfr_fmma(tim.get(), x.re.get(), y.im.get(), x.im.get(), y.re.get(), MPFR_RNDN);
                mpfr_add(z.re.get(), z.re.get(), tre.get(), MPFR_RNDN);
                mpfr_add(z.im.get(), z.im.get(), tim.get(), MPFR_RNDN);
            }
        }
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matrix difference: shapes differ");
    CMatrix out(a.rows(), a.cols(), std::max(a.bits(), b.bits()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix buildV(const RootList& r)
{
    const std::size_t m = r.size();
    const unsigned bits = r.context.bits();
    const auto table = unityTable(r.n, r.context);
    CMatrix v(m, m, bits);
    for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t e = 0;
        for (std::size_t p = 0; p < m; ++p) {
            v(j, p) = table[e];
            e = (e + r.exponents[j]) % r.n;
        }
    }
    return v;
}

mp::Real frobNorm(const CMatrix& a)
{
    mp::Real sum(a.bits());
    mp::Real term(a.bits());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mp::Complex& z = a(i, j);
            mpfr_fmma(term.get(), z.re.get(), z.re.get(), z.im.get(), z.im.get(), MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        }
    return mp::sqrt(sum);
}

mp::Real maxAbsDifference(const CMatrix& a, const CMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("maxAbsDifference: shapes differ");
    mp::Real best(std::max(a.bits(), b.bits()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mp::Real d = (a(i, j) - b(i, j)).abs();
            if (d > best)
                best = d;
        }
    return best;
}

CMatrix inverseClosedForm(const CycloData& c, const RootList& r)
{
    if (c.n != r.n)
        throw DomainError("inverseClosedForm: root list conductor does not match");
    const std::size_t m = r.size();
    const unsigned bits = r.context.bits();
    CMatrix inv(m, m, bits);
    if (m == 1) {
        // V = [1] for n = 1, 2
        mpfr_set_ui(inv(0, 0).re.get(), 1, MPFR_RNDN);
        return inv;
    }
    PolyWorkspace ws(c.poly, r.context);
    for (std::size_t j = 0; j < m; ++j) {
        const mp::Complex& z = r.roots[j];
        mp::Complex rem = ws.deflate(z, [&](std::size_t i, const mp::Real& re, const mp::Real& im) {
            inv(i, j) = mp::Complex(re, im);
        });
        ws.checkRemainder(rem);
        const mp::Complex d = ws.evaluateDerivative(z);
        for (std::size_t i = 0; i < m; ++i)
            inv(i, j) = inv(i, j) / d;
    }
    return inv;
}

CMatrix inverseLU(const CMatrix& a)
{
    if (a.rows() != a.cols())
        throw DomainError("inverseLU: matrix must be square");
    const std::size_t m = a.rows();
    const unsigned bits = a.bits();
    const PrecisionContext ctx(std::max(bits, PrecisionContext::kMinBits));
    const mp::Real pivotFloor = ctx.tolerance(1.0);

    CMatrix w = a;
    CMatrix inv = CMatrix::identity(m, bits);
    mp::Real tre(bits), tim(bits), best(bits), mag(bits);

    auto axpy = [&](mp::Complex& target, const mp::Complex& f, const mp::Complex& x) {
        // target -= f * x
        mpfr_fmms(tre.get(), f.re.get(), x.re.get(), f.im.get(), x.im.get(), MPFR_RNDN);
        mpfr_fmma(tim.get(), f.re.get(), x.im.get(), f.im.get(), x.re.get(), MPFR_RNDN);
        mpfr_sub(target.re.get(), target.re.get(), tre.get(), MPFR_RNDN);
        mpfr_sub(target.im.get(), target.im.get(), tim.get(), MPFR_RNDN);
    };

    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        best = w(c, c).abs();
        for (std::size_t r = c + 1; r < m; ++r) {
            mag = w(r, c).abs();
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < pivotFloor)
            throw PrecisionError("inverseLU: pivot " + best.toString(6) + " below 2^-" +
                                 std::to_string(ctx.bits() / 2) + " in column " + std::to_string(c));
        if (pivot != c)
            for (std::size_t j = 0; j < m; ++j) {
                std::swap(w(c, j), w(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }

        const mp::Complex one(bits, 1.0, 0.0);
        const mp::Complex scale = one / w(c, c);
        for (std::size_t j = c; j < m; ++j)
            w(c, j) = w(c, j) * scale;
        for (std::size_t j = 0; j < m; ++j)
            inv(c, j) = inv(c, j) * scale;

        for (std::size_t r = 0; r < m; ++r) {
            if (r == c)
                continue;
            const mp::Complex f = w(r, c);
            if (f.re.isZero() && f.im.isZero())
                continue;
            for (std::size_t j = c; j < m; ++j)
                axpy(w(r, j), f, w(c, j));
            for (std::size_t j = 0; j < m; ++j)
                axpy(inv(r, j), f, inv(c, j));
        }
    }
    return inv;
}

CondReport conditionNumber(std::uint64_t n, const PrecisionContext& ctx, CondOptions opts)
{
    validateConductor(n, kMaxClosedFormConductor, "conditionNumber");
    if (n <= 2)
        return trivialReport(n, ctx.bits(), CondMethod::ClosedForm);

    const CycloData c = cyclotomic(n);
    std::vector<std::uint64_t> exps;
    for (std::uint64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1)
            exps.push_back(k);

    auto compute = [&](const PrecisionContext& pc) {
        const auto table = unityTable(n, pc);
        // Column n-k of the inverse is the conjugate of column k.
        std::vector<const mp::Complex*> nodes;
        std::vector<unsigned> weights;
        for (std::uint64_t k : exps)
            if (2 * k < n) {
                nodes.push_back(&table[k]);
                weights.push_back(2);
            }
        mp::Real inv = lagrangeInverseNormSquared(c.poly, nodes, weights, pc, opts.threads);
        return NormPair{frobeniusFromExponents(table, exps, c.m), mp::sqrt(inv)};
    };
    return convergedReport(n, c.m, CondMethod::ClosedForm, ctx, compute);
}

CondReport conditionNumberLU(std::uint64_t n, const PrecisionContext& ctx)
{
    validateConductor(n, kMaxLuConductor, "conditionNumberLU");
    if (n <= 2)
        return trivialReport(n, ctx.bits(), CondMethod::LuOracle);
    const std::uint64_t m = eulerPhi(factor(n));
    auto compute = [&](const PrecisionContext& pc) {
        const CMatrix v = buildV(primitiveRoots(n, pc));
        return NormPair{frobNorm(v), frobNorm(inverseLU(v))};
    };
    return convergedReport(n, m, CondMethod::LuOracle, ctx, compute);
}

mp::Real grammResidual(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n < 2 || (n & (n - 1)) != 0)
        throw DomainError("grammResidual: n must be a power of two >= 2, got " + std::to_string(n));
    const RootList r = primitiveRoots(n, ctx);
    const CMatrix v = buildV(r);
    const std::size_t m = r.size();
    const unsigned bits = ctx.bits();

    // (V V*)_{ij} = sum_p v_ip conj(v_jp); Hermitian, so only i <= j is formed.
    mp::Real sum(bits), tre(bits), tim(bits), term(bits);
    mp::Complex g(bits);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            mpfr_set_zero(g.re.get(), 1);
            mpfr_set_zero(g.im.get(), 1);
            for (std::size_t p = 0; p < m; ++p) {
                const mp::Complex& x = v(i, p);
                const mp::Complex& y = v(j, p);
                // x * conj(y)
                mpfr_fmma(tre.get(), x.re.get(), y.re.get(), x.im.get(), y.im.get(), MPFR_RNDN);
                mpfr_fmms(tim.get(), x.im.get(), y.re.get(), x.re.get(), y.im.get(), MPFR_RNDN);
                mpfr_add(g.re.get(), g.re.get(), tre.get(), MPFR_RNDN);
                mpfr_add(g.im.get(), g.im.get(), tim.get(), MPFR_RNDN);
            }
            if (i == j)
                mpfr_sub_ui(g.re.get(), g.re.get(), m, MPFR_RNDN);
            term = g.norm();
            if (i != j)
                mpfr_mul_2ui(term.get(), term.get(), 1, MPFR_RNDN);
            sum += term;
        }
    return mp::sqrt(sum);
}

CondReport fullRootsCond(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n == 0)
        throw DomainError("fullRootsCond: n must be positive");
    if (n == 1)
        return trivialReport(1, ctx.bits(), CondMethod::ClosedForm);

    // x^n - 1 has every n-th root of unity as a simple root.
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    coeffs.front() = -1;
    coeffs.back() = 1;
    const IntPoly f(std::move(coeffs));
    std::vector<std::uint64_t> exps(n);
    std::iota(exps.begin(), exps.end(), 0);

    auto compute = [&](const PrecisionContext& pc) {
        const auto table = unityTable(n, pc);
        std::vector<const mp::Complex*> nodes;
        for (const auto& z : table)
            nodes.push_back(&z);
        std::vector<unsigned> weights(n, 1);
        mp::Real inv = lagrangeInverseNormSquared(f, nodes, weights, pc, 1);
        return NormPair{frobeniusFromExponents(table, exps, n), mp::sqrt(inv)};
    };
    CondReport r = convergedReport(n, n, CondMethod::ClosedForm, ctx, compute);
    return r;
}

std::vector<mp::Real> realSubfieldNodes(std::uint64_t n, const PrecisionContext& ctx)
{
    std::vector<mp::Real> nodes;
    for (std::uint64_t k = 1; 2 * k <= n; ++k) {
        if (std::gcd(k, n) != 1)
            continue;
        mp::Real x = unityRoot(k, n, ctx).re;
        mpfr_mul_2ui(x.get(), x.get(), 1, MPFR_RNDN);
        nodes.push_back(std::move(x));
    }
    return nodes;
}

CondReport realSubfieldCond(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n <= 4)
        throw DomainError("realSubfieldCond: n must exceed 4, got " + std::to_string(n));
    const std::uint64_t d = eulerPhi(factor(n)) / 2;
    if (d > kRealSubfieldMaxDegree)
        throw DomainError("realSubfieldCond: phi(n)/2 = " + std::to_string(d) + " exceeds " +
                          std::to_string(kRealSubfieldMaxDegree));

    auto compute = [&](const PrecisionContext& pc) {
        const auto nodes = realSubfieldNodes(n, pc);
        CMatrix v(d, d, pc.bits());
        for (std::size_t i = 0; i < d; ++i) {
            mp::Real power(pc.bits(), 1L);
            for (std::size_t j = 0; j < d; ++j) {
                v(i, j).re = power;
                power *= nodes[i];
            }
        }
        return NormPair{frobNorm(v), frobNorm(inverseLU(v))};
    };
    const PrecisionContext start(std::max(ctx.bits(), kRealSubfieldMinBits));
    return convergedReport(n, d, CondMethod::LuOracle, start, compute);
}

}  // namespace cyclocond
