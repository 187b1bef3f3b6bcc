#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclocond/arith.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/errors.hpp"
#include "cyclocond/int_poly.hpp"
#include "cyclocond/mp.hpp"

namespace cyclocond {

/// Binary mantissa precision shared by every value of one computation.
class PrecisionContext {
public:
    static constexpr unsigned kMinBits = 53;

    explicit PrecisionContext(unsigned bits = 128);

    unsigned bits() const { return bits_; }
    PrecisionContext doubled() const { return PrecisionContext(bits_ * 2); }

    /// 2^(-bits/2) * scale, the tolerance used by residual checks.
    mp::Real tolerance(double scale) const;

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    unsigned bits_;
};

/// max(128, 4*ceil(log2 n) + 2*ceil(log2 m)).
unsigned defaultBits(std::uint64_t n, std::uint64_t m);
PrecisionContext defaultContext(std::uint64_t n);

/// Escalation ceiling: 4096 bits unless CYCLOCOND_MAX_BITS overrides it.
unsigned precisionCeiling();

/// Runs `attempt` at ctx, doubling the precision after every PrecisionError
/// until the ceiling is reached, then throws PrecisionCeilingError.
template <typename F>
auto withEscalation(PrecisionContext ctx, F&& attempt) -> decltype(attempt(ctx))
{
    for (;;) {
        try {
            return attempt(ctx);
        } catch (const PrecisionError& e) {
            if (ctx.bits() * 2 > precisionCeiling())
                throw PrecisionCeilingError(std::string("precision ceiling of ") +
                                            std::to_string(precisionCeiling()) +
                                            " bits exceeded: " + e.what());
            ctx = ctx.doubled();
        }
    }
}

/// exp(2 pi i r / n). Conjugate exponents r and n - r give exactly conjugate
/// values; quarter turns are exact.
mp::Complex unityRoot(std::uint64_t r, std::uint64_t n, const PrecisionContext& ctx);

/// All n-th roots of unity, index r holding exp(2 pi i r / n).
std::vector<mp::Complex> unityTable(std::uint64_t n, const PrecisionContext& ctx);

/// Primitive n-th roots exp(2 pi i k / n), k ascending over 1 <= k <= n
/// coprime to n.
struct RootList {
    std::uint64_t n = 1;
    PrecisionContext context;
    std::vector<std::uint64_t> exponents;
    std::vector<mp::Complex> roots;

    std::size_t size() const { return roots.size(); }
};

RootList primitiveRoots(std::uint64_t n, const PrecisionContext& ctx);

/// Horner evaluation and synthetic division of one integer polynomial at
/// many complex points. Holds its scratch values so hot loops do not
/// allocate.
class PolyWorkspace {
public:
    PolyWorkspace(const IntPoly& p, const PrecisionContext& ctx);

    const PrecisionContext& context() const { return ctx_; }
    int degree() const { return poly_.degree(); }

    mp::Complex evaluate(const mp::Complex& z);
    mp::Complex evaluateDerivative(const mp::Complex& z);

    /// Synthetic division by (x - z). `sink(i, re, im)` receives the
    /// quotient coefficient of x^i for i = deg-1 down to 0. Returns the
    /// remainder p(z).
    template <typename Sink>
    mp::Complex deflate(const mp::Complex& z, Sink&& sink);

    /// Sum of |q_i|^2 over the quotient of p by (x - z). Throws
    /// PrecisionError when the remainder exceeds 2^(-bits/2) * deg.
    mp::Real deflatedNormSquared(const mp::Complex& z);

    /// Throws PrecisionError when |remainder| > 2^(-bits/2) * deg.
    void checkRemainder(const mp::Complex& remainder) const;

private:
    void addCoefficient(mpfr_ptr target, std::size_t k, bool derivative);
    void step(const mp::Complex& z);

    IntPoly poly_;
    IntPoly deriv_;
    PrecisionContext ctx_;
    std::vector<long> small_;
    std::vector<long> smallDeriv_;
    bool useSmall_ = false;
    bool useSmallDeriv_ = false;
    mp::Real tolerance_;
    mp::Complex acc_;
    mp::Real nre_, nim_, scratch_;
};

template <typename Sink>
mp::Complex PolyWorkspace::deflate(const mp::Complex& z, Sink&& sink)
{
    const int m = poly_.degree();
    if (m < 1)
        throw DomainError("deflate: polynomial must have positive degree");
    mpfr_set_zero(acc_.im.get(), 1);
    mpfr_set_zero(acc_.re.get(), 1);
    addCoefficient(acc_.re.get(), static_cast<std::size_t>(m), false);
    for (int k = m - 1; k >= 0; --k) {
        sink(static_cast<std::size_t>(k), acc_.re, acc_.im);
        step(z);
        addCoefficient(acc_.re.get(), static_cast<std::size_t>(k), false);
    }
    return acc_;
}

/// p(z) by Horner's scheme at ctx precision.
mp::Complex hornerEval(const IntPoly& p, const mp::Complex& z, const PrecisionContext& ctx);

enum class DerivativeMethod {
    Direct,        ///< Horner on the formal derivative of Phi_n
    RadicalChain,  ///< (n/R) zeta^(n/R - 1) Phi_R'(zeta^(n/R)), R = rad(n)
    /// n zeta^(n-1) prod_{d | n, d < n} (zeta^d - 1)^mu(n/d); O(#divisors)
    DivisorProduct,
};

/// Phi_n'(zeta) for a primitive n-th root zeta.
mp::Complex derivativeAtRoot(const CycloData& c, const Factored& f, const mp::Complex& zeta,
                             const PrecisionContext& ctx,
                             DerivativeMethod method = DerivativeMethod::Direct);

/// Coefficients (ascending) of p(x) / (x - zeta). Throws PrecisionError when
/// the discarded remainder exceeds 2^(-bits/2) * deg p.
std::vector<mp::Complex> deflate(const IntPoly& p, const mp::Complex& zeta, const PrecisionContext& ctx);

}  // namespace cyclocond
