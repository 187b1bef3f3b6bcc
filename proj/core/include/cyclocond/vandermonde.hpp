#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/mp.hpp"
#include "cyclocond/numerics.hpp"

namespace cyclocond {

/// Dense row-major complex matrix at a fixed precision.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols, unsigned bits);

    static CMatrix identity(std::size_t size, unsigned bits);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned bits() const { return bits_; }

    mp::Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mp::Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix conjugateTranspose() const;

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    unsigned bits_;
    std::vector<mp::Complex> data_;
};

enum class CondMethod { ClosedForm, LuOracle };

std::string_view condMethodName(CondMethod m);

/// Frobenius condition number of a Vandermonde-type transformation.
struct CondReport {
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    mp::Real frobV;
    mp::Real frobVinv;
    mp::Real cond;
    CondMethod method = CondMethod::ClosedForm;
    unsigned bits = 0;
    /// |cond(bits) - cond(2 bits)| / cond(2 bits)
    double relErr = 0.0;

    double condLog10() const { return cond.log10Abs(); }
};

/// Row j is (1, zeta_j, ..., zeta_j^(m-1)) in RootList order.
CMatrix buildV(const RootList& r);

mp::Real frobNorm(const CMatrix& a);

/// V^{-1} from the Lagrange basis: column j is the deflation of Phi_n by
/// (x - zeta_j) divided by Phi_n'(zeta_j).
CMatrix inverseClosedForm(const CycloData& c, const RootList& r);

/// Gauss-Jordan elimination with row pivoting. Throws PrecisionError when a
/// pivot falls below 2^(-bits/2).
CMatrix inverseLU(const CMatrix& a);

/// Largest entrywise |a_ij - b_ij|.
mp::Real maxAbsDifference(const CMatrix& a, const CMatrix& b);

inline constexpr std::uint64_t kMaxClosedFormConductor = 5000;
inline constexpr std::uint64_t kMaxLuConductor = 300;
/// Relative change tolerated between the base and doubled-precision runs.
inline constexpr double kConvergenceTolerance = 1e-6;

struct CondOptions {
    unsigned threads = 1;
};

/// Closed-form condition number of V_{Phi_n}, 1 <= n <= 5000, with
/// precision escalation and a doubled-precision convergence check.
CondReport conditionNumber(std::uint64_t n, const PrecisionContext& ctx, CondOptions opts = {});

/// Same quantity through an explicit LU inverse (n <= 300).
CondReport conditionNumberLU(std::uint64_t n, const PrecisionContext& ctx);

/// ||V V^* - m I|| for n a power of two.
mp::Real grammResidual(std::uint64_t n, const PrecisionContext& ctx);

/// Condition number of the n x n Vandermonde over all n-th roots of unity.
CondReport fullRootsCond(std::uint64_t n, const PrecisionContext& ctx);

/// Nodes 2 cos(2 pi k / n), gcd(k, n) = 1, 1 <= k <= n/2, ascending k.
std::vector<mp::Real> realSubfieldNodes(std::uint64_t n, const PrecisionContext& ctx);

/// Condition number of the real Vandermonde on realSubfieldNodes(n).
/// Requires n > 4 and phi(n)/2 <= 24. Precision is raised to 512 bits.
CondReport realSubfieldCond(std::uint64_t n, const PrecisionContext& ctx);

inline constexpr unsigned kRealSubfieldMinBits = 512;
inline constexpr std::uint64_t kRealSubfieldMaxDegree = 24;

}  // namespace cyclocond
