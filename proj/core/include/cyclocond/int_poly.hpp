#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclocond {

using BigInt = mpz_class;

/// Polynomial with arbitrary-precision integer coefficients in ascending
/// degree. Trailing zeros are always stripped; the zero polynomial has no
/// coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly fromSmall(const std::vector<std::int64_t>& coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Coefficient of x^i, zero beyond the degree.
    BigInt coeff(std::size_t i) const;

    IntPoly derivative() const;
    BigInt maxAbsCoeff() const;
    BigInt evaluate(const BigInt& x) const;

    /// Coefficients as machine integers when every one fits, else nullopt.
    std::optional<std::vector<long>> toLong() const;

    /// Human-readable form, e.g. "x^2 - x + 1".
    std::string toString() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.toString(); }

}  // namespace cyclocond
