#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace cyclocond::mp {

/// Owning wrapper around an MPFR float with an explicit binary precision.
/// Binary operators produce a result at the larger operand precision;
/// copy assignment adopts the source precision.
class Real {
public:
    explicit Real(unsigned bits = 53);
    Real(unsigned bits, double v);
    Real(unsigned bits, long v);
    Real(unsigned bits, const mpz_class& v);
    Real(unsigned bits, const std::string& decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    double toDouble() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// log10 of |x|, -inf for zero.
    double log10Abs() const;
    /// Scientific notation with `digits` significant digits.
    std::string toString(int digits = 20) const;

    bool isZero() const { return mpfr_zero_p(value_) != 0; }
    bool isFinite() const { return mpfr_number_p(value_) != 0; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }
    friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

    static Real pi(unsigned bits);
    /// 2^e at the given precision.
    static Real pow2(unsigned bits, long e);

private:
    mpfr_t value_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real max(const Real& a, const Real& b);

/// Complex number over two Reals of equal precision.
struct Complex {
    Real re;
    Real im;

    explicit Complex(unsigned bits = 53) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(unsigned bits, double r, double i) : re(bits, r), im(bits, i) {}

    unsigned bits() const { return re.bits(); }

    /// |z|^2
    Real norm() const;
    Real abs() const;
    Complex conj() const { return {re, -im}; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Real& s);
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Real& s);
};

/// z^e by binary powering.
Complex pow(const Complex& z, std::uint64_t e);

}  // namespace cyclocond::mp
