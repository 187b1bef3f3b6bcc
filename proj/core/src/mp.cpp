#include "cyclocond/mp.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <utility>
#include <vector>

namespace cyclocond::mp {

namespace {

bool live(const __mpfr_struct* v)
{
    return v->_mpfr_d != nullptr;
}

unsigned widest(const Real& a, const Real& b)
{
    return std::max(a.bits(), b.bits());
}

}  // namespace

Real::Real(unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
}

Real::Real(unsigned bits, double v) : Real(bits)
{
    mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(unsigned bits, long v) : Real(bits)
{
    mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(unsigned bits, const mpz_class& v) : Real(bits)
{
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(unsigned bits, const std::string& decimal) : Real(bits)
{
    mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    std::memcpy(value_, other.value_, sizeof(value_));
    other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other)
{
    if (this == &other)
        return *this;
    if (!live(value_))
        mpfr_init2(value_, mpfr_get_prec(other.value_));
    else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_))
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_t tmp;
    std::memcpy(tmp, value_, sizeof(tmp));
    std::memcpy(value_, other.value_, sizeof(value_));
    std::memcpy(other.value_, tmp, sizeof(tmp));
    return *this;
}

Real::~Real()
{
    if (live(value_))
        mpfr_clear(value_);
}

double Real::log10Abs() const
{
    if (mpfr_zero_p(value_))
        return -std::numeric_limits<double>::infinity();
    Real t(bits());
    mpfr_abs(t.value_, value_, MPFR_RNDN);
    mpfr_log10(t.value_, t.value_, MPFR_RNDN);
    return t.toDouble();
}

std::string Real::toString(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

Real& Real::operator+=(const Real& o)
{
    if (o.bits() > bits())
        mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (o.bits() > bits())
        mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (o.bits() > bits())
        mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.bits() > bits())
        mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
    mpfr_div(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(widest(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(widest(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(widest(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(widest(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a)
{
    Real r(a.bits());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
}

Real Real::pi(unsigned bits)
{
    Real r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

Real Real::pow2(unsigned bits, long e)
{
    Real r(bits, 1L);
    mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x)
{
    Real r(x.bits());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real abs(const Real& x)
{
    Real r(x.bits());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b)
{
    return a < b ? b : a;
}

Real Complex::norm() const
{
    Real r(bits());
    mpfr_fmma(r.get(), re.get(), re.get(), im.get(), im.get(), MPFR_RNDN);
    return r;
}

Real Complex::abs() const
{
    Real r(bits());
    mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    *this = *this * o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b)
{
    return {a.re + b.re, a.im + b.im};
}

Complex operator-(const Complex& a, const Complex& b)
{
    return {a.re - b.re, a.im - b.im};
}

Complex operator*(const Complex& a, const Complex& b)
{
    const unsigned bits = std::max(a.bits(), b.bits());
    Complex r(bits);
    mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    return r;
}

Complex operator*(const Complex& a, const Real& s)
{
    return {a.re * s, a.im * s};
}

Complex operator/(const Complex& a, const Complex& b)
{
    const Real den = b.norm();
    Complex num = a * b.conj();
    return {num.re / den, num.im / den};
}

Complex operator/(const Complex& a, const Real& s)
{
    return {a.re / s, a.im / s};
}

Complex pow(const Complex& z, std::uint64_t e)
{
    Complex result(z.bits(), 1.0, 0.0);
    Complex base = z;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

}  // namespace cyclocond::mp
