#include "cyclocond/int_poly.hpp"

#include <climits>
#include <sstream>

namespace cyclocond {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::fromSmall(const std::vector<std::int64_t>& coeffs)
{
    std::vector<BigInt> big;
    big.reserve(coeffs.size());
    for (std::int64_t c : coeffs)
        big.emplace_back(static_cast<long>(c));
    return IntPoly(std::move(big));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::maxAbsCoeff() const
{
    BigInt best = 0;
    for (const auto& c : coeffs_)
        if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0)
            best = abs(c);
    return best;
}

BigInt IntPoly::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::optional<std::vector<long>> IntPoly::toLong() const
{
    std::vector<long> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.fits_slong_p())
            return std::nullopt;
        out.push_back(c.get_si());
    }
    return out;
}

std::string IntPoly::toString() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0)
            os << mag.get_str();
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace cyclocond
