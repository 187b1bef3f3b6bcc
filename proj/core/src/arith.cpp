#include "cyclocond/arith.hpp"

#include <algorithm>
#include <numeric>

#include "cyclocond/errors.hpp"

namespace cyclocond {

Factored factor(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("factor: n must be positive");

    Factored out;
    out.n = n;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0)
            continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (rest > 1)
        out.factors.push_back({rest, 1});
    return out;
}

bool isPrime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t eulerPhi(const Factored& f)
{
    std::uint64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i)
            phi *= p;
    }
    return phi;
}

std::uint64_t radical(const Factored& f)
{
    std::uint64_t r = 1;
    for (const auto& pp : f.factors)
        r *= pp.prime;
    return r;
}

unsigned omega(const Factored& f)
{
    return static_cast<unsigned>(f.factors.size());
}

int moebius(const Factored& f)
{
    for (const auto& pp : f.factors)
        if (pp.exponent > 1)
            return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(const Factored& f)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool isSquarefree(const Factored& f)
{
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

}  // namespace cyclocond
