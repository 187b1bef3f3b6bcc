#include "cyclocond/cyclopoly.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "cyclocond/arith.hpp"
#include "cyclocond/errors.hpp"

namespace cyclocond {

namespace {

constexpr std::int64_t kSafeLimit = std::int64_t{1} << 62;

std::uint64_t absValue(std::int64_t v)
{
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

// Coefficients of an odd squarefree cyclotomic polynomial. `big` is used only
// once 64-bit arithmetic could overflow.
struct Kernel {
    std::vector<std::int64_t> small;
    std::vector<BigInt> big;
    bool isBig = false;

    std::size_t size() const { return isBig ? big.size() : small.size(); }
};

using KernelPtr = std::shared_ptr<const Kernel>;

class KernelCache {
public:
    static constexpr std::size_t kCoefficientBudget = std::size_t{1} << 23;

    KernelPtr find(std::uint64_t r)
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(r);
        return it == entries_.end() ? nullptr : it->second;
    }

    void insert(std::uint64_t r, KernelPtr k)
    {
        std::lock_guard lock(mutex_);
        if (entries_.count(r) != 0 || k->size() > kCoefficientBudget)
            return;
        held_ += k->size();
        entries_.emplace(r, std::move(k));
        order_.push_back(r);
        while (held_ > kCoefficientBudget && !order_.empty()) {
            auto victim = entries_.find(order_.front());
            held_ -= victim->second->size();
            entries_.erase(victim);
            order_.pop_front();
        }
    }

    std::optional<BigInt> findHeight(std::uint64_t r)
    {
        std::lock_guard lock(mutex_);
        auto it = heights_.find(r);
        if (it == heights_.end())
            return std::nullopt;
        return it->second;
    }

    void insertHeight(std::uint64_t r, const BigInt& h)
    {
        std::lock_guard lock(mutex_);
        heights_.emplace(r, h);
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        entries_.clear();
        order_.clear();
        heights_.clear();
        held_ = 0;
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::uint64_t, KernelPtr> entries_;
    std::unordered_map<std::uint64_t, BigInt> heights_;
    std::deque<std::uint64_t> order_;
    std::size_t held_ = 0;
};

KernelCache& cache()
{
    static KernelCache instance;
    return instance;
}

template <typename T>
std::vector<T> substitute(const std::vector<T>& c, std::uint64_t power)
{
    if (power == 1 || c.empty())
        return c;
    std::vector<T> out((c.size() - 1) * power + 1, T(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i * power] = c[i];
    return out;
}

std::vector<BigInt> toBig(const std::vector<std::int64_t>& c)
{
    std::vector<BigInt> out;
    out.reserve(c.size());
    for (std::int64_t v : c)
        out.emplace_back(static_cast<long>(v));
    return out;
}

// Phi_r for odd squarefree r > 1.
KernelPtr oddSquarefreeKernel(std::uint64_t r)
{
    if (auto hit = cache().find(r))
        return hit;

    auto out = std::make_shared<Kernel>();
    const Factored f = factor(r);
    if (f.factors.size() == 1) {
        out->small.assign(r, 1);
    } else {
        const std::uint64_t p = f.factors.back().prime;
        const std::uint64_t rest = r / p;
        KernelPtr base = oddSquarefreeKernel(rest);

        std::optional<std::vector<std::int64_t>> q;
        if (!base->isBig)
            q = detail::divideExactSmall(substitute(base->small, p), base->small);
        if (q) {
            out->small = std::move(*q);
        } else {
            std::vector<BigInt> b = base->isBig ? base->big : toBig(base->small);
            out->big = detail::divideExactBig(substitute(b, p), b);
            out->isBig = true;
        }
    }

    cache().insert(r, out);
    return out;
}

BigInt kernelHeight(const Kernel& k)
{
    if (k.isBig) {
        BigInt best = 0;
        for (const auto& c : k.big)
            if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0)
                best = abs(c);
        return best;
    }
    std::uint64_t best = 0;
    for (std::int64_t c : k.small)
        best = std::max(best, absValue(c));
    return BigInt(static_cast<unsigned long>(best));
}

void checkConductor(std::uint64_t n, std::uint64_t limit, const char* what)
{
    if (n == 0 || n > limit)
        throw DomainError(std::string(what) + ": conductor must lie in [1, " + std::to_string(limit) +
                          "], got " + std::to_string(n));
}

}  // namespace

namespace detail {

std::optional<std::vector<std::int64_t>> divideExactSmall(const std::vector<std::int64_t>& dividend,
                                                          const std::vector<std::int64_t>& divisor)
{
    if (divisor.empty() || divisor.front() == 0)
        throw DomainError("divideExact: divisor must have a nonzero constant term");
    if (dividend.size() < divisor.size())
        throw InconsistencyError("divideExact: dividend degree below divisor degree");

    const std::size_t ld = divisor.size();
    const std::size_t lq = dividend.size() - ld + 1;
    const std::int64_t d0 = divisor.front();

    std::uint64_t l1 = 0;
    std::size_t nonzero = 0;
    for (std::size_t j = 1; j < ld; ++j) {
        l1 += absValue(divisor[j]);
        nonzero += divisor[j] != 0;
        if (l1 > static_cast<std::uint64_t>(kSafeLimit))
            return std::nullopt;
    }
    std::uint64_t amax = 0;
    for (std::int64_t a : dividend)
        amax = std::max(amax, absValue(a));
    if (amax >= static_cast<std::uint64_t>(kSafeLimit))
        return std::nullopt;
    const std::uint64_t qLimit = l1 == 0 ? std::numeric_limits<std::uint64_t>::max()
                                         : (static_cast<std::uint64_t>(kSafeLimit) - amax) / l1;

    // Dense divisors use a contiguous dot product against the reversed
    // divisor; sparse ones walk their nonzero taps.
    const bool dense = 2 * nonzero >= ld - 1;
    std::vector<std::int64_t> reversed;
    std::vector<std::pair<std::size_t, std::int64_t>> taps;
    if (dense) {
        reversed.assign(divisor.rbegin(), divisor.rend());
    } else {
        for (std::size_t j = 1; j < ld; ++j)
            if (divisor[j] != 0)
                taps.emplace_back(j, divisor[j]);
    }

    std::vector<std::int64_t> q(lq, 0);
    std::uint64_t qmax = 0;
    auto convolve = [&](std::size_t i) -> std::int64_t {
        // sum over j >= 1 with 0 <= i - j < lq of divisor[j] * q[i - j]
        const std::size_t jLo = i >= lq ? i - lq + 1 : 1;
        const std::size_t jHi = std::min(i, ld - 1);
        if (jLo > jHi)
            return 0;
        if (dense) {
            const std::size_t tLo = i - jHi;
            const std::size_t tHi = i - jLo;
            const std::size_t offset = (ld - 1) - i;
            std::int64_t acc = 0;
            for (std::size_t t = tLo; t <= tHi; ++t)
                acc += q[t] * reversed[t + offset];
            return acc;
        }
        std::int64_t acc = 0;
        for (const auto& [j, dj] : taps) {
            if (j < jLo)
                continue;
            if (j > jHi)
                break;
            acc += dj * q[i - j];
        }
        return acc;
    };

    for (std::size_t i = 0; i < lq; ++i) {
        if (qmax > qLimit)
            return std::nullopt;
        const std::int64_t t = dividend[i] - convolve(i);
        if (t % d0 != 0)
            throw InconsistencyError("divideExact: quotient is not integral");
        q[i] = t / d0;
        qmax = std::max(qmax, absValue(q[i]));
    }
    if (qmax > qLimit)
        return std::nullopt;
    for (std::size_t i = lq; i < dividend.size(); ++i)
        if (dividend[i] - convolve(i) != 0)
            throw InconsistencyError("divideExact: nonzero remainder");
    return q;
}

std::vector<BigInt> divideExactBig(const std::vector<BigInt>& dividend, const std::vector<BigInt>& divisor)
{
    if (divisor.empty() || divisor.front() == 0)
        throw DomainError("divideExact: divisor must have a nonzero constant term");
    if (dividend.size() < divisor.size())
        throw InconsistencyError("divideExact: dividend degree below divisor degree");

    const std::size_t ld = divisor.size();
    const std::size_t lq = dividend.size() - ld + 1;
    std::vector<std::size_t> taps;
    for (std::size_t j = 1; j < ld; ++j)
        if (divisor[j] != 0)
            taps.push_back(j);

    std::vector<BigInt> q(lq);
    BigInt t;
    auto residual = [&](std::size_t i) {
        t = dividend[i];
        for (std::size_t j : taps) {
            if (j > i)
                break;
            if (i - j < lq)
                t -= divisor[j] * q[i - j];
        }
    };
    for (std::size_t i = 0; i < lq; ++i) {
        residual(i);
        if (!mpz_divisible_p(t.get_mpz_t(), divisor.front().get_mpz_t()))
            throw InconsistencyError("divideExact: quotient is not integral");
        q[i] = t / divisor.front();
    }
    for (std::size_t i = lq; i < dividend.size(); ++i) {
        residual(i);
        if (t != 0)
            throw InconsistencyError("divideExact: nonzero remainder");
    }
    return q;
}

}  // namespace detail

CycloData cyclotomic(std::uint64_t n)
{
    checkConductor(n, kMaxCyclotomicConductor, "cyclotomic");

    CycloData out;
    out.n = n;
    if (n == 1) {
        out.m = 1;
        out.poly = IntPoly{-1, 1};
        out.height = 1;
        return out;
    }

    const Factored f = factor(n);
    out.m = eulerPhi(f);
    const std::uint64_t rad = radical(f);
    const std::uint64_t stretch = n / rad;
    const bool even = rad % 2 == 0;
    const std::uint64_t core = even ? rad / 2 : rad;

    std::vector<BigInt> coeffs;
    if (core == 1) {
        coeffs = {BigInt(1), BigInt(1)};  // Phi_2 = x + 1
    } else {
        KernelPtr k = oddSquarefreeKernel(core);
        coeffs = k->isBig ? k->big : toBig(k->small);
        if (even)
            for (std::size_t i = 1; i < coeffs.size(); i += 2)
                coeffs[i] = -coeffs[i];
    }
    out.poly = IntPoly(substitute(coeffs, stretch));
    out.height = out.poly.maxAbsCoeff();
    return out;
}

BigInt cyclotomicHeight(std::uint64_t n)
{
    checkConductor(n, kMaxCyclotomicConductor, "cyclotomicHeight");
    std::uint64_t core = radical(factor(n));
    if (core % 2 == 0)
        core /= 2;
    if (core == 1)
        return 1;
    if (auto h = cache().findHeight(core))
        return *h;
    BigInt h = kernelHeight(*oddSquarefreeKernel(core));
    cache().insertHeight(core, h);
    return h;
}

BigInt heightA(const CycloData& c)
{
    return c.poly.maxAbsCoeff();
}

void clearCyclotomicCache()
{
    cache().clear();
}

IntPoly primePowerClosedForm(std::uint64_t p, unsigned k)
{
    if (!isPrime(p))
        throw DomainError("primePowerClosedForm: " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw DomainError("primePowerClosedForm: exponent must be positive");

    std::uint64_t stride = 1;
    for (unsigned i = 1; i < k; ++i) {
        if (stride > kMaxCyclotomicConductor)
            throw DomainError("primePowerClosedForm: degree too large");
        stride *= p;
    }
    if (stride > kMaxCyclotomicConductor)
        throw DomainError("primePowerClosedForm: degree too large");

    if (p == 2) {
        std::vector<BigInt> c(stride + 1, BigInt(0));
        c.front() = 1;
        c.back() = 1;
        return IntPoly(std::move(c));
    }
    std::vector<BigInt> c((p - 1) * stride + 1, BigInt(0));
    for (std::uint64_t i = 0; i < p; ++i)
        c[i * stride] = 1;
    return IntPoly(std::move(c));
}

namespace {

struct Binomial {
    std::size_t power;  // x^power - 1
};

template <typename T>
struct CheckedOps;

template <>
struct CheckedOps<std::int64_t> {
    struct Overflow {};
    static std::int64_t sub(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
};

template <>
struct CheckedOps<BigInt> {
    struct Overflow {};
    static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

template <typename T>
std::vector<T> moebiusProduct(const std::vector<Binomial>& numer, const std::vector<Binomial>& denom)
{
    using Ops = CheckedOps<T>;
    std::vector<T> p{T(1)};
    for (const auto& b : numer) {
        const std::size_t a = b.power;
        std::vector<T> next(p.size() + a, T(0));
        for (std::size_t i = 0; i < next.size(); ++i) {
            const T hi = i >= a ? p[i - a] : T(0);
            const T lo = i < p.size() ? p[i] : T(0);
            next[i] = Ops::sub(hi, lo);
        }
        p = std::move(next);
    }
    for (const auto& b : denom) {
        const std::size_t a = b.power;
        if (p.size() <= a)
            throw InconsistencyError("cyclotomicOracle: divisor degree exceeds dividend degree");
        const std::size_t lq = p.size() - a;
        std::vector<T> q(lq, T(0));
        // p = q * (x^a - 1)  =>  q_i = q_{i-a} - p_i
        for (std::size_t i = 0; i < lq; ++i)
            q[i] = Ops::sub(i >= a ? q[i - a] : T(0), p[i]);
        for (std::size_t i = lq; i < p.size(); ++i) {
            const T expected = (i >= a && i - a < lq) ? q[i - a] : T(0);
            if (p[i] != expected)
                throw InconsistencyError("cyclotomicOracle: nonzero remainder dividing by x^" +
                                         std::to_string(a) + " - 1");
        }
        p = std::move(q);
    }
    return p;
}

}  // namespace

IntPoly cyclotomicOracle(std::uint64_t n)
{
    checkConductor(n, kMaxOracleConductor, "cyclotomicOracle");

    std::vector<Binomial> numer;
    std::vector<Binomial> denom;
    for (std::uint64_t d : divisors(factor(n))) {
        const int mu = moebius(factor(d));
        if (mu == 1)
            numer.push_back({static_cast<std::size_t>(n / d)});
        else if (mu == -1)
            denom.push_back({static_cast<std::size_t>(n / d)});
    }

    try {
        return IntPoly::fromSmall(moebiusProduct<std::int64_t>(numer, denom));
    } catch (const CheckedOps<std::int64_t>::Overflow&) {
        return IntPoly(moebiusProduct<BigInt>(numer, denom));
    }
}

}  // namespace cyclocond
