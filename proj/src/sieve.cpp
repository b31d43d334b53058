#include "primechain/sieve.hpp"

#include "primechain/error.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>
#include <thread>

namespace primechain {

u64 Factorization::value() const
{
    u64 v = 1;
    for (const auto& [p, e] : terms_)
        for (int i = 0; i < e; ++i)
            v *= p;
    return v;
}

std::vector<u64> Factorization::primes() const
{
    std::vector<u64> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back(t.prime);
    return out;
}

namespace {

u64 isqrt(u64 n)
{
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<u32> simple_odd_primes(u64 n)
{
    std::vector<char> composite(n + 1, 0);
    std::vector<u32> out;
    for (u64 i = 3; i <= n; i += 2) {
        if (composite[i])
            continue;
        out.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j <= n; j += 2 * i)
            composite[j] = 1;
    }
    return out;
}

} // namespace

SpfTable::SpfTable(u64 limit, std::size_t segment_width, unsigned threads)
    : limit_(limit), segment_width_(segment_width)
{
    if (limit < 2 || limit > kSpfCeiling)
        throw CapacityError("spf table limit must lie in [2, 2^32-1], got " + std::to_string(limit));
    if (segment_width == 0)
        throw DomainError("segment width must be positive");
    threads = std::max(1u, threads);

    const u64 entries = limit / 2 + 1; // covers odd numbers 1..limit
    try {
        odd_spf_.assign(entries, 0);
    } catch (const std::bad_alloc&) {
        throw CapacityError("cannot allocate spf table for limit " + std::to_string(limit));
    }
    const auto base = simple_odd_primes(isqrt(limit));

    const u64 nsegments = (entries + segment_width - 1) / segment_width;
    auto fill_segment = [&](u64 seg) {
        const u64 lo_idx = seg * segment_width;
        const u64 hi_idx = std::min<u64>(entries, lo_idx + segment_width);
        const u64 lo = 2 * lo_idx + 1;
        const u64 hi = 2 * (hi_idx - 1) + 1; // inclusive
        for (u32 p : base) {
            const u64 pp = u64{p} * p;
            if (pp > hi)
                break;
            u64 start = std::max(pp, (lo + p - 1) / p * p);
            if (start % 2 == 0)
                start += p;
            for (u64 m = start; m <= hi; m += 2 * u64{p}) {
                u32& slot = odd_spf_[m / 2];
                if (slot == 0)
                    slot = p;
            }
        }
        for (u64 i = lo_idx; i < hi_idx; ++i)
            if (odd_spf_[i] == 0)
                odd_spf_[i] = static_cast<u32>(2 * i + 1);
    };

    if (threads == 1 || nsegments == 1) {
        for (u64 s = 0; s < nsegments; ++s)
            fill_segment(s);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (u64 s = w; s < nsegments; s += threads)
                    fill_segment(s);
            });
        for (auto& t : pool)
            t.join();
    }
}

u64 SpfTable::spf(u64 n) const
{
    if (!contains(n))
        throw DomainError("spf query " + std::to_string(n) + " outside [2, " + std::to_string(limit_) + "]");
    return (n % 2 == 0) ? 2 : odd_spf_[n / 2];
}

bool SpfTable::is_prime(u64 n) const
{
    if (n < 2)
        return false;
    return spf(n) == n;
}

Factorization SpfTable::factorize(u64 n) const
{
    if (n == 1)
        return {};
    if (!contains(n))
        throw DomainError("cannot factor " + std::to_string(n) + " with table limit " + std::to_string(limit_));
    std::vector<PrimePower> terms;
    while (n > 1) {
        const u64 p = spf(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        terms.push_back({p, e});
    }
    return Factorization(std::move(terms));
}

std::vector<u64> SpfTable::prime_divisors(u64 n) const { return factorize(n).primes(); }

u64 SpfTable::largest_prime_factor(u64 n) const { return factorize(n).largest_prime(); }

std::vector<u64> SpfTable::primes_up_to(u64 x) const
{
    x = std::min(x, limit_);
    std::vector<u64> out;
    if (x >= 2)
        out.push_back(2);
    for (u64 n = 3; n <= x; n += 2)
        if (odd_spf_[n / 2] == n)
            out.push_back(n);
    return out;
}

u64 SpfTable::prime_count(u64 x) const
{
    x = std::min(x, limit_);
    u64 c = x >= 2 ? 1 : 0;
    for (u64 n = 3; n <= x; n += 2)
        c += odd_spf_[n / 2] == n;
    return c;
}

Factorization factorize(u64 n, const SpfTable& t)
{
    if (n < 2 || n > t.limit())
        throw DomainError("factorize: n=" + std::to_string(n) + " outside [2, " + std::to_string(t.limit()) + "]");
    return t.factorize(n);
}

u64 count_primes_in_ap(u64 x, u64 q, const SpfTable& t)
{
    if (x < 2 || q < 1)
        throw DomainError("count_primes_in_ap needs x >= 2 and q >= 1");
    if (x > t.limit())
        throw CapacityError("count_primes_in_ap: x exceeds spf limit");
    if (q == 1)
        return t.prime_count(x);
    u64 c = 0;
    for (u64 n = q + 1; n <= x; n += q)
        c += t.is_prime(n);
    return c;
}

u64 l_value(u64 n, const SpfTable& t)
{
    if (n < 1 || n > t.limit())
        throw DomainError("l_value: n=" + std::to_string(n) + " out of range");
    u64 l = 1;
    for (const auto& [p, e] : t.factorize(n).terms())
        for (int i = 1; i < e; ++i)
            l *= p;
    return l;
}

u64 totient(u64 n, const SpfTable& t)
{
    if (n < 1 || n > t.limit())
        throw DomainError("totient: n=" + std::to_string(n) + " out of range");
    u64 phi = n;
    for (const auto& [p, e] : t.factorize(n).terms())
        phi = phi / p * (p - 1);
    return phi;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Bases known to be deterministic for n < 2^64.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        a %= n;
        if (a == 0)
            continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

Factorization factorize_trial(u64 n)
{
    if (n < 1)
        throw DomainError("factorize_trial: n must be >= 1");
    std::vector<PrimePower> terms;
    auto strip = [&](u64 p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            terms.push_back({p, e});
    };
    strip(2);
    strip(3);
    bool cofactor_prime = is_prime_u64(n);
    for (u64 p = 5; !cofactor_prime && p <= n / p; p += 6) {
        const u64 before = n;
        strip(p);
        strip(p + 2);
        if (n != before)
            cofactor_prime = n == 1 || is_prime_u64(n);
    }
    if (n > 1)
        terms.push_back({n, 1});
    return Factorization(std::move(terms));
}

Factorization factorize_any(u64 n, const SpfTable* t)
{
    if (t && n <= t->limit())
        return n == 1 ? Factorization{} : t->factorize(n);
    return factorize_trial(n);
}

bool is_prime_any(u64 n, const SpfTable* t)
{
    if (t && n <= t->limit())
        return t->is_prime(n);
    return is_prime_u64(n);
}

} // namespace primechain
