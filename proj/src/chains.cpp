#include "primechain/chains.hpp"

#include "primechain/error.hpp"
#include "primechain/pratt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace primechain {

ChainEnumeration enumerate_from(u64 p, double x, const SpfTable* table, const EnumerateOptions& opt)
{
    if (!is_prime_any(p, table))
        throw DomainError("enumerate_from: " + std::to_string(p) + " is not prime");
    if (!(x >= 1.0))
        throw DomainError("enumerate_from: ratio x must be >= 1");
    const long double top_ld = std::floor(static_cast<long double>(p) * static_cast<long double>(x));
    if (top_ld >= 1.8e19L)
        throw CapacityError("enumerate_from: p*x beyond 64-bit range");
    const u64 top = static_cast<u64>(top_ld);

    ChainEnumeration out;
    out.by_length.assign(2, 0);
    std::vector<u64> path{p};

    auto record = [&] {
        const std::size_t k = path.size();
        if (k == 1 && !opt.include_trivial)
            return;
        if (out.total >= opt.bound)
            throw CapacityError("enumerate_from: more than " + std::to_string(opt.bound) + " chains");
        ++out.total;
        if (out.by_length.size() <= k)
            out.by_length.resize(k + 1, 0);
        ++out.by_length[k];
        if (opt.keep_chains)
            out.chains.push_back({path});
    };

    // Depth-first with increasing multiplier.
    auto dfs = [&](auto&& self) -> void {
        record();
        const u64 q = path.back();
        for (u64 m = 1; m <= (top - 1) / q; ++m) {
            const u64 c = m * q + 1;
            if (!is_prime_any(c, table))
                continue;
            path.push_back(c);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    std::sort(out.chains.begin(), out.chains.end());
    return out;
}

namespace {

bool trial_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<u64> trial_prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

std::vector<ChainRecord> chains_ending_at(u64 p, std::size_t cap)
{
    if (!trial_prime(p))
        throw DomainError("chains_ending_at: " + std::to_string(p) + " is not prime");
    std::vector<ChainRecord> done;
    // Partial chains stored reversed: tip first.
    std::vector<std::vector<u64>> open{{p}};
    while (!open.empty()) {
        auto rev = std::move(open.back());
        open.pop_back();
        const u64 head = rev.back();
        for (u64 q : trial_prime_divisors(head - 1)) {
            auto ext = rev;
            ext.push_back(q);
            open.push_back(std::move(ext));
        }
        std::reverse(rev.begin(), rev.end());
        done.push_back({std::move(rev)});
        if (done.size() > cap)
            throw CapacityError("chains_ending_at: more than " + std::to_string(cap) + " chains");
    }
    std::sort(done.begin(), done.end());
    return done;
}

u64 f_oracle(u64 p, std::size_t cap) { return chains_ending_at(p, cap).size(); }

bool is_chain(const ChainRecord& c)
{
    if (c.primes.empty())
        return false;
    for (std::size_t i = 0; i < c.primes.size(); ++i) {
        if (!is_prime_u64(c.primes[i]))
            return false;
        if (i > 0 && (c.primes[i] <= c.primes[i - 1] || (c.primes[i] - 1) % c.primes[i - 1] != 0))
            return false;
    }
    return true;
}

LinkVector link_vector(const ChainRecord& c)
{
    if (!is_chain(c))
        throw IntegrityError("link_vector: input is not a prime chain");
    LinkVector v{c.primes.front(), {}};
    for (std::size_t i = 1; i < c.primes.size(); ++i)
        v.links.push_back((c.primes[i] - 1) / c.primes[i - 1]);
    return v;
}

ChainRecord rebuild(const LinkVector& v)
{
    if (!is_prime_u64(v.base))
        throw IntegrityError("rebuild: base " + std::to_string(v.base) + " is not prime");
    ChainRecord c{{v.base}};
    for (u64 m : v.links) {
        const u64 q = c.primes.back();
        if (m == 0)
            throw IntegrityError("rebuild: zero link");
        if (m > (~u64{0} - 1) / q)
            throw CapacityError("rebuild: term exceeds 64 bits");
        const u64 next = m * q + 1;
        if (!is_prime_u64(next))
            throw IntegrityError("rebuild: " + std::to_string(next) + " is composite");
        c.primes.push_back(next);
    }
    return c;
}

bool n_identity_check(u64 x, const SpfTable& table)
{
    if (x > table.limit())
        throw CapacityError("n_identity_check: x exceeds spf limit");
    if (x < 2)
        return true;
    PrattDag dag(&table);
    u64 lhs = 0;
    u64 rhs = table.prime_count(x);
    for (u64 p : table.primes_up_to(x)) {
        const u64 f = f_of(p, dag);
        lhs += f;
        if (p <= x / 2)
            rhs += f * count_primes_in_ap(x, p, table);
    }
    return lhs == rhs;
}

} // namespace primechain
