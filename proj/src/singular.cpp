#include "primechain/singular.hpp"

#include "primechain/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace primechain {

namespace {

// Primes up to here use the direct scan inside singular_series.
constexpr u64 kScanLimit = 1000;

u64 checked_mul(u64 x, u64 y)
{
    if (y != 0 && x > ~u64{0} / y)
        throw CapacityError("forms_from_links: coefficient overflow");
    return x * y;
}

u64 checked_add(u64 x, u64 y)
{
    if (x > ~u64{0} - y)
        throw CapacityError("forms_from_links: coefficient overflow");
    return x + y;
}

} // namespace

FormSystem forms_from_links(const std::vector<u64>& links)
{
    FormSystem sys;
    sys.links = links;
    sys.a = {1};
    sys.b = {0};
    for (u64 m : links) {
        sys.a.push_back(checked_mul(m, sys.a.back()));
        sys.b.push_back(checked_add(checked_mul(m, sys.b.back()), 1));
    }
    return sys;
}

u64 xi(u64 p, const FormSystem& sys)
{
    if (p < 2)
        throw DomainError("xi: p must be prime");
    std::vector<u64> a(sys.k()), b(sys.k());
    for (std::size_t j = 0; j < sys.k(); ++j) {
        a[j] = sys.a[j] % p;
        b[j] = sys.b[j] % p;
    }
    u64 count = 0;
    for (u64 n = 0; n < p; ++n) {
        for (std::size_t j = 0; j < sys.k(); ++j) {
            if ((mulmod(a[j], n, p) + b[j]) % p == 0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

u64 xi_roots(u64 p, const FormSystem& sys)
{
    if (p < 2)
        throw DomainError("xi_roots: p must be prime");
    std::vector<u64> roots;
    for (std::size_t j = 0; j < sys.k(); ++j) {
        const u64 a = sys.a[j] % p;
        const u64 b = sys.b[j] % p;
        if (a == 0) {
            if (b == 0)
                return p; // the form vanishes identically
            continue;
        }
        const u64 inv = powmod(a, p - 2, p);
        roots.push_back(mulmod(p - b, inv, p) % p);
    }
    std::sort(roots.begin(), roots.end());
    return static_cast<u64>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

SingularValue singular_series(const std::vector<u64>& links, u64 cutoff)
{
    if (cutoff < 100)
        throw DomainError("singular_series: cutoff must be >= 100");
    for (u64 m : links)
        if (m < 1)
            throw DomainError("singular_series: links must be >= 1");
    const FormSystem sys = forms_from_links(links);
    const std::size_t k = sys.k();
    const double kd = static_cast<double>(k);

    SingularValue out;
    out.cutoff = cutoff;
    out.k = k;

    // p | gcd(a_j, b_j) makes f_j vanish identically mod p, whatever the size of p.
    for (std::size_t j = 0; j < k; ++j)
        if (std::gcd(sys.a[j], sys.b[j]) > 1) {
            out.vanishes = true;
            return out;
        }

    const SpfTable table(cutoff);
    double log_partial = 0.0;
    for (u64 p : table.primes_up_to(cutoff)) {
        const u64 x = p <= kScanLimit ? xi(p, sys) : xi_roots(p, sys);
        if (x >= p) {
            out.vanishes = true;
            return out; // value and interval are 0
        }
        const double pd = static_cast<double>(p);
        log_partial += std::log1p(-static_cast<double>(x) / pd) - kd * std::log1p(-1.0 / pd);
    }

    // Generic factor (1 - k/p)(1 - 1/p)^-k for p > cutoff; its log lies in
    // [-(k/p)^2 / (1 - k/p), 0] for k >= 1.
    const double P = static_cast<double>(cutoff);
    const double generic_low = -kd * kd / (P - kd) / (1.0 - kd / P);
    // Point estimate: leading term -(k^2 - k)/(2 p^2) summed by the prime
    // number theorem, sum_{p>P} p^-2 ~ 1/(P log P).
    const double generic_mid = -(kd * kd - kd) / 2.0 / (P * std::log(P));

    // Exceptional primes p | N beyond the cutoff: factor at most
    // (1 - 1/p)^(1-k) relative to 1, at least the generic factor.
    double log_n = 0.0;
    for (u64 m : links)
        log_n += std::log(static_cast<double>(m));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const long double det = static_cast<long double>(sys.a[i]) * sys.b[j] -
                                    static_cast<long double>(sys.a[j]) * sys.b[i];
            if (det != 0)
                log_n += static_cast<double>(std::log(std::fabs(det)));
        }
    const double exceptional = std::floor(log_n / std::log(P) + 1e-12);
    const double exceptional_high = -(kd - 1.0) * std::log1p(-1.0 / P) * exceptional;

    out.value = std::exp(log_partial + generic_mid);
    out.tail_low = std::exp(log_partial + generic_low);
    out.tail_high = std::exp(log_partial + exceptional_high);
    return out;
}

RhoPmResult rhopm_sum(u64 p, std::size_t k, const std::vector<std::size_t>& indices, const std::vector<u64>& fixed)
{
    if (p > 13 || k > 5)
        throw CapacityError("rhopm_check: brute force limited to p <= 13, k <= 5");
    if (k < 1)
        throw DomainError("rhopm_check: k must be >= 1");
    if (fixed.size() != k - 1)
        throw DomainError("rhopm_check: fixed must hold k-1 links");
    for (std::size_t i : indices)
        if (i < 1 || i > k - 1)
            throw DomainError("rhopm_check: index outside 1..k-1");

    std::vector<u64> links(fixed.begin(), fixed.end());
    for (auto& m : links)
        m %= p;
    const std::size_t free = indices.size();
    u64 total_assignments = 1;
    for (std::size_t i = 0; i < free; ++i)
        total_assignments *= p;

    RhoPmResult r;
    for (u64 code = 0; code < total_assignments; ++code) {
        u64 c = code;
        for (std::size_t i : indices) {
            links[i - 1] = c % p;
            c /= p;
        }
        r.sum += xi(p, forms_from_links(links));
    }
    u64 hi = 1, lo = 1;
    for (std::size_t i = 0; i <= free; ++i) {
        hi *= p;
        lo *= p - 1;
    }
    r.rhs = hi - lo;
    return r;
}

bool rhopm_check(u64 p, std::size_t k, const std::vector<std::size_t>& indices, const std::vector<u64>& fixed)
{
    return rhopm_sum(p, k, indices, fixed).holds();
}

} // namespace primechain
