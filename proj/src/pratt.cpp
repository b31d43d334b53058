#include "primechain/pratt.hpp"

#include "primechain/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

namespace primechain {

u64 LevelProfile::total() const
{
    u64 s = 0;
    for (u64 c : counts)
        s += c;
    return s;
}

const PrattNode& PrattDag::node(u64 p)
{
    if (auto it = nodes_.find(p); it != nodes_.end())
        return it->second;
    if (!is_prime_any(p, table_))
        throw DomainError("Pratt tree requested for composite " + std::to_string(p));
    return build(p);
}

const PrattNode& PrattDag::build(u64 p)
{
    PrattNode n;
    if (p == 2) {
        n.f = 1;
        n.h = 1;
        n.g = 1;
    } else {
        n.children = factorize_any(p - 1, table_).primes();
        n.f = 1;
        for (u64 q : n.children) {
            const PrattNode& c = node(q);
            n.f += c.f;
            n.h = std::max(n.h, c.h);
            n.g += c.g;
        }
        n.h += 1;
    }
    return nodes_.emplace(p, std::move(n)).first->second;
}

const LevelProfile& PrattDag::levels(u64 p)
{
    if (auto it = profiles_.find(p); it != profiles_.end())
        return it->second;
    const PrattNode& n = node(p);
    LevelProfile prof;
    prof.counts.assign(static_cast<std::size_t>(n.h), 0);
    prof.counts[0] = 1;
    for (u64 q : n.children) {
        const LevelProfile& sub = levels(q);
        for (std::size_t d = 0; d < sub.counts.size(); ++d)
            prof.counts[d + 1] += sub.counts[d];
    }
    return profiles_.emplace(p, std::move(prof)).first->second;
}

u64 f_of(u64 p, PrattDag& dag) { return dag.node(p).f; }
int h_of(u64 p, PrattDag& dag) { return dag.node(p).h; }
u64 g_of(u64 p, PrattDag& dag) { return dag.node(p).g; }
LevelProfile level_counts(u64 p, PrattDag& dag) { return dag.levels(p); }

bool is_fermat_prime(u64 p)
{
    if (p < 3)
        return false;
    const u64 m = p - 1;
    if ((m & (m - 1)) != 0)
        return false;
    const int e = std::countr_zero(m);
    return (e & (e - 1)) == 0;
}

std::map<u64, u64> label_multiset(u64 p, PrattDag& dag)
{
    std::map<u64, u64> out;
    std::vector<u64> stack{p};
    while (!stack.empty()) {
        const u64 q = stack.back();
        stack.pop_back();
        ++out[q];
        for (u64 c : dag.node(q).children)
            stack.push_back(c);
    }
    return out;
}

MassCheck mass_check(u64 p, PrattDag& dag)
{
    const auto labels = label_multiset(p, dag);
    std::map<u64, long long> exps;
    u128 prod_l = 1;
    for (const auto& [q, mult] : labels) {
        const auto c = static_cast<long long>(mult);
        exps[q] += c;
        for (const auto& [r, e] : factorize_any(q - 1, dag.table()).terms()) {
            // q * l(q-1) / (q-1): the factor r^(e-1) of l cancels against r^e
            exps[r] += c * (e - 1) - c * e;
            for (u64 i = 0; i < mult; ++i)
                for (int j = 1; j < e; ++j)
                    prod_l *= r;
        }
    }
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });

    MassCheck out;
    out.identity_holds = exps.size() == 1 && exps.begin()->first == p && exps.begin()->second == 1;
    out.prod_l = static_cast<u64>(prod_l);
    const u64 f = dag.node(p).f;
    if (f % 2 == 0 && f / 2 < 64) {
        out.prod_l_bound_holds = (prod_l << (f / 2)) <= p;
    } else {
        out.prod_l_bound_holds =
            static_cast<long double>(prod_l) * std::pow(2.0L, static_cast<long double>(f) / 2) <=
            static_cast<long double>(p);
    }
    return out;
}

namespace {

struct PartialStats {
    u64 primes = 0;
    u64 chain_total = 0;
    std::map<int, u64> h_hist;
    std::map<u64, u64> f_hist;
    int max_h = 0;
    u64 max_h_prime = 0;
    u64 max_f = 0;
    u64 max_f_prime = 0;

    void add(u64 p, u64 f, int h)
    {
        ++primes;
        chain_total += f;
        ++h_hist[h];
        ++f_hist[f];
        if (h > max_h || (h == max_h && p < max_h_prime)) {
            max_h = h;
            max_h_prime = p;
        }
        if (f > max_f || (f == max_f && p < max_f_prime)) {
            max_f = f;
            max_f_prime = p;
        }
    }

    void merge(const PartialStats& o)
    {
        primes += o.primes;
        chain_total += o.chain_total;
        for (const auto& [k, v] : o.h_hist)
            h_hist[k] += v;
        for (const auto& [k, v] : o.f_hist)
            f_hist[k] += v;
        if (o.max_h > max_h || (o.max_h == max_h && o.max_h_prime < max_h_prime)) {
            max_h = o.max_h;
            max_h_prime = o.max_h_prime;
        }
        if (o.max_f > max_f || (o.max_f == max_f && o.max_f_prime < max_f_prime)) {
            max_f = o.max_f;
            max_f_prime = o.max_f_prime;
        }
    }
};

} // namespace

RangeStats range_stats(u64 x, const SpfTable& table, unsigned threads)
{
    if (x > table.limit())
        throw CapacityError("range_stats: x=" + std::to_string(x) + " exceeds spf limit " +
                            std::to_string(table.limit()));
    threads = std::max(1u, threads);
    RangeStats out;
    out.limit = x;
    if (x < 2)
        return out;

    std::vector<std::uint8_t> f(x + 1, 0), h(x + 1, 0);
    auto visit = [&](u64 p, PartialStats& acc) {
        if (!table.is_prime(p))
            return;
        unsigned fp = 1;
        unsigned hp = 0;
        if (p > 2) {
            u64 m = p - 1;
            while (m > 1) {
                const u64 q = table.spf(m);
                while (m % q == 0)
                    m /= q;
                fp += f[q];
                hp = std::max<unsigned>(hp, h[q]);
            }
        }
        f[p] = static_cast<std::uint8_t>(fp);
        h[p] = static_cast<std::uint8_t>(hp + 1);
        acc.add(p, fp, static_cast<int>(hp + 1));
    };

    PartialStats total;
    constexpr u64 kParallelBlock = u64{1} << 16;
    for (u64 lo = 2; lo <= x; lo *= 2) {
        const u64 hi = std::min(x, 2 * lo - 1);
        const u64 len = hi - lo + 1;
        if (threads == 1 || len < kParallelBlock) {
            for (u64 p = lo; p <= hi; ++p)
                visit(p, total);
            continue;
        }
        std::vector<PartialStats> parts(threads);
        std::vector<std::thread> pool;
        const u64 chunk = (len + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                const u64 a = lo + w * chunk;
                const u64 b = std::min(hi, a + chunk - 1);
                for (u64 p = a; p <= b && a <= hi; ++p)
                    visit(p, parts[w]);
            });
        for (auto& t : pool)
            t.join();
        for (const auto& part : parts)
            total.merge(part);
    }

    out.prime_count = total.primes;
    out.chain_total = total.chain_total;
    out.h_hist = std::move(total.h_hist);
    out.f_hist = std::move(total.f_hist);
    out.max_h = total.max_h;
    out.max_h_prime = total.max_h_prime;
    out.max_f = total.max_f;
    out.max_f_prime = total.max_f_prime;
    return out;
}

std::vector<FCountBound> f_count_bounds(const RangeStats& stats)
{
    std::vector<FCountBound> out;
    const double lx = std::log(static_cast<double>(stats.limit));
    const u64 hmax = stats.f_hist.empty() ? 0 : stats.f_hist.rbegin()->first;
    for (u64 hv = 1; hv <= hmax; ++hv) {
        const auto it = stats.f_hist.find(hv);
        const u64 c = it == stats.f_hist.end() ? 0 : it->second;
        const double hd = static_cast<double>(hv);
        out.push_back({hv, c, std::pow(6.0 * lx / hd, hd)});
    }
    return out;
}

u64 phi_iterate(u64 n, int k, const SpfTable& table)
{
    for (int i = 0; i < k && n > 1; ++i)
        n = totient(n, table);
    return n;
}

double phi_iter_stats(u64 x, int k, double eps, const SpfTable& table)
{
    if (x < 1 || x > table.limit())
        throw DomainError("phi_iter_stats: x outside table range");
    if (k < 1)
        throw DomainError("phi_iter_stats: k must be >= 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("phi_iter_stats: eps must lie in (0, 1)");
    const double threshold = std::pow(static_cast<double>(x), eps);
    u64 hits = 0;
    for (u64 n = 1; n <= x; ++n) {
        const u64 v = phi_iterate(n, k, table);
        const u64 top = v == 1 ? 1 : table.largest_prime_factor(v);
        hits += static_cast<double>(top) <= threshold;
    }
    return static_cast<double>(hits) / static_cast<double>(x);
}

std::vector<u64> linnik_chain(int length, const SpfTable* table)
{
    if (length < 1)
        throw DomainError("linnik_chain: length must be >= 1");
    std::vector<u64> chain{2};
    constexpr u64 kMax = ~u64{0};
    while (static_cast<int>(chain.size()) < length) {
        const u64 q = chain.back();
        u64 next = 0;
        for (u64 m = 1;; ++m) {
            if (m > (kMax - 1) / q)
                throw CapacityError("linnik_chain: next term exceeds 64 bits after " + std::to_string(q));
            const u64 c = m * q + 1;
            if (is_prime_any(c, table)) {
                next = c;
                break;
            }
        }
        chain.push_back(next);
    }
    return chain;
}

} // namespace primechain
