#include "primechain/verify.hpp"

#include "primechain/brw.hpp"
#include "primechain/chains.hpp"
#include "primechain/cli.hpp"
#include "primechain/dickman.hpp"
#include "primechain/error.hpp"
#include "primechain/oracles.hpp"
#include "primechain/pratt.hpp"
#include "primechain/rng.hpp"
#include "primechain/sieve.hpp"
#include "primechain/sifted.hpp"
#include "primechain/singular.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace primechain::verify {

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

class Context {
public:
    explicit Context(const Options& o) : opt(o) {}

    const SpfTable& table()
    {
        if (!table_)
            table_ = std::make_unique<SpfTable>(2'000'000, kDefaultSegmentWidth, opt.threads);
        return *table_;
    }

    RunConfig brw(std::uint64_t reps, int generations, double cap) const
    {
        RunConfig c;
        c.seed = opt.seed;
        c.replicates = reps;
        c.generations = generations;
        c.cap = cap;
        c.threads = opt.threads;
        return c;
    }

    const RhoTable& half_table()
    {
        if (!half_)
            half_ = std::make_unique<RhoTable>(kDefaultRhoStep / 2, kDefaultRhoMax);
        return *half_;
    }

    Options opt;

private:
    std::unique_ptr<SpfTable> table_;
    std::unique_ptr<RhoTable> half_;
};

struct Entry {
    const char* id;
    const char* suite;
    const char* title;
    double budget; // seconds, 0 = none
    bool report_only;
    Outcome (*fn)(Context&);
};

std::string fmt(double v, int digits = 10)
{
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

std::vector<u64> primes_to(Context& ctx, u64 x) { return ctx.table().primes_up_to(x); }

// ---------------------------------------------------------------- checks

Outcome recursion_oracle(Context& ctx)
{
    PrattDag dag(&ctx.table());
    u64 bad_fh = 0, bad_oracle = 0, checked = 0;
    for (u64 p : primes_to(ctx, 10'000)) {
        ++checked;
        if (f_of(p, dag) != oracle::naive_f(p) || h_of(p, dag) != oracle::naive_h(p))
            ++bad_fh;
        if (p <= 2000 && f_oracle(p) != f_of(p, dag))
            ++bad_oracle;
    }
    return {bad_fh == 0 && bad_oracle == 0, std::to_string(checked) + " primes, " + std::to_string(bad_fh) +
                                                " recursion mismatches, " + std::to_string(bad_oracle) +
                                                " enumeration mismatches"};
}

Outcome bounds_sweep_at(Context& ctx, u64 limit)
{
    PrattDag dag(&ctx.table());
    u64 violations = 0, checked = 0;
    for (u64 p : primes_to(ctx, limit)) {
        ++checked;
        const double lg = std::log2(static_cast<double>(p));
        const u64 f = f_of(p, dag);
        const int h = h_of(p, dag);
        bool ok = static_cast<double>(f) <= 2 * lg - 1 + 1e-9 && h <= lg + 1 + 1e-9;
        if (p > 2)
            ok = ok && f % 2 == 0 && g_of(p, dag) * 2 == f;
        const MassCheck mc = mass_check(p, dag);
        ok = ok && mc.identity_holds && mc.prod_l_bound_holds;
        violations += !ok;
    }
    return {violations == 0, std::to_string(checked) + " primes, " + std::to_string(violations) + " violations"};
}

Outcome bounds_sweep(Context& ctx) { return bounds_sweep_at(ctx, 1'000'000); }

Outcome fermat(Context& ctx)
{
    PrattDag dag(&ctx.table());
    std::set<u64> got;
    for (u64 p : primes_to(ctx, 1'000'000))
        if (h_of(p, dag) == 2)
            got.insert(p);
    const std::set<u64> want{3, 5, 17, 257, 65537};
    std::string d = "H=2:";
    for (u64 p : got)
        d += " " + std::to_string(p);
    bool fermat_flag = true;
    for (u64 p : got)
        fermat_flag = fermat_flag && is_fermat_prime(p);
    return {got == want && fermat_flag, d};
}

Outcome counting_identities(Context& ctx)
{
    u64 n10 = 0;
    for (u64 p : primes_to(ctx, 10))
        n10 += chains_ending_at(p).size();
    bool ok = n10 == 9 && oracle::chain_total(10) == 9;
    std::string d = "N(10)=" + std::to_string(n10);
    for (u64 x : {100ULL, 1000ULL, 10000ULL}) {
        const bool id = n_identity_check(x, ctx.table());
        ok = ok && id;
        d += ", identity(" + std::to_string(x) + ")=" + (id ? "ok" : "FAIL");
    }
    const RangeStats st = range_stats(100'000, ctx.table(), ctx.opt.threads);
    u64 bad = 0;
    for (const auto& b : f_count_bounds(st))
        bad += !b.holds();
    ok = ok && bad == 0;
    d += ", f-count bound violations at 1e5: " + std::to_string(bad);
    return {ok, d};
}

Outcome sifted_acceptance(Context&)
{
    bool ok = true;
    double worst = 0;
    for (double y : {2.0, 3.0, 5.0})
        for (double s : {1.5, 2.0}) {
            const ResidueMatrix m = build_matrix(y, s);
            for (std::size_t i = 0; i < m.phi(); ++i) {
                const double direct = m.entries.row(static_cast<Eigen::Index>(i)).sum();
                const double closed = row_sum_closed_form(m.units[i], y, s);
                worst = std::max(worst, std::abs(direct - closed) / closed);
            }
            const double lambda = perron_eigenvalue(m).lambda;
            ok = ok && lambda <= max_row_sum(m).direct * (1 + 1e-12);
        }
    ok = ok && worst <= 1e-8;
    const double r32 = max_row_sum_closed_form(3, 2);
    ok = ok && std::abs(r32 - 0.36551) <= 1e-4;
    const u64 brute = oracle::chain_count_forward(7, 1000);
    const ChainBound cb = chain_count_bound(1000, 5);
    ok = ok && static_cast<double>(brute) <= cb.bound;
    return {ok, "row-sum rel err " + fmt(worst, 3) + ", R(3,2)=" + fmt(r32, 8) + ", N(1e3;7)=" +
                    std::to_string(brute) + " <= " + fmt(cb.bound, 6)};
}

Outcome rhopm_all(Context& ctx, int samples)
{
    const Philox4x32 gen(ctx.opt.seed);
    u64 runs = 0, failures = 0;
    std::uint64_t stream = 0;
    for (u64 p : {2, 3, 5, 7, 11, 13})
        for (std::size_t k = 2; k <= 4; ++k)
            for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i + 1 < k; ++i)
                    if (mask & (1u << i))
                        idx.push_back(i + 1);
                for (int sample = 0; sample < samples; ++sample) {
                    const UniformStream u(gen, derive_stream(0x5EED, stream++));
                    std::vector<u64> fixed(k - 1);
                    for (std::size_t i = 0; i < fixed.size(); ++i)
                        fixed[i] = u.below(static_cast<std::uint32_t>(i), p);
                    ++runs;
                    failures += !rhopm_check(p, k, idx, fixed);
                }
            }
    return {failures == 0, std::to_string(runs) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome singular_acceptance(Context& ctx)
{
    const SingularValue sv = singular_series({2}, 1'000'000);
    const double twin = oracle::twin_product(1'000'000);
    const SingularValue one = singular_series({1}, 1000);
    const Outcome rp = rhopm_all(ctx, 100);
    const bool ok = std::abs(sv.value - 1.32032) <= 1e-3 && std::abs(sv.value - twin) <= 1e-3 &&
                    sv.tail_low <= sv.value && sv.value <= sv.tail_high && one.value == 0.0 && rp.passed;
    return {ok, "S((2))=" + fmt(sv.value, 9) + " in [" + fmt(sv.tail_low, 9) + ", " + fmt(sv.tail_high, 9) +
                    "], oracle " + fmt(twin, 9) + ", S((1))=" + fmt(one.value) + ", rhopm " + rp.detail};
}

double factorial(int n) { return std::tgamma(n + 1.0); }

Outcome brw_expectations(Context& ctx)
{
    const RunConfig cfg = ctx.brw(100'000, 4, 2.0);
    const std::vector<ZQuery> qs{{1, 1.0}, {2, 1.0}, {3, 2.0}, {4, 2.0}, {1, 0.5}};
    const auto z = z_samples(cfg, qs);
    bool ok = true;
    std::string d;
    for (std::size_t q = 0; q < 4; ++q) {
        std::vector<double> xs(cfg.replicates);
        for (std::uint64_t r = 0; r < cfg.replicates; ++r)
            xs[r] = static_cast<double>(z[r * qs.size() + q]);
        const MeanEstimate me = mean_of(xs);
        const double want = std::pow(qs[q].t, qs[q].n) / factorial(qs[q].n);
        const double dev = std::abs(me.mean - want) / me.se;
        ok = ok && dev <= 3;
        d += "Z" + std::to_string(qs[q].n) + "(" + fmt(qs[q].t, 2) + ") " + fmt(me.mean, 5) + " vs " + fmt(want, 5) +
             "; ";
    }
    Proportion half;
    half.trials = cfg.replicates;
    for (std::uint64_t r = 0; r < cfg.replicates; ++r)
        half.hits += z[r * qs.size() + 4] >= 1;
    ok = ok && std::abs(half.p() - 0.5) <= 3 * half.se();
    const Proportion m1 = m1_below(ctx.brw(100'000, 1, 1.0), 2.0);
    const double want = 1 - std::log(2.0);
    ok = ok && std::abs(m1.p() - want) <= 3 * m1.se();
    d += "P{Z1(.5)>=1} " + fmt(half.p(), 5) + "; P{M1<=1/2} " + fmt(m1.p(), 5) + " vs " + fmt(want, 5);
    return {ok, d};
}

Outcome median_growth(Context& ctx)
{
    RunConfig cfg = ctx.brw(10'000, 1, 1.0);
    cfg.cap = 0; // automatic
    const MedianEstimate b1 = estimate_median_bn(1, cfg, MedianMethod::exact);
    const MedianEstimate b20 = estimate_median_bn(20, cfg, MedianMethod::exact);
    const MedianEstimate b40 = estimate_median_bn(40, cfg, MedianMethod::automatic);
    const double d20 = b20.median - predicted_bn(20);
    const double growth = b40.median - b20.median;
    const bool ok = std::abs(b1.median - 0.5) <= 0.02 && d20 >= -2 && d20 <= 2 && growth >= 6.9 && growth <= 8.6;
    return {ok, "b1=" + fmt(b1.median, 5) + ", b20=" + fmt(b20.median, 6) + " (" + to_string(b20.method) +
                    ", pred " + fmt(predicted_bn(20), 6) + "), b40=" + fmt(b40.median, 6) + " (" +
                    to_string(b40.method) + "), growth " + fmt(growth, 5)};
}

Outcome z1_tail(Context& ctx)
{
    const RunConfig cfg = ctx.brw(100'000, 1, 2.0);
    const auto z = z_samples(cfg, {{1, 1.0}, {1, 2.0}});
    bool ok = true;
    double worst = -1e300;
    for (std::size_t q = 0; q < 2; ++q) {
        const double t = q == 0 ? 1.0 : 2.0;
        for (int k = 1; k <= 10; ++k) {
            Proportion pr;
            pr.trials = cfg.replicates;
            for (std::uint64_t r = 0; r < cfg.replicates; ++r)
                pr.hits += z[r * 2 + q] >= static_cast<u64>(k);
            const double bound = std::pow(std::exp(1.0) * t / k, k - 1);
            ok = ok && pr.p() <= bound + 3 * pr.se();
            worst = std::max(worst, pr.p() - bound);
        }
    }
    return {ok, "max(P - bound) = " + fmt(worst, 4)};
}

Outcome dickman_acceptance(Context& ctx)
{
    const double r2 = rho(2.0);
    const double r3 = rho(3.0);
    const double quad = oracle::rho_second_interval(3.0);
    const double half = ctx.half_table()(3.0);
    const RhoTable& base = default_rho_table();
    double worst = 0;
    for (std::size_t i = 0; i * base.step() <= 10.0; ++i)
        worst = std::max(worst, std::abs(base.values()[i] - ctx.half_table().values()[2 * i]));
    const bool ok = r2 == 1.0 - std::log(2.0) && std::abs(r3 - 0.0486084) <= 1e-6 && std::abs(r3 - quad) <= 1e-6 &&
                    std::abs(r3 - half) <= 1e-6 && worst < 1e-9;
    return {ok, "rho(3)=" + fmt(r3, 12) + " quadrature " + fmt(quad, 12) + " half-step " + fmt(half, 12) +
                    ", max grid change " + fmt(worst, 3)};
}

std::string run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int rc = cli::dispatch(args, out, err);
    if (rc != 0)
        throw IntegrityError("command failed: " + err.str());
    return out.str();
}

Outcome determinism_commands(const std::vector<std::vector<std::string>>& cmds)
{
    u64 bad = 0;
    std::string d;
    for (const auto& c : cmds) {
        auto with = [&](const char* threads) {
            auto a = c;
            a.push_back("--threads");
            a.push_back(threads);
            return run_cli(a);
        };
        const std::string a = with("1");
        const std::string b = with("8");
        const std::string b2 = with("8");
        const bool same = a == b && b == b2 && !a.empty();
        bad += !same;
        d += (d.empty() ? std::string() : std::string("; ")) + c[0] + (c.size() > 1 && c[0] == "brw" ? " " + c[1] : std::string()) + (same ? " ok" : " DIFFERS");
    }
    return {bad == 0, d};
}

Outcome determinism(Context&)
{
    return determinism_commands({
        {"brw", "run", "--n", "4", "--cap", "3", "--reps", "2000", "--seed", "42"},
        {"brw", "median-bn", "--n", "20", "--reps", "10000", "--seed", "42"},
        {"brw", "median-bn", "--n", "40", "--reps", "10000", "--seed", "42"},
        {"brw", "tails", "--n", "8", "--reps", "2000", "--seed", "42"},
        {"brw", "teps", "--eps", "0.01", "--reps", "2000", "--seed", "42"},
        {"brw", "rde", "--pop", "2000", "--iters", "10", "--seed", "42"},
    });
}

// ---------------------------------------------------------------- module suites

Outcome sieve_lvalue(Context& ctx)
{
    u64 bad = 0;
    for (u64 n = 2; n <= 100'000; ++n) {
        const u64 l = l_value(n, ctx.table());
        if (n % l != 0) {
            ++bad;
            continue;
        }
        for (const auto& pp : ctx.table().factorize(n / l).terms())
            bad += pp.exponent > 1;
    }
    return {bad == 0, "n <= 1e5, " + std::to_string(bad) + " violations"};
}

Outcome sieve_brun_titchmarsh(Context& ctx)
{
    u64 bad = 0, checked = 0;
    for (u64 x : {10'000ULL, 100'000ULL, 1'000'000ULL})
        for (u64 q : ctx.table().primes_up_to(static_cast<u64>(std::sqrt(static_cast<double>(x))))) {
            ++checked;
            const double b = 2.0 * x / ((q - 1.0) * std::log(static_cast<double>(x) / q));
            bad += static_cast<double>(count_primes_in_ap(x, q, ctx.table())) > b;
        }
    return {bad == 0, std::to_string(checked) + " (x, q) pairs, " + std::to_string(bad) + " violations"};
}

Outcome sieve_prime_count(Context& ctx)
{
    const u64 a = count_primes_in_ap(100'000, 1, ctx.table());
    const u64 b = oracle::prime_count_trial(100'000);
    u64 mr = 0;
    for (u64 n = 2; n <= 100'000; ++n)
        mr += is_prime_u64(n);
    return {a == b && a == mr && a == 9592, "pi(1e5): table " + std::to_string(a) + ", trial " + std::to_string(b) +
                                                ", Miller-Rabin " + std::to_string(mr)};
}

Outcome sieve_factor_roundtrip(Context& ctx)
{
    u64 bad = 0;
    const Philox4x32 gen(ctx.opt.seed);
    const UniformStream u(gen, derive_stream(0xFAC7, 0));
    for (std::uint32_t i = 0; i < 20'000; ++i) {
        const u64 n = 2 + u.below(i, 1'999'999);
        const Factorization f = ctx.table().factorize(n);
        bad += f.value() != n || f != factorize_trial(n);
    }
    return {bad == 0, "20000 random n <= 2e6, " + std::to_string(bad) + " mismatches"};
}

Outcome pratt_bounds(Context& ctx) { return bounds_sweep_at(ctx, 100'000); }

Outcome pratt_naive(Context& ctx)
{
    PrattDag dag(&ctx.table());
    u64 bad = 0, n = 0;
    for (u64 p : primes_to(ctx, 10'000)) {
        ++n;
        bad += f_of(p, dag) != oracle::naive_f(p) || h_of(p, dag) != oracle::naive_h(p) ||
               g_of(p, dag) != oracle::naive_g(p) || level_counts(p, dag).total() != f_of(p, dag);
    }
    return {bad == 0, std::to_string(n) + " primes, " + std::to_string(bad) + " mismatches"};
}

Outcome pratt_fcount(Context& ctx)
{
    u64 bad = 0;
    std::string d;
    for (u64 x : {1000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
        const RangeStats st = range_stats(x, ctx.table(), ctx.opt.threads);
        for (const auto& b : f_count_bounds(st))
            bad += !b.holds();
    }
    return {bad == 0, "x in {1e3..1e6}, " + std::to_string(bad) + " violations"};
}

Outcome pratt_threads(Context& ctx)
{
    const RangeStats a = range_stats(1'000'000, ctx.table(), 1);
    const RangeStats b = range_stats(1'000'000, ctx.table(), 4);
    return {a == b && a.prime_count == 78498, "N(1e6)=" + std::to_string(a.chain_total) + ", max H " +
                                                   std::to_string(a.max_h) + " at " + std::to_string(a.max_h_prime)};
}

Outcome chains_properties(Context& ctx)
{
    u64 bad = 0, cases = 0;
    for (u64 p : primes_to(ctx, 50)) {
        u64 prev = 0;
        for (double x : {10.0, 100.0, 1000.0}) {
            ++cases;
            const ChainEnumeration e = enumerate_from(p, x, &ctx.table());
            const u64 top = static_cast<u64>(std::floor(p * x));
            u64 sum = 0;
            for (u64 c : e.by_length)
                sum += c;
            const u64 n2 = e.by_length.size() > 2 ? e.by_length[2] : 0;
            bool ok = e.total >= prev && sum == e.total && n2 == count_primes_in_ap(top, p, ctx.table());
            ok = ok && e.total == oracle::chain_count_forward(p, x);
            for (const auto& c : e.chains) {
                if (c.length() < 2)
                    continue;
                double prod = 1, mn = 1e300;
                for (std::size_t j = 0; j + 1 < c.length(); ++j) {
                    const double r = std::log(static_cast<double>(c.primes[j + 1])) /
                                     std::log(static_cast<double>(c.primes[j]));
                    prod *= r;
                    mn = std::min(mn, r);
                }
                const double lhs = std::log(static_cast<double>(c.primes.back())) /
                                   std::log(static_cast<double>(c.primes.front()));
                ok = ok && std::abs(lhs - prod) <= 1e-9 * lhs &&
                     lhs >= std::pow(mn, static_cast<double>(c.length() - 1)) * (1 - 1e-12);
                ok = ok && rebuild(link_vector(c)) == c;
            }
            bad += !ok;
            prev = e.total;
        }
    }
    return {bad == 0, std::to_string(cases) + " (p, x) cases, " + std::to_string(bad) + " failures"};
}

Outcome chains_g(Context& ctx)
{
    PrattDag dag(&ctx.table());
    u64 bad = 0, n = 0;
    for (u64 p : primes_to(ctx, 2000)) {
        ++n;
        const auto cs = chains_ending_at(p);
        u64 from2 = 0;
        for (const auto& c : cs) {
            from2 += c.primes.front() == 2;
            bad += !is_chain(c) || c.primes.back() != p;
        }
        bad += from2 != g_of(p, dag) || cs.size() != f_of(p, dag);
    }
    return {bad == 0, std::to_string(n) + " primes, " + std::to_string(bad) + " mismatches"};
}

Outcome sifted_rows(Context&)
{
    double worst = 0;
    bool ok = true;
    for (double y : {2.0, 3.0, 5.0, 7.0})
        for (double s : {1.2, 1.5, 2.0, 3.0}) {
            const ResidueMatrix m = build_matrix(y, s);
            for (std::size_t i = 0; i < m.phi(); ++i) {
                const double direct = m.entries.row(static_cast<Eigen::Index>(i)).sum();
                const double closed = row_sum_closed_form(m.units[i], y, s);
                worst = std::max(worst, std::abs(direct - closed) / closed);
            }
            const RowSumReport rr = max_row_sum(m);
            ok = ok && std::gcd(rr.argmax_b - 1, m.r) == 2 &&
                 std::abs(rr.direct - rr.closed_form) <= 1e-8 * rr.closed_form && rr.closed_form <= rr.closed_form_upper;
            for (u64 b : m.units)
                ok = ok && std::gcd(b - 1, m.r) % 2 == 0;
        }
    return {ok && worst <= 1e-8, "y <= 7, max relative row-sum error " + fmt(worst, 3)};
}

Outcome sifted_entries(Context&)
{
    double worst = 0;
    for (double s : {1.5, 2.0}) {
        const ResidueMatrix m = build_matrix(5, s);
        for (std::size_t i = 0; i < m.phi(); i += 3)
            for (std::size_t j = 0; j < m.phi(); j += 2) {
                const double want = oracle::link_series_direct(m.units[j], m.units[i], m.r, s, 200'000);
                const double got = m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                worst = std::max(worst, std::abs(got - want) / want);
            }
    }
    return {worst <= 1e-9, "y=5 entries vs direct summation, max rel err " + fmt(worst, 3)};
}

Outcome sifted_perron(Context&)
{
    bool ok = true;
    double worst = 0;
    for (double y : {2.0, 3.0, 5.0, 7.0})
        for (double s : {1.2, 1.5, 2.0, 3.0}) {
            const ResidueMatrix m = build_matrix(y, s);
            const double lambda = perron_eigenvalue(m).lambda;
            ok = ok && lambda <= max_row_sum(m).direct * (1 + 1e-12);
            if (m.phi() <= 48) {
                const double ref = oracle::spectral_radius(m.entries);
                worst = std::max(worst, std::abs(lambda - ref) / ref);
            }
        }
    return {ok && worst <= 1e-9, "lambda <= R everywhere, max rel err vs dense eigensolver " + fmt(worst, 3)};
}

Outcome sifted_chain_bound(Context& ctx)
{
    u64 bad = 0, cases = 0;
    for (double y : {2.0, 3.0, 5.0, 7.0})
        for (double x : {10.0, 100.0, 1000.0}) {
            const double bound = chain_count_bound(x, y).bound;
            for (u64 p : primes_to(ctx, 50)) {
                if (static_cast<double>(p) <= y)
                    continue;
                ++cases;
                EnumerateOptions o;
                o.keep_chains = false;
                bad += static_cast<double>(enumerate_from(p, x, &ctx.table(), o).total) > bound;
            }
        }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " violations"};
}

Outcome singular_xi(Context& ctx)
{
    const Philox4x32 gen(ctx.opt.seed);
    u64 bad = 0, cases = 0;
    const auto primes = primes_to(ctx, 10'000);
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        const UniformStream u(gen, derive_stream(0x1157, trial));
        const std::size_t k = 2 + u.below(0, 5);
        std::vector<u64> links(k - 1);
        for (std::size_t i = 0; i < links.size(); ++i)
            links[i] = 1 + u.below(static_cast<std::uint32_t>(i + 1), 60);
        const FormSystem sys = forms_from_links(links);
        for (u64 p : primes) {
            if (p > 400 && trial % 8 != 0)
                break;
            ++cases;
            const u64 a = xi(p, sys);
            bool identically_zero = false;
            for (std::size_t j = 0; j < k; ++j)
                identically_zero = identically_zero || (sys.a[j] % p == 0 && sys.b[j] % p == 0);
            if (identically_zero)
                bad += a != p;
            else
                bad += a < 1 || a > std::min<u64>(k, p);
            bad += a != xi_roots(p, sys);
        }
    }
    return {bad == 0, std::to_string(cases) + " (p, system) pairs, " + std::to_string(bad) + " failures"};
}

Outcome singular_vanishing(Context& ctx)
{
    const Philox4x32 gen(ctx.opt.seed);
    u64 bad = 0, zero = 0;
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        const UniformStream u(gen, derive_stream(0x7A15, trial));
        const std::size_t k = 2 + u.below(0, 4);
        std::vector<u64> links(k - 1);
        for (std::size_t i = 0; i < links.size(); ++i)
            links[i] = 1 + u.below(static_cast<std::uint32_t>(i + 1), 30);
        const FormSystem sys = forms_from_links(links);
        bool full = false;
        for (u64 p = 2; p <= k; ++p)
            full = full || (oracle::is_prime_trial(p) && xi(p, sys) == p);
        for (std::size_t j = 0; j < k; ++j)
            full = full || std::gcd(sys.a[j], sys.b[j]) > 1;
        const SingularValue sv = singular_series(links, 1000);
        bad += (sv.value == 0.0) != full || sv.vanishes != full;
        zero += full;
    }
    return {bad == 0, "60 random systems (" + std::to_string(zero) + " vanishing), " + std::to_string(bad) +
                          " disagreements"};
}

Outcome singular_growth(Context& ctx)
{
    const Philox4x32 gen(ctx.opt.seed);
    double worst = 0;
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const UniformStream u(gen, derive_stream(0x6A0B, trial));
        const std::size_t k = 2 + u.below(0, 5);
        std::vector<u64> links(k - 1);
        double prod = 4;
        for (std::size_t i = 0; i < links.size(); ++i) {
            links[i] = 2 * (1 + u.below(static_cast<std::uint32_t>(i + 1), 50));
            prod *= static_cast<double>(links[i]);
        }
        const SingularValue sv = singular_series(links, 10'000);
        worst = std::max(worst, std::pow(sv.value, 1.0 / static_cast<double>(k - 1)) / std::log2(prod));
    }
    return {true, "max S^(1/(k-1)) / log2(4 m_1...m_(k-1)) over 30 samples: " + fmt(worst, 4)};
}

Outcome singular_rhopm(Context& ctx) { return rhopm_all(ctx, 20); }

Outcome brw_truncation(Context& ctx)
{
    u64 bad = 0, compared = 0;
    for (double c : {2.0, 3.0}) {
        for (std::uint64_t rep = 0; rep < 200; ++rep) {
            const auto lo = simulate_run(ctx.brw(1, 5, c), rep);
            const auto hi = simulate_run(ctx.brw(1, 5, c + 2), rep);
            for (int n = 0; n <= 5; ++n)
                for (double t = 0.25; t <= c; t += 0.25) {
                    ++compared;
                    bad += z_count(lo[n], t, c) != z_count(hi[n], t, c + 2);
                }
        }
    }
    return {bad == 0, std::to_string(compared) + " Z_n(t) comparisons, " + std::to_string(bad) + " differences"};
}

Outcome brw_dickman(Context& ctx)
{
    bool ok = true;
    std::string d;
    for (double u : {1.5, 2.0, 2.5, 3.0}) {
        const Proportion pr = m1_below(ctx.brw(100'000, 1, 1.0), u);
        ok = ok && std::abs(pr.p() - rho(u)) <= 3 * pr.se();
        d += (d.empty() ? "" : "; ") + std::string("u=") + fmt(u, 2) + ": " + fmt(pr.p(), 5) + " vs " + fmt(rho(u), 5);
    }
    return {ok, d};
}

Outcome brw_threads(Context& ctx)
{
    RunConfig a = ctx.brw(3000, 6, 3.0);
    RunConfig b = a;
    b.threads = 4;
    const std::vector<ZQuery> qs{{3, 2.0}, {6, 3.0}};
    RunConfig ma = ctx.brw(2000, 1, predicted_bn(12) + 4);
    RunConfig mb = ma;
    mb.threads = 4;
    const bool z = z_samples(a, qs) == z_samples(b, qs);
    const bool bn = sample_bn(12, ma, MedianMethod::exact).values == sample_bn(12, mb, MedianMethod::exact).values;
    const bool pop = sample_bn(12, ma, MedianMethod::population).values ==
                     sample_bn(12, mb, MedianMethod::population).values;
    const bool te = t_epsilon_samples(0.05, a) == t_epsilon_samples(0.05, b);
    return {z && bn && pop && te, std::string("Z ") + (z ? "same" : "DIFF") + ", exact B_n " + (bn ? "same" : "DIFF") +
                                      ", population B_n " + (pop ? "same" : "DIFF") + ", T(eps) " +
                                      (te ? "same" : "DIFF")};
}

Outcome brw_methods(Context& ctx)
{
    RunConfig cfg = ctx.brw(20'000, 1, 0);
    const MedianEstimate ex = estimate_median_bn(12, cfg, MedianMethod::exact);
    const MedianEstimate pop = estimate_median_bn(12, cfg, MedianMethod::population);
    return {std::abs(ex.median - pop.median) <= 0.1,
            "n=12 exact " + fmt(ex.median, 6) + ", population " + fmt(pop.median, 6)};
}

Outcome brw_t_epsilon(Context& ctx)
{
    const auto ts = t_epsilon_samples(std::exp(-12.0), ctx.brw(200, 0, 1.0));
    double mean = 0;
    for (int t : ts)
        mean += t;
    mean /= static_cast<double>(ts.size());
    return {std::abs(mean / 12.0 - std::exp(1.0)) <= 0.35, "eps=e^-12, mean T/12 = " + fmt(mean / 12.0, 4)};
}

Outcome dickman_relative(Context& ctx)
{
    const RhoTable& base = default_rho_table();
    double worst = 0;
    for (std::size_t i = 0; i < base.values().size(); ++i) {
        const double h = ctx.half_table().values()[2 * i];
        worst = std::max(worst, std::abs(base.values()[i] - h) / h);
    }
    return {worst <= 1e-8, "u <= 20, max relative change under h -> h/2: " + fmt(worst, 3)};
}

Outcome dickman_shape(Context&)
{
    const auto& v = default_rho_table().values();
    const std::size_t H = static_cast<std::size_t>(std::lround(1 / default_rho_table().step()));
    bool ok = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        ok = ok && v[i] > 0;
        if (i > H)
            ok = ok && v[i] < v[i - 1];
        if (i + 1 < v.size() && i > H)
            ok = ok && std::log(v[i + 1]) - 2 * std::log(v[i]) + std::log(v[i - 1]) <= 1e-12;
    }
    const double u = 10;
    return {ok, "positive, decreasing, log-concave; rho(10)=" + fmt(rho(u), 12)};
}

Outcome dickman_asymptotic(Context&)
{
    std::string d;
    for (double u : {10.0, 15.0, 20.0})
        d += "u=" + fmt(u, 3) + ": " + fmt(std::log(rho(u)) / log_rho_n_asymptotic(1, u), 4) + "; ";
    return {true, "log rho / log asymptotic " + d};
}

Outcome cli_examples(Context&)
{
    const auto pj = nlohmann::json::parse(run_cli({"pratt", "--prime", "7"}));
    const bool j = pj.at("p") == 7 && pj.at("f") == 4 && pj.at("H") == 3 && pj.at("g") == 2;
    std::string csv = run_cli({"hist", "--limit", "100000", "--stat", "H", "--format", "csv"});
    std::istringstream in(csv);
    std::string line;
    u64 total = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header) {
            header = line == "stat,value,count";
            continue;
        }
        total += std::stoull(line.substr(line.rfind(',') + 1));
    }
    const bool ok = j && header && total == 9592;
    return {ok, std::string("pratt 7 ") + (j ? "ok" : "WRONG") + ", hist H sums to " + std::to_string(total)};
}

Outcome cli_determinism(Context&)
{
    return determinism_commands({
        {"brw", "run", "--n", "3", "--cap", "3", "--reps", "500"},
        {"brw", "median-bn", "--n", "10", "--reps", "1000"},
        {"brw", "rde", "--pop", "1000", "--iters", "5"},
        {"hist", "--limit", "100000", "--stat", "f", "--format", "csv"},
    });
}

// clang-format off
const Entry kEntries[] = {
    {"sieve.l_value", "sieve", "n / l(n) squarefree and l(n) | n", 0, false, sieve_lvalue},
    {"sieve.brun_titchmarsh", "sieve", "pi(x;q,1) <= 2x/((q-1) log(x/q)) for q <= sqrt x", 0, false, sieve_brun_titchmarsh},
    {"sieve.prime_count", "sieve", "pi(1e5) agrees with independent primality tests", 0, false, sieve_prime_count},
    {"sieve.factorize", "sieve", "table factorization agrees with trial division", 0, false, sieve_factor_roundtrip},
    {"pratt.bounds", "pratt", "f, H bounds, parity, g = f/2, mass identity for p <= 1e5", 0, false, pratt_bounds},
    {"pratt.naive", "pratt", "f, h, g, level totals equal naive recursion for p <= 1e4", 0, false, pratt_naive},
    {"pratt.f_count", "pratt", "|{p <= x : f(p) = h}| <= (6 log x / h)^h", 0, false, pratt_fcount},
    {"pratt.threads", "pratt", "range statistics independent of thread count", 0, false, pratt_threads},
    {"chains.properties", "chains", "monotone in x, N_2 = pi(px;p,1), length sums, ratio bound, link round trip", 0, false, chains_properties},
    {"chains.g", "chains", "chains from 2 ending at p number g(p)", 0, false, chains_g},
    {"sifted.rows", "sifted", "row sums match closed form; d even; max at d = 2", 0, false, sifted_rows},
    {"sifted.entries", "sifted", "matrix entries match direct summation", 0, false, sifted_entries},
    {"sifted.perron", "sifted", "Perron root <= max row sum; matches dense eigensolver", 0, false, sifted_perron},
    {"sifted.chain_bound", "sifted", "chain_count_bound(x, y) >= N(x;p) for y < p <= 50", 0, false, sifted_chain_bound},
    {"singular.xi", "singular", "1 <= xi <= min(k, p) unless a form vanishes mod p; scan equals root count", 0, false, singular_xi},
    {"singular.vanishing", "singular", "series is 0 iff some xi(p) = p", 0, false, singular_vanishing},
    {"singular.growth", "singular", "S^(1/(k-1)) / log2(4 prod m) stays bounded", 0, true, singular_growth},
    {"singular.rhopm", "singular", "root-count lower bound, 20 fixed assignments", 0, false, singular_rhopm},
    {"brw.truncation", "brw", "Z_n(t) identical at caps c and c + 2", 0, false, brw_truncation},
    {"brw.expectations", "brw", "E Z_n(t) = t^n/n!, P{Z_1(1/2) >= 1}, P{M_1 <= 1/2}", 0, false, brw_expectations},
    {"brw.dickman", "brw", "P{M_1 <= 1/u} = rho(u) within 3 SE", 0, false, brw_dickman},
    {"brw.z1_tail", "brw", "P{Z_1(t) >= k} <= (et/k)^(k-1) + 3 SE", 0, false, z1_tail},
    {"brw.threads", "brw", "samples independent of thread count", 0, false, brw_threads},
    {"brw.t_epsilon", "brw", "T(eps)/log(1/eps) within 0.35 of e at eps = e^-12", 0, false, brw_t_epsilon},
    {"brw.methods", "brw", "exact and population medians agree at n = 12", 0, false, brw_methods},
    {"dickman.closed_forms", "dickman", "rho(2), rho(3), grid halving", 0, false, dickman_acceptance},
    {"dickman.relative", "dickman", "relative accuracy 1e-8 on [0, 20]", 0, false, dickman_relative},
    {"dickman.shape", "dickman", "rho > 0, decreasing, log-concave on the grid", 0, false, dickman_shape},
    {"dickman.asymptotic", "dickman", "log rho(u) against leading-order asymptotic", 0, true, dickman_asymptotic},
    {"cli.examples", "cli", "pratt and hist outputs", 0, false, cli_examples},
    {"cli.determinism", "cli", "byte-identical across runs and thread counts", 0, false, cli_determinism},
    {"A1", "acceptance", "recursion oracle: naive f, h for p <= 1e4; enumeration for p <= 2000", 10, false, recursion_oracle},
    {"A2", "acceptance", "bounds sweep p <= 1e6: f, H bounds, parity, g = f/2, mass identity", 60, false, bounds_sweep},
    {"A3", "acceptance", "{p <= 1e6 : H(p) = 2} = {3, 5, 17, 257, 65537}", 0, false, fermat},
    {"A4", "acceptance", "N(10) = 9, N identity at 1e2..1e4, f-count bound at 1e5", 0, false, counting_identities},
    {"A5", "acceptance", "row sums, R(3, 2), Perron <= R, N(1e3;7) <= bound", 0, false, sifted_acceptance},
    {"A6", "acceptance", "S((2)) = 1.32032, S((1)) = 0, root-count bound", 0, false, singular_acceptance},
    {"A7", "acceptance", "BRW expectations at 1e5 replicates", 120, false, brw_expectations},
    {"A8", "acceptance", "median B_n: b_1, b_20 against prediction, b_40 - b_20", 600, false, median_growth},
    {"A9", "acceptance", "P{Z_1(t) >= k} <= (et/k)^(k-1) + 3 SE", 0, false, z1_tail},
    {"A10", "acceptance", "Dickman closed form, rho(3), grid halving", 0, false, dickman_acceptance},
    {"A11", "acceptance", "MC commands byte-identical across runs and --threads 1 vs 8", 0, false, determinism},
};
// clang-format on

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"sieve", "pratt", "chains", "sifted", "singular",
                                                "brw",   "dickman", "cli", "acceptance", "all"};
    return names;
}

std::vector<Check> run(const std::string& suite, const Options& opt)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw DomainError("verify: unknown suite '" + suite + "'");
    Context ctx(opt);
    std::vector<Check> out;
    for (const Entry& e : kEntries) {
        if (suite != "all" && suite != e.suite)
            continue;
        Check c;
        c.id = e.id;
        c.suite = e.suite;
        c.title = e.title;
        c.report_only = e.report_only;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Outcome o = e.fn(ctx);
            c.passed = o.passed;
            c.detail = o.detail;
        } catch (const std::exception& ex) {
            c.passed = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.budget > 0 && c.seconds > e.budget) {
            c.passed = false;
            c.detail += "; over time budget " + fmt(e.budget, 4) + " s";
        }
        if (c.report_only)
            c.passed = true;
        if (opt.on_check)
            opt.on_check(c);
        out.push_back(std::move(c));
    }
    return out;
}

bool all_passed(const std::vector<Check>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string format_line(const Check& c)
{
    std::ostringstream s;
    s << (c.report_only ? "INFO" : c.passed ? "PASS" : "FAIL") << ' ' << std::left << std::setw(22) << c.id << ' '
      << c.title << "  (" << c.detail << ", " << std::fixed << std::setprecision(2) << c.seconds << " s)";
    return s.str();
}

} // namespace primechain::verify
