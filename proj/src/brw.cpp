#include "primechain/brw.hpp"

#include "primechain/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace primechain {

namespace {

constexpr std::uint64_t kTreeTag = 0x7472656500000000ULL;
constexpr std::uint64_t kPopulationTag = 0x706f700000000000ULL;
constexpr std::uint64_t kRdeTag = 0x7264650000000000ULL;
constexpr std::uint32_t kSticks = 0;
constexpr std::uint32_t kPicks = 1;
constexpr double kExactWorkLimit = 3.0e4;

// Static partition of [0, count) over threads; fn(i) must write only to
// slot i so the result is independent of the thread count.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::uint64_t population_slot(std::uint64_t seed, std::uint64_t tag, int generation, std::uint64_t slot)
{
    return derive_stream(derive_stream(mix64(seed ^ tag), static_cast<std::uint64_t>(generation)), slot);
}

} // namespace

void RunConfig::validate() const
{
    if (!(cap > 0.0))
        throw DomainError("brw: cap must be positive");
    if (replicates < 1)
        throw DomainError("brw: replicates must be >= 1");
    if (generations < 0)
        throw DomainError("brw: generations must be >= 0");
}

std::vector<Offset> sample_lpd_offsets(const std::function<double(std::uint32_t)>& uniform, double cap)
{
    if (!(cap > 0.0))
        throw DomainError("sample_lpd_offsets: cap must be positive");
    std::vector<Offset> out;
    double spent = 0.0; // -log of the unbroken remainder
    for (std::uint32_t k = 0; spent <= cap; ++k) {
        const double u = uniform(k);
        const double v = spent - std::log(u);
        if (v <= cap)
            out.push_back({v, k});
        spent -= std::log1p(-u);
    }
    return out;
}

std::vector<Offset> sample_lpd_offsets(const UniformStream& stream, double cap)
{
    return sample_lpd_offsets([&](std::uint32_t k) { return stream.uniform(k); }, cap);
}

std::uint64_t root_node(std::uint64_t seed, std::uint64_t replicate)
{
    return derive_stream(mix64(seed ^ kTreeTag), replicate);
}

std::uint64_t child_node(std::uint64_t parent, std::uint32_t stick) { return derive_stream(parent, stick); }

std::vector<FragmentGeneration> simulate_run(const RunConfig& cfg, std::uint64_t replicate)
{
    cfg.validate();
    const Philox4x32 gen(cfg.seed);
    std::vector<FragmentGeneration> out;
    out.push_back({0, {0.0}, {root_node(cfg.seed, replicate)}, false});
    std::uint64_t population = 1;
    for (int n = 1; n <= cfg.generations; ++n) {
        const auto& parent = out.back();
        FragmentGeneration next;
        next.n = n;
        std::vector<std::pair<double, std::uint64_t>> kids;
        for (std::size_t i = 0; i < parent.positions.size(); ++i) {
            const double z = parent.positions[i];
            const UniformStream sticks(gen, parent.node_ids[i], kSticks);
            for (const auto& o : sample_lpd_offsets(sticks, cfg.cap - z)) {
                kids.emplace_back(z + o.value, child_node(parent.node_ids[i], o.index));
            }
        }
        population += kids.size();
        if (population > cfg.max_population)
            throw CapacityError("simulate_run: population exceeds budget; lower the cap");
        std::sort(kids.begin(), kids.end());
        for (const auto& [z, id] : kids) {
            next.positions.push_back(z);
            next.node_ids.push_back(id);
        }
        next.censored = next.positions.empty();
        out.push_back(std::move(next));
    }
    return out;
}

std::uint64_t z_count(const FragmentGeneration& g, double t, double cap)
{
    if (t > cap)
        throw CensoringError("z_count: t exceeds the truncation cap");
    return static_cast<std::uint64_t>(std::upper_bound(g.positions.begin(), g.positions.end(), t) -
                                      g.positions.begin());
}

std::vector<std::uint64_t> z_samples(const RunConfig& cfg, const std::vector<ZQuery>& queries)
{
    cfg.validate();
    RunConfig run = cfg;
    run.generations = 0;
    for (const auto& q : queries) {
        if (q.t > cfg.cap)
            throw CensoringError("z_samples: t exceeds the truncation cap");
        run.generations = std::max(run.generations, q.n);
    }
    std::vector<std::uint64_t> out(cfg.replicates * queries.size());
    parallel_for(cfg.replicates, cfg.threads, [&](std::uint64_t rep) {
        const auto gens = simulate_run(run, rep);
        for (std::size_t j = 0; j < queries.size(); ++j)
            out[rep * queries.size() + j] = z_count(gens[static_cast<std::size_t>(queries[j].n)], queries[j].t, run.cap);
    });
    return out;
}

MeanEstimate mean_of(const std::vector<double>& xs)
{
    MeanEstimate m;
    m.samples = xs.size();
    if (xs.empty())
        return m;
    const double n = static_cast<double>(xs.size());
    m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - m.mean) * (x - m.mean);
    m.se = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return m;
}

double Proportion::se() const
{
    if (!trials)
        return 0.0;
    const double q = p();
    return std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

std::pair<double, double> Proportion::wilson(double z) const
{
    if (!trials)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double q = p();
    const double denom = 1.0 + z * z / n;
    const double centre = (q + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(q * (1.0 - q) / n + z * z / (4.0 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

Proportion m1_below(const RunConfig& cfg, double u)
{
    cfg.validate();
    if (!(u >= 1.0))
        throw DomainError("m1_below: u must be >= 1");
    const Philox4x32 gen(cfg.seed);
    const double level = std::log(u);
    std::vector<std::uint8_t> hit(cfg.replicates, 0);
    parallel_for(cfg.replicates, cfg.threads, [&](std::uint64_t rep) {
        if (level <= 0.0) {
            hit[rep] = 0;
            return;
        }
        const UniformStream sticks(gen, root_node(cfg.seed, rep), kSticks);
        hit[rep] = sample_lpd_offsets(sticks, level).empty() ? 1 : 0;
    });
    Proportion p;
    p.trials = cfg.replicates;
    p.hits = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
    return p;
}

int t_epsilon(double eps, const RunConfig& cfg, std::uint64_t replicate, int max_generations)
{
    if (!(eps > 0.0 && eps <= 1.0))
        throw DomainError("t_epsilon: eps must lie in (0, 1]");
    if (eps == 1.0)
        return 0;
    const double level = -std::log(eps);
    const Philox4x32 gen(cfg.seed);
    // Fragments of size <= eps (position >= level) never matter again.
    std::vector<std::pair<double, std::uint64_t>> alive{{0.0, root_node(cfg.seed, replicate)}};
    std::uint64_t population = 1;
    for (int n = 1; n <= max_generations; ++n) {
        std::vector<std::pair<double, std::uint64_t>> next;
        for (const auto& [z, id] : alive) {
            const UniformStream sticks(gen, id, kSticks);
            for (const auto& o : sample_lpd_offsets(sticks, level - z))
                if (z + o.value < level)
                    next.emplace_back(z + o.value, child_node(id, o.index));
        }
        if (next.empty())
            return n;
        population += next.size();
        if (population > cfg.max_population)
            throw CapacityError("t_epsilon: population exceeds budget");
        alive = std::move(next);
    }
    throw CapacityError("t_epsilon: generation limit reached");
}

std::vector<int> t_epsilon_samples(double eps, const RunConfig& cfg, int max_generations)
{
    cfg.validate();
    std::vector<int> out(cfg.replicates);
    parallel_for(cfg.replicates, cfg.threads,
                 [&](std::uint64_t rep) { out[rep] = t_epsilon(eps, cfg, rep, max_generations); });
    return out;
}

std::string to_string(MedianMethod m)
{
    switch (m) {
    case MedianMethod::automatic: return "auto";
    case MedianMethod::exact: return "exact";
    case MedianMethod::population: return "population";
    }
    return "auto";
}

MedianMethod parse_median_method(const std::string& s)
{
    if (s == "auto")
        return MedianMethod::automatic;
    if (s == "exact")
        return MedianMethod::exact;
    if (s == "population")
        return MedianMethod::population;
    throw DomainError("unknown median method '" + s + "'");
}

double predicted_bn(int n)
{
    const double e = std::exp(1.0);
    return n / e + 1.5 / e * std::log(static_cast<double>(n));
}

double exact_bn(int n, double cap, std::uint64_t seed, std::uint64_t replicate, std::uint64_t node_budget)
{
    const Philox4x32 gen(seed);
    double best = cap;
    bool found = false;
    std::uint64_t visited = 0;
    auto dfs = [&](auto&& self, std::uint64_t id, int depth, double z) -> void {
        if (++visited > node_budget)
            throw CapacityError("exact_bn: node budget exhausted");
        if (depth == n) {
            if (z <= best) {
                best = z;
                found = true;
            }
            return;
        }
        const UniformStream sticks(gen, id, kSticks);
        auto kids = sample_lpd_offsets(sticks, best - z);
        std::sort(kids.begin(), kids.end(), [](const Offset& a, const Offset& b) { return a.value < b.value; });
        for (const auto& o : kids) {
            if (z + o.value > best)
                break;
            self(self, child_node(id, o.index), depth + 1, z + o.value);
        }
    };
    if (n == 0)
        return 0.0;
    if (cap > 0.0)
        dfs(dfs, root_node(seed, replicate), 0, 0.0);
    return found ? best : kInf;
}

namespace {

MedianMethod resolve(MedianMethod method, int n)
{
    if (method != MedianMethod::automatic)
        return method;
    return std::exp(predicted_bn(std::max(n, 1))) <= kExactWorkLimit ? MedianMethod::exact
                                                                      : MedianMethod::population;
}

std::vector<double> population_bn(int n, const RunConfig& cfg)
{
    const Philox4x32 gen(cfg.seed);
    const std::uint64_t size = cfg.replicates;
    std::vector<double> prev(size, 0.0), next(size);
    for (int j = 1; j <= n; ++j) {
        double min_prev = kInf;
        for (double v : prev)
            min_prev = std::min(min_prev, v);
        if (!std::isfinite(min_prev)) {
            std::fill(prev.begin(), prev.end(), kInf);
            break;
        }
        parallel_for(size, cfg.threads, [&](std::uint64_t i) {
            const std::uint64_t node = population_slot(cfg.seed, kPopulationTag, j, i);
            const UniformStream sticks(gen, node, kSticks);
            const UniformStream picks(gen, node, kPicks);
            double best = cfg.cap;
            bool found = false;
            double spent = 0.0;
            for (std::uint32_t k = 0; spent <= best - min_prev; ++k) {
                const double u = sticks.uniform(k);
                const double v = spent - std::log(u);
                spent -= std::log1p(-u);
                const double cand = v + prev[picks.below(k, size)];
                if (cand <= best) {
                    best = cand;
                    found = true;
                }
            }
            next[i] = found ? best : kInf;
        });
        std::swap(prev, next);
    }
    return prev;
}

} // namespace

BnSamples sample_bn(int n, const RunConfig& cfg, MedianMethod method, std::uint64_t node_budget)
{
    cfg.validate();
    if (n < 1)
        throw DomainError("sample_bn: n must be >= 1");
    BnSamples out;
    out.n = n;
    out.cap = cfg.cap;
    out.method = resolve(method, n);
    if (out.method == MedianMethod::exact) {
        out.values.assign(cfg.replicates, 0.0);
        parallel_for(cfg.replicates, cfg.threads, [&](std::uint64_t rep) {
            out.values[rep] = exact_bn(n, cfg.cap, cfg.seed, rep, node_budget);
        });
    } else {
        out.values = population_bn(n, cfg);
    }
    const auto censored = std::count_if(out.values.begin(), out.values.end(), [](double v) { return std::isinf(v); });
    out.censored_fraction = static_cast<double>(censored) / static_cast<double>(out.values.size());
    return out;
}

double median_with_censoring(std::vector<double> values)
{
    if (values.empty())
        throw DomainError("median of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

MedianEstimate estimate_median_bn(int n, const RunConfig& cfg, MedianMethod method)
{
    if (cfg.replicates < 100)
        throw DomainError("estimate_median_bn: at least 100 replicates required");
    RunConfig run = cfg;
    if (!(run.cap > 0.0))
        run.cap = predicted_bn(n) + 4.0;
    else if (run.cap < predicted_bn(n) + 4.0)
        throw DomainError("estimate_median_bn: cap must be at least predicted b_n + 4");
    auto samples = sample_bn(n, run, method);
    if (samples.censored_fraction >= 0.5) {
        run.cap += 2.0;
        samples = sample_bn(n, run, method);
        if (samples.censored_fraction >= 0.5)
            throw CensoringError("estimate_median_bn: half or more of the replicates censored at cap " +
                                 std::to_string(run.cap));
    }
    MedianEstimate m;
    m.n = n;
    m.cap = run.cap;
    m.method = samples.method;
    m.censored_fraction = samples.censored_fraction;
    m.replicates = samples.values.size();
    auto sorted = samples.values;
    std::sort(sorted.begin(), sorted.end());
    m.median = median_with_censoring(sorted);
    // distribution-free interval from binomial order statistics
    const double R = static_cast<double>(sorted.size());
    const double half = 1.96 * std::sqrt(R) / 2.0;
    const auto lo = static_cast<std::size_t>(std::max(0.0, std::floor(R / 2.0 - half)));
    const auto hi = static_cast<std::size_t>(std::min(R - 1.0, std::ceil(R / 2.0 + half)));
    m.ci_low = sorted[lo];
    m.ci_high = sorted[hi];
    return m;
}

TailEstimate estimate_tails(int n, const RunConfig& cfg, MedianMethod method, double x_step, double x_max)
{
    if (cfg.replicates < 100)
        throw DomainError("estimate_tails: at least 100 replicates required");
    if (!(x_step > 0.0) || !(x_max >= 0.0))
        throw DomainError("estimate_tails: bad x grid");
    RunConfig run = cfg;
    if (!(run.cap > 0.0))
        run.cap = predicted_bn(n) + 6.0;
    else if (run.cap < predicted_bn(n) + 4.0)
        throw DomainError("estimate_tails: cap must be at least predicted b_n + 4");
    const auto samples = sample_bn(n, run, method);
    if (samples.censored_fraction >= 0.5)
        throw CensoringError("estimate_tails: half or more of the replicates censored");

    TailEstimate t;
    t.n = n;
    t.cap = run.cap;
    t.method = samples.method;
    t.censored_fraction = samples.censored_fraction;
    t.median = median_with_censoring(samples.values);
    const auto trials = static_cast<std::uint64_t>(samples.values.size());
    const int steps = static_cast<int>(std::floor(x_max / x_step + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double x = i * x_step;
        TailPoint pt;
        pt.x = x;
        pt.left.trials = trials;
        pt.right.trials = trials;
        for (double v : samples.values) {
            pt.left.hits += v <= t.median - x;
            pt.right.hits += v >= t.median + x;
        }
        if (t.median + x > run.cap)
            pt.right.trials = 0; // unobservable beyond the cap
        t.points.push_back(pt);
    }

    // Least squares of log P{B_n <= b - x} on x over x >= 0.5 with >= 20 hits.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& pt : t.points) {
        if (pt.x < 0.5 || pt.left.hits < 20)
            continue;
        const double yv = std::log(pt.left.p());
        sx += pt.x;
        sy += yv;
        sxx += pt.x * pt.x;
        sxy += pt.x * yv;
        ++m;
    }
    if (m >= 2) {
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        t.left_slope = -slope;
    }
    return t;
}

double ks_distance(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty())
        throw DomainError("ks_distance: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v)
            ++i;
        while (j < b.size() && b[j] <= v)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

RdeResult rde_iterate(std::uint64_t pop_size, int iters, const RunConfig& cfg, double drift_bound)
{
    if (pop_size < 1000)
        throw DomainError("rde_iterate: population must be >= 1000");
    if (iters < 1)
        throw DomainError("rde_iterate: iters must be >= 1");
    const Philox4x32 gen(cfg.seed);
    const double shift = 1.0 / std::exp(1.0);
    RdeResult res;
    std::vector<double> prev(pop_size, 0.0), next(pop_size);
    for (int k = 1; k <= iters; ++k) {
        const double min_prev = *std::min_element(prev.begin(), prev.end());
        parallel_for(pop_size, cfg.threads, [&](std::uint64_t i) {
            const std::uint64_t node = population_slot(cfg.seed, kRdeTag, k, i);
            const UniformStream sticks(gen, node, kSticks);
            const UniformStream picks(gen, node, kPicks);
            double best = kInf;
            double spent = 0.0;
            for (std::uint32_t s = 0; spent <= best - min_prev; ++s) {
                const double u = sticks.uniform(s);
                const double v = spent - std::log(u);
                spent -= std::log1p(-u);
                best = std::min(best, v + prev[picks.below(s, pop_size)]);
            }
            next[i] = best - shift;
        });
        res.ks.push_back(ks_distance(next, prev));
        std::swap(prev, next);
        res.medians.push_back(median_with_censoring(prev));
        const double mean = std::accumulate(prev.begin(), prev.end(), 0.0) / static_cast<double>(pop_size);
        if (std::abs(mean) > drift_bound) {
            res.diverged = true;
            break;
        }
    }
    std::sort(prev.begin(), prev.end());
    res.sample = prev;
    res.median = median_with_censoring(prev);
    const double R = static_cast<double>(pop_size);
    const double half = 1.96 * std::sqrt(R) / 2.0;
    res.median_ci_low = prev[static_cast<std::size_t>(std::max(0.0, std::floor(R / 2.0 - half)))];
    res.median_ci_high = prev[static_cast<std::size_t>(std::min(R - 1.0, std::ceil(R / 2.0 + half)))];
    return res;
}

} // namespace primechain
