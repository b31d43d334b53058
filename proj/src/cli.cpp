#include "primechain/cli.hpp"

#include "primechain/brw.hpp"
#include "primechain/chains.hpp"
#include "primechain/dickman.hpp"
#include "primechain/error.hpp"
#include "primechain/pratt.hpp"
#include "primechain/sieve.hpp"
#include "primechain/sifted.hpp"
#include "primechain/singular.hpp"
#include "primechain/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace primechain::cli {

namespace {

using json = nlohmann::json;

std::string num(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

struct Flags {
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
    std::string plot;

    u64 prime = 0;
    bool levels = false;

    u64 limit = 0;
    std::string stat = "both";

    double x = 0;
    bool list = false;
    u64 max_chains = 1'000'000;

    double y = 0;

    std::vector<u64> links;
    u64 pcut = 1'000'000;

    int n = 0;
    double cap = 0;
    std::uint64_t reps = 1000;
    std::string method = "auto";
    std::vector<double> ts;
    double x_step = 0.25;
    double x_max = 6.0;
    double eps = 0.01;
    int max_gen = 10000;
    std::uint64_t pop = 10000;
    int iters = 50;
    double drift = 50.0;

    double u = 0;
    int rho_n = 0;

    std::string suite = "all";
};

class Emitter {
public:
    Emitter(std::ostream& fallback, const std::string& path)
    {
        if (path.empty()) {
            os_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw DomainError("cannot open output file " + path);
            os_ = &file_;
        }
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit_json(std::ostream& os, json body, const json& config)
{
    body["config"] = config;
    os << body.dump(2) << '\n';
}

void emit_csv(std::ostream& os, const json& config, const std::string& header,
              const std::vector<std::vector<std::string>>& rows)
{
    os << "# config " << config.dump() << '\n' << header << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << r[i];
        os << '\n';
    }
}

RunConfig brw_config(const Flags& f, int generations, double cap)
{
    RunConfig c;
    c.seed = f.seed;
    c.replicates = f.reps;
    c.generations = generations;
    c.cap = cap;
    c.threads = f.threads;
    return c;
}

MedianMethod method_of(const Flags& f)
{
    return f.method == "auto" ? MedianMethod::automatic : parse_median_method(f.method);
}

// ---------------------------------------------------------------- commands

void cmd_pratt(const Flags& f, std::ostream& os)
{
    const json config{{"command", "pratt"}, {"prime", f.prime}, {"levels", f.levels}};
    PrattDag dag;
    json body{{"p", f.prime}, {"f", f_of(f.prime, dag)}, {"H", h_of(f.prime, dag)}, {"g", g_of(f.prime, dag)}};
    if (f.levels)
        body["levels"] = level_counts(f.prime, dag).counts;
    emit_json(os, body, config);
}

std::string gnuplot_script(const std::string& data, const std::string& stat)
{
    std::ostringstream s;
    s << "# gnuplot script for " << (data.empty() ? "hist.csv" : data) << "\n"
      << "set datafile separator ','\n"
      << "set style fill solid 0.6\n"
      << "set boxwidth 0.8\n"
      << "set logscale y\n"
      << "set xlabel '" << stat << "'\n"
      << "set ylabel 'primes'\n"
      << "plot '" << (data.empty() ? "hist.csv" : data) << "' every ::1 using 2:(strcol(1) eq '" << stat
      << "' ? $3 : NaN) with boxes title '" << stat << "(p)'\n";
    return s.str();
}

void cmd_hist(const Flags& f, std::ostream& os)
{
    const json config{{"command", "hist"}, {"limit", f.limit}, {"stat", f.stat}, {"format", f.format}};
    const SpfTable table(f.limit, kDefaultSegmentWidth, f.threads);
    const RangeStats st = range_stats(f.limit, table, f.threads);
    const bool want_h = f.stat != "f";
    const bool want_f = f.stat != "H";
    if (f.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        if (want_h)
            for (const auto& [v, c] : st.h_hist)
                rows.push_back({"H", std::to_string(v), std::to_string(c)});
        if (want_f)
            for (const auto& [v, c] : st.f_hist)
                rows.push_back({"f", std::to_string(v), std::to_string(c)});
        emit_csv(os, config, "stat,value,count", rows);
    } else {
        json body{{"limit", st.limit},          {"prime_count", st.prime_count}, {"chain_total", st.chain_total},
                  {"max_h", st.max_h},          {"max_h_prime", st.max_h_prime}, {"max_f", st.max_f},
                  {"max_f_prime", st.max_f_prime}};
        auto rows = [](const auto& hist) {
            json a = json::array();
            for (const auto& [v, c] : hist)
                a.push_back({{"value", v}, {"count", c}});
            return a;
        };
        if (want_h)
            body["H"] = rows(st.h_hist);
        if (want_f)
            body["f"] = rows(st.f_hist);
        emit_json(os, body, config);
    }
    if (!f.plot.empty()) {
        std::ofstream script(f.plot, std::ios::binary);
        if (!script)
            throw DomainError("cannot open plot script file " + f.plot);
        script << gnuplot_script(f.output, f.stat == "f" ? "f" : "H");
    }
}

void cmd_chains(const Flags& f, std::ostream& os)
{
    const json config{{"command", "chains"}, {"prime", f.prime}, {"x", f.x},
                      {"list", f.list},      {"max_chains", f.max_chains}, {"format", f.format}};
    EnumerateOptions opt;
    opt.bound = f.max_chains;
    opt.keep_chains = f.list;
    const ChainEnumeration e = enumerate_from(f.prime, f.x, nullptr, opt);
    if (f.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        if (f.list) {
            for (const auto& c : e.chains) {
                std::string s;
                for (u64 q : c.primes)
                    s += (s.empty() ? "" : " ") + std::to_string(q);
                rows.push_back({std::to_string(c.length()), s});
            }
            emit_csv(os, config, "length,primes", rows);
        } else {
            for (std::size_t k = 1; k < e.by_length.size(); ++k)
                rows.push_back({std::to_string(k), std::to_string(e.by_length[k])});
            emit_csv(os, config, "length,count", rows);
        }
        return;
    }
    json by = json::object();
    for (std::size_t k = 1; k < e.by_length.size(); ++k)
        by[std::to_string(k)] = e.by_length[k];
    json body{{"p", f.prime}, {"x", f.x}, {"total", e.total}, {"by_length", by}};
    if (f.list) {
        json cs = json::array();
        for (const auto& c : e.chains)
            cs.push_back(c.primes);
        body["chains"] = cs;
    }
    emit_json(os, body, config);
}

void cmd_sift_bound(const Flags& f, std::ostream& os)
{
    const json config{{"command", "sift-bound"}, {"x", f.x}, {"y", f.y}};
    const ChainBound b = chain_count_bound(f.x, f.y);
    json body{{"x", b.x},
              {"y", b.y},
              {"r", b.r},
              {"phi_r", b.phi_r},
              {"s*", b.s_star},
              {"R", b.row_sum},
              {"R_upper", max_row_sum_upper(f.y, b.s_star)},
              {"lambda", std::isfinite(b.lambda) ? json(b.lambda) : json(nullptr)},
              {"bound", b.bound},
              {"asymptotic_y", b.asymptotic_y},
              {"asymptotic_s", b.asymptotic_s}};
    emit_json(os, body, config);
}

void cmd_singular(const Flags& f, std::ostream& os)
{
    const json config{{"command", "singular"}, {"links", f.links}, {"pcut", f.pcut}};
    const SingularValue v = singular_series(f.links, f.pcut);
    json body{{"k", v.k},           {"value", v.value},   {"tail_low", v.tail_low},
              {"tail_high", v.tail_high}, {"cutoff", v.cutoff}, {"vanishes", v.vanishes}};
    emit_json(os, body, config);
}

void cmd_brw_run(const Flags& f, std::ostream& os)
{
    std::vector<double> ts = f.ts.empty() ? std::vector<double>{f.cap} : f.ts;
    for (double t : ts)
        if (!(t >= 0 && t <= f.cap))
            throw DomainError("brw run: every --t must lie in [0, cap]");
    const json config{{"command", "brw run"}, {"n", f.n},    {"cap", f.cap}, {"reps", f.reps},
                      {"seed", f.seed},       {"t", ts},     {"format", f.format}};
    const RunConfig cfg = brw_config(f, f.n, f.cap);
    std::vector<ZQuery> qs;
    for (int n = 0; n <= f.n; ++n)
        for (double t : ts)
            qs.push_back({n, t});
    const auto z = z_samples(cfg, qs);
    std::vector<std::vector<std::string>> rows;
    json recs = json::array();
    for (std::size_t q = 0; q < qs.size(); ++q) {
        std::vector<double> xs(cfg.replicates);
        std::uint64_t empty = 0;
        for (std::uint64_t r = 0; r < cfg.replicates; ++r) {
            xs[r] = static_cast<double>(z[r * qs.size() + q]);
            empty += xs[r] == 0;
        }
        const MeanEstimate me = mean_of(xs);
        const double zero = static_cast<double>(empty) / static_cast<double>(cfg.replicates);
        const double expected = std::pow(qs[q].t, qs[q].n) / std::tgamma(qs[q].n + 1.0);
        recs.push_back({{"n", qs[q].n}, {"t", qs[q].t}, {"mean", me.mean}, {"se", me.se},
                        {"expected", expected}, {"zero_fraction", zero}});
        rows.push_back({std::to_string(qs[q].n), num(qs[q].t), num(me.mean), num(me.se), num(expected), num(zero)});
    }
    if (f.format == "csv")
        emit_csv(os, config, "n,t,mean,se,expected,zero_fraction", rows);
    else
        emit_json(os, json{{"records", recs}}, config);
}

void cmd_brw_median(const Flags& f, std::ostream& os)
{
    const json config{{"command", "brw median-bn"}, {"n", f.n},           {"cap", f.cap},
                      {"reps", f.reps},             {"seed", f.seed},     {"method", f.method}};
    const MedianEstimate m = estimate_median_bn(f.n, brw_config(f, f.n, f.cap), method_of(f));
    json body{{"n", m.n},
              {"median", m.median},
              {"ci_low", m.ci_low},
              {"ci_high", m.ci_high},
              {"cap", m.cap},
              {"censored_fraction", m.censored_fraction},
              {"method", to_string(m.method)},
              {"replicates", m.replicates},
              {"predicted", predicted_bn(f.n)}};
    emit_json(os, body, config);
}

void cmd_brw_tails(const Flags& f, std::ostream& os)
{
    const json config{{"command", "brw tails"}, {"n", f.n},         {"cap", f.cap},       {"reps", f.reps},
                      {"seed", f.seed},         {"method", f.method}, {"x_step", f.x_step}, {"x_max", f.x_max},
                      {"format", f.format}};
    const TailEstimate t = estimate_tails(f.n, brw_config(f, f.n, f.cap), method_of(f), f.x_step, f.x_max);
    json pts = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : t.points) {
        const bool right = p.right.trials > 0;
        pts.push_back({{"x", p.x},
                       {"left_p", p.left.p()},
                       {"left_se", p.left.se()},
                       {"right_p", right ? json(p.right.p()) : json(nullptr)},
                       {"right_se", right ? json(p.right.se()) : json(nullptr)}});
        rows.push_back({num(p.x), num(p.left.p()), num(p.left.se()), right ? num(p.right.p()) : "",
                        right ? num(p.right.se()) : ""});
    }
    if (f.format == "csv") {
        emit_csv(os, config, "x,left_p,left_se,right_p,right_se", rows);
        return;
    }
    json body{{"n", t.n},
              {"median", t.median},
              {"cap", t.cap},
              {"left_slope", t.left_slope},
              {"censored_fraction", t.censored_fraction},
              {"method", to_string(t.method)},
              {"points", pts}};
    emit_json(os, body, config);
}

void cmd_brw_teps(const Flags& f, std::ostream& os)
{
    const json config{{"command", "brw teps"}, {"eps", f.eps},   {"reps", f.reps},
                      {"seed", f.seed},        {"max_gen", f.max_gen}};
    RunConfig cfg = brw_config(f, 0, -std::log(f.eps) > 0 ? -std::log(f.eps) : 1.0);
    const auto ts = t_epsilon_samples(f.eps, cfg, f.max_gen);
    std::map<int, std::uint64_t> hist;
    std::vector<double> xs;
    for (int t : ts) {
        ++hist[t];
        xs.push_back(t);
    }
    const MeanEstimate me = mean_of(xs);
    json h = json::array();
    for (const auto& [t, c] : hist)
        h.push_back({{"T", t}, {"count", c}});
    json body{{"eps", f.eps},
              {"mean", me.mean},
              {"se", me.se},
              {"median", median_with_censoring(xs)},
              {"histogram", h},
              {"replicates", f.reps}};
    emit_json(os, body, config);
}

void cmd_brw_rde(const Flags& f, std::ostream& os)
{
    const json config{{"command", "brw rde"}, {"pop", f.pop},   {"iters", f.iters},
                      {"seed", f.seed},       {"drift_bound", f.drift}};
    RunConfig cfg = brw_config(f, 0, 1.0);
    const RdeResult r = rde_iterate(f.pop, f.iters, cfg, f.drift);
    json body{{"ks", r.ks},
              {"medians", r.medians},
              {"median", r.median},
              {"ci_low", r.median_ci_low},
              {"ci_high", r.median_ci_high},
              {"diverged", r.diverged}};
    emit_json(os, body, config);
}

void cmd_dickman(const Flags& f, std::ostream& os)
{
    json config{{"command", "dickman"}, {"u", f.u}};
    json body{{"u", f.u}, {"rho", rho(f.u)}};
    if (f.rho_n > 0) {
        config["n"] = f.rho_n;
        body["n"] = f.rho_n;
        body["rho_n_asymptotic"] = rho_n_asymptotic(f.rho_n, f.u);
    }
    emit_json(os, body, config);
}

int cmd_verify(const Flags& f, std::ostream& os)
{
    verify::Options opt;
    opt.threads = f.threads;
    opt.seed = f.seed;
    if (f.format != "json")
        opt.on_check = [&os](const verify::Check& c) { os << verify::format_line(c) << std::endl; };
    const auto checks = verify::run(f.suite, opt);
    const bool ok = verify::all_passed(checks);
    if (f.format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"id", c.id},
                           {"suite", c.suite},
                           {"title", c.title},
                           {"passed", c.passed},
                           {"report_only", c.report_only},
                           {"detail", c.detail}});
        emit_json(os, json{{"checks", arr}, {"passed", ok}},
                  json{{"command", "verify"}, {"suite", f.suite}, {"seed", f.seed}});
    } else {
        std::size_t failed = 0;
        for (const auto& c : checks)
            failed += !c.passed;
        os << (ok ? "ALL PASSED" : "FAILED") << ": " << checks.size() - failed << "/" << checks.size() << '\n';
    }
    return ok ? 0 : 1;
}

unsigned env_threads()
{
    const char* v = std::getenv(kThreadsEnv);
    if (!v || !*v)
        return 1;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 256)
        return 1;
    return static_cast<unsigned>(n);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Flags f;
    f.threads = env_threads();
    std::function<int(std::ostream&)> action;

    CLI::App app{"Prime chains, Pratt trees and their branching random walk model", "primechain"};
    app.require_subcommand(1);

    auto threads = [&](CLI::App* s) {
        s->add_option("--threads", f.threads, std::string("worker threads (default from ") + kThreadsEnv + " or 1)")
            ->check(CLI::Range(1u, 256u));
    };
    auto output = [&](CLI::App* s) { s->add_option("--output,-o", f.output, "write to this file instead of stdout"); };
    auto seed = [&](CLI::App* s) { s->add_option("--seed", f.seed, "random seed")->capture_default_str(); };
    auto format = [&](CLI::App* s) {
        s->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };
    auto run = [&](auto fn) {
        return [&, fn] {
            action = [&, fn](std::ostream& os) {
                fn(f, os);
                return 0;
            };
        };
    };

    auto* pratt = app.add_subcommand("pratt", "f(p), H(p), g(p) of one prime");
    pratt->add_option("--prime", f.prime, "a prime")->required()->check(CLI::Range(u64{2}, u64{1'000'000'000'000'000}));
    pratt->add_flag("--levels", f.levels, "include node counts per depth");
    threads(pratt);
    output(pratt);
    pratt->callback(run(cmd_pratt));

    auto* hist = app.add_subcommand("hist", "histograms of H(p) and f(p) over p <= limit");
    hist->add_option("--limit", f.limit, "sweep primes up to this bound")->required()->check(
        CLI::Range(u64{2}, kSpfCeiling));
    hist->add_option("--stat", f.stat, "H, f or both")->check(CLI::IsMember({"H", "f", "both"}))->capture_default_str();
    hist->add_option("--plot", f.plot, "also write a gnuplot script to this file");
    format(hist);
    threads(hist);
    output(hist);
    hist->callback(run(cmd_hist));

    auto* chains = app.add_subcommand("chains", "chains starting at p with last element <= p x");
    chains->add_option("--prime", f.prime, "first element")->required()->check(CLI::Range(u64{2}, u64{1} << 40));
    chains->add_option("--x", f.x, "growth bound")->required()->check(CLI::Range(1.0, 1e12));
    chains->add_flag("--list", f.list, "list every chain");
    chains->add_option("--max-chains", f.max_chains, "refuse to enumerate more chains than this")
        ->check(CLI::Range(u64{1}, u64{100'000'000}))
        ->capture_default_str();
    format(chains);
    threads(chains);
    output(chains);
    chains->callback(run(cmd_chains));

    auto* sift = app.add_subcommand("sift-bound", "sifted-chain upper bound for N(x; p), p > y");
    sift->add_option("--x", f.x, "chain growth bound")->required()->check(CLI::Range(1.0 + 1e-9, 1e300));
    sift->add_option("--y", f.y, "sifting level")->required()->check(CLI::Range(2.0, 28.999));
    threads(sift);
    output(sift);
    sift->callback(run(cmd_sift_bound));

    auto* sing = app.add_subcommand("singular", "singular series of the forms n, m_1 n + 1, ...");
    sing->add_option("--links", f.links, "comma separated links m_1,...,m_(k-1)")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(u64{1}, u64{1'000'000'000'000}));
    sing->add_option("--pcut", f.pcut, "primes up to this are treated exactly")
        ->check(CLI::Range(u64{100}, u64{100'000'000}))
        ->capture_default_str();
    threads(sing);
    output(sing);
    sing->callback(run(cmd_singular));

    auto* brw = app.add_subcommand("brw", "branching random walk with Poisson-Dirichlet displacements");
    brw->require_subcommand(1);
    auto reps = [&](CLI::App* s, std::uint64_t lo) {
        s->add_option("--reps", f.reps, "replicates")
            ->check(CLI::Range(lo, std::uint64_t{10'000'000}))
            ->capture_default_str();
    };
    auto method = [&](CLI::App* s) {
        s->add_option("--method", f.method, "auto, exact or population")
            ->check(CLI::IsMember({"auto", "exact", "population"}))
            ->capture_default_str();
    };

    auto* brun = brw->add_subcommand("run", "mean Z_n(t) per generation");
    brun->add_option("--n", f.n, "generations")->required()->check(CLI::Range(0, 60));
    brun->add_option("--cap", f.cap, "discard positions above this")->required()->check(CLI::Range(1e-6, 30.0));
    brun->add_option("--t", f.ts, "levels t <= cap (default: cap)")->delimiter(',');
    reps(brun, 1);
    seed(brun);
    format(brun);
    threads(brun);
    output(brun);
    brun->callback(run(cmd_brw_run));

    auto* bmed = brw->add_subcommand("median-bn", "median of the minimum B_n");
    bmed->add_option("--n", f.n, "generation")->required()->check(CLI::Range(1, 400));
    bmed->add_option("--cap", f.cap, "truncation level (default: predicted b_n + 4)")->check(CLI::Range(0.0, 200.0));
    reps(bmed, 100);
    method(bmed);
    seed(bmed);
    threads(bmed);
    output(bmed);
    bmed->callback(run(cmd_brw_median));

    auto* btail = brw->add_subcommand("tails", "left and right tails of B_n around its median");
    btail->add_option("--n", f.n, "generation")->required()->check(CLI::Range(1, 400));
    btail->add_option("--cap", f.cap, "truncation level (default: predicted b_n + 6)")->check(CLI::Range(0.0, 200.0));
    btail->add_option("--x-step", f.x_step, "grid step")->check(CLI::Range(0.01, 10.0))->capture_default_str();
    btail->add_option("--x-max", f.x_max, "grid end")->check(CLI::Range(0.01, 50.0))->capture_default_str();
    reps(btail, 100);
    method(btail);
    seed(btail);
    format(btail);
    threads(btail);
    output(btail);
    btail->callback(run(cmd_brw_tails));

    auto* bteps = brw->add_subcommand("teps", "T(eps): first generation with every fragment <= eps");
    bteps->add_option("--eps", f.eps, "fragment size")->check(CLI::Range(1e-12, 1.0))->capture_default_str();
    bteps->add_option("--max-gen", f.max_gen, "generation limit")->check(CLI::Range(1, 1'000'000))->capture_default_str();
    reps(bteps, 1);
    seed(bteps);
    threads(bteps);
    output(bteps);
    bteps->callback(run(cmd_brw_teps));

    auto* brde = brw->add_subcommand("rde", "population iteration of X = -1/e + min_i(z_i + X_i)");
    brde->add_option("--pop", f.pop, "population size")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{10'000'000}))
        ->capture_default_str();
    brde->add_option("--iters", f.iters, "iterations")->check(CLI::Range(1, 10'000))->capture_default_str();
    brde->add_option("--drift-bound", f.drift, "report divergence beyond this |median|")
        ->check(CLI::Range(1e-3, 1e6))
        ->capture_default_str();
    seed(brde);
    threads(brde);
    output(brde);
    brde->callback(run(cmd_brw_rde));

    auto* dick = app.add_subcommand("dickman", "Dickman rho(u)");
    dick->add_option("--u", f.u, "argument")->required()->check(CLI::Range(0.0, kDefaultRhoMax));
    dick->add_option("--n", f.rho_n, "also evaluate the level-n asymptotic")->check(CLI::Range(1, 6));
    threads(dick);
    output(dick);
    dick->callback(run(cmd_dickman));

    auto* ver = app.add_subcommand("verify", "run property and acceptance suites");
    std::vector<std::string> suites = verify::suite_names();
    ver->add_option("--suite", f.suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();
    ver->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    seed(ver);
    threads(ver);
    output(ver);
    ver->callback([&] {
        if (ver->count("--format") == 0)
            f.format = "text";
        action = [&](std::ostream& os) { return cmd_verify(f, os); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    try {
        Emitter em(out, f.output);
        return action(em.os());
    } catch (const Error& e) {
        err << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    } catch (const std::bad_alloc&) {
        err << json{{"error", {{"kind", "capacity"}, {"message", "out of memory"}}}}.dump() << '\n';
        return 1;
    }
}

} // namespace primechain::cli
