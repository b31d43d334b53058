#pragma once

// Branching random walk with logarithmic Poisson-Dirichlet displacements:
// every individual at position z has children at z - log y_k, where
// (y_k) are stick-breaking fragments y_1 = U_1, y_2 = (1 - U_1) U_2, ...
// Positions are -log(fragment size) in the fragmentation picture.
//
// Randomness is addressed per node: the k-th stick of a node is a pure
// function of (seed, replicate, node path, k). Results therefore do not
// depend on the truncation cap, the traversal order or the thread count.

#include "primechain/rng.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace primechain {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct RunConfig {
    std::uint64_t seed = 1;
    double cap = 4.0;             // positions above cap are discarded
    std::uint64_t replicates = 1000;
    int generations = 4;
    unsigned threads = 1;
    std::uint64_t max_population = 50'000'000; // per replicate, summed over generations

    void validate() const;
};

struct Offset {
    double value;        // -log y_k
    std::uint32_t index; // stick index k (0-based)
};

/// Sticks of one node with offset <= cap. Stops once the unbroken
/// remainder is below e^-cap, so no offset <= cap is missed.
std::vector<Offset> sample_lpd_offsets(const std::function<double(std::uint32_t)>& uniform, double cap);
std::vector<Offset> sample_lpd_offsets(const UniformStream& stream, double cap);

struct FragmentGeneration {
    int n = 0;
    std::vector<double> positions;      // sorted increasing, all in [0, cap]
    std::vector<std::uint64_t> node_ids; // parallel to positions
    bool censored = false;              // empty: the minimum lies beyond cap

    double minimum() const { return positions.empty() ? kInf : positions.front(); }
};

/// Node identifiers: the root of replicate i, and the k-th child of a node.
std::uint64_t root_node(std::uint64_t seed, std::uint64_t replicate);
std::uint64_t child_node(std::uint64_t parent, std::uint32_t stick);

/// Generations 0..cfg.generations of one replicate, truncated at cfg.cap.
std::vector<FragmentGeneration> simulate_run(const RunConfig& cfg, std::uint64_t replicate = 0);

/// Z_n(t); throws CensoringError if t > cap.
std::uint64_t z_count(const FragmentGeneration& g, double t, double cap);

struct ZQuery {
    int n;
    double t;
};

struct MeanEstimate {
    double mean = 0;
    double se = 0;
    std::uint64_t samples = 0;
};

/// Per-replicate Z_n(t) values, replicate-major: out[rep * queries + q].
std::vector<std::uint64_t> z_samples(const RunConfig& cfg, const std::vector<ZQuery>& queries);
MeanEstimate mean_of(const std::vector<double>& xs);

/// Binomial proportion with its standard error.
struct Proportion {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double p() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
    double se() const;
    /// Wilson score interval at z standard deviations.
    std::pair<double, double> wilson(double z = 1.96) const;
};

/// P{M_1 <= 1/u} = P{B_1 >= log u}.
Proportion m1_below(const RunConfig& cfg, double u);

/// T(eps) = min{n : M_n <= eps}, simulated with cap = -log eps.
int t_epsilon(double eps, const RunConfig& cfg, std::uint64_t replicate, int max_generations = 10000);
std::vector<int> t_epsilon_samples(double eps, const RunConfig& cfg, int max_generations = 10000);

enum class MedianMethod { automatic, exact, population };
std::string to_string(MedianMethod m);
MedianMethod parse_median_method(const std::string& s);

/// n/e + (3/(2e)) log n.
double predicted_bn(int n);

struct BnSamples {
    int n = 0;
    double cap = 0;
    MedianMethod method = MedianMethod::exact;
    std::vector<double> values; // per replicate/population slot; +inf when censored
    double censored_fraction = 0;
};

/// Exact: branch-and-bound over each replicate's genealogy, pruning nodes
/// at or beyond the best leaf found so far. Population: iterate
/// B_j = min_i(z_i + B_{j-1}^{(i)}) over a population of cfg.replicates
/// values, resampling B_{j-1} from the previous generation.
BnSamples sample_bn(int n, const RunConfig& cfg, MedianMethod method = MedianMethod::automatic,
                    std::uint64_t node_budget = 200'000'000);

/// Single replicate, exact.
double exact_bn(int n, double cap, std::uint64_t seed, std::uint64_t replicate,
                std::uint64_t node_budget = 200'000'000);

struct MedianEstimate {
    int n = 0;
    double median = 0;
    double ci_low = 0;
    double ci_high = 0;
    double cap = 0;
    double censored_fraction = 0;
    MedianMethod method = MedianMethod::exact;
    std::uint64_t replicates = 0;
};

double median_with_censoring(std::vector<double> values);

/// cfg.cap <= 0 selects predicted_bn(n) + 4; a positive cap below that is
/// rejected. Retries once with cap + 2 if
/// half or more of the samples are censored, then throws CensoringError.
MedianEstimate estimate_median_bn(int n, const RunConfig& cfg, MedianMethod method = MedianMethod::automatic);

struct TailPoint {
    double x = 0;
    Proportion left;  // B_n <= b - x
    Proportion right; // B_n >= b + x
};

struct TailEstimate {
    int n = 0;
    double median = 0;
    double cap = 0;
    std::vector<TailPoint> points;
    double left_slope = 0; // fitted c in P{B_n <= b - x} ~ e^{-c x}
    double censored_fraction = 0;
    MedianMethod method = MedianMethod::exact;
};

/// cfg.cap <= 0 selects predicted_bn(n) + 6 so the right tail is observed
/// out to x = 4 or so. Right-tail points with b + x > cap are omitted.
TailEstimate estimate_tails(int n, const RunConfig& cfg, MedianMethod method = MedianMethod::automatic,
                            double x_step = 0.25, double x_max = 6.0);

struct RdeResult {
    std::vector<double> sample;     // final population, sorted
    std::vector<double> ks;         // ks[k-1] = KS(iterate k, iterate k-1)
    std::vector<double> medians;    // median after each iterate
    double median = 0;
    double median_ci_low = 0;
    double median_ci_high = 0;
    bool diverged = false;
};

/// Population iteration of X = -1/e + min_i(z_i + X_i) from X = 0.
RdeResult rde_iterate(std::uint64_t pop_size, int iters, const RunConfig& cfg, double drift_bound = 50.0);

double ks_distance(std::vector<double> a, std::vector<double> b);

} // namespace primechain
