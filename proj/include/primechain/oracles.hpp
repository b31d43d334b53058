#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

// Slow, independent reference computations. Nothing here touches the spf
// tables, the Pratt memo or the grid integrators.
namespace primechain::oracle {

using u64 = std::uint64_t;

bool is_prime_trial(u64 n);
/// Distinct prime divisors by trial division.
std::vector<u64> prime_divisors_trial(u64 n);

/// Un-memoized recursions over the Pratt tree.
u64 naive_f(u64 p);
int naive_h(u64 p);
u64 naive_g(u64 p);

u64 prime_count_trial(u64 x);

/// Chains p = p_1 < p_2 < ... with p_k <= p x, by forward recursion over
/// every candidate m q + 1 and trial-division primality.
u64 chain_count_forward(u64 p, double x);

/// sum_{p <= x} f(p) from naive_f.
u64 chain_total(u64 x);

/// rho(u) for 2 <= u <= 3 as 1 - log u + int_2^u log(t - 1)/t dt, by
/// tanh-sinh quadrature.
double rho_second_interval(double u);

/// 2 prod_{3 <= p <= cutoff} (1 - 1/(p - 1)^2), with a plain sieve.
double twin_product(u64 cutoff);

/// sum of m^-s over m == m0 (mod r), m >= 1, where a m0 == b - 1 (mod r):
/// `terms` explicit terms, then the remainder as a midpoint integral.
double link_series_direct(u64 a, u64 b, u64 r, double s, u64 terms = 1'000'000);

/// Largest modulus among the eigenvalues of a square matrix.
double spectral_radius(const Eigen::MatrixXd& m);

} // namespace primechain::oracle
