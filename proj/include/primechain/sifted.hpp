#pragma once

// Sifted chains: chains of integers coprime to the primorial r = prod_{p<=y} p.
// The link series S(a, b) sums m^-s over links m taking a residue a to a
// residue b (a m + 1 == b mod r); collected over the unit group they form
// a positive matrix whose row sums and Perron root bound chain counts.

#include "primechain/sieve.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace primechain {

/// zeta(s, a) = sum_{j>=0} (a + j)^-s for s > 1, a > 0, by Euler-Maclaurin.
double hurwitz_zeta(double s, double a, double tol = 1e-15);

/// Dense storage ceiling for the residue matrix (bytes).
inline constexpr std::size_t kResidueMatrixBudget = std::size_t{2} << 30;

struct ResidueMatrix {
    double y = 0;
    u64 r = 0;
    double s = 0;
    std::vector<u64> units;  // U_r in increasing order
    Eigen::MatrixXd entries; // entries(i, j) = S(units[j], units[i]); rows indexed by b

    std::size_t phi() const { return units.size(); }
};

/// Primes <= y.
std::vector<u64> sifting_primes(double y);

/// Throws CapacityError if y >= 29 or the dense matrix exceeds the budget.
ResidueMatrix build_matrix(double y, double s, std::size_t budget = kResidueMatrixBudget);

/// S(a, b) = r^-s zeta(s, m0 / r), m0 in [1, r] solving a m0 == b - 1 (mod r).
double link_series(u64 a, u64 b, u64 r, double s);

/// prod_{p>y} (1 - p^-s)^-1, via zeta(s) prod_{p<=y} (1 - p^-s).
double euler_tail_factor(double y, double s);

/// Closed form of row b: prod_{p>y}(1-p^-s)^-1 prod_{p | d}(p-1)/(p^s-1), d = (b-1, r).
double row_sum_closed_form(u64 b, double y, double s);

struct RowSumReport {
    double direct = 0;       // max_b of the summed row
    u64 argmax_b = 0;
    double closed_form = 0;  // (2^s - 1)^-1 prod_{p>y}(1 - p^-s)^-1
    double closed_form_upper = 0; // same, Euler product truncated at 10^6 plus tail bound
};

RowSumReport max_row_sum(const ResidueMatrix& m);
/// (2^s - 1)^-1 prod_{p>y}(1 - p^-s)^-1 without building the matrix.
double max_row_sum_closed_form(double y, double s);
/// Rigorous upper bound on the closed form: truncated Euler product over
/// y < p <= cutoff times exp of an integral bound on the remainder.
double max_row_sum_upper(double y, double s, u64 cutoff = 1'000'000);

struct PerronResult {
    double lambda = 0;
    int iterations = 0;
    Eigen::VectorXd vector; // positive, unit l1 norm
};

/// Power iteration; stops once the Collatz-Wielandt bracket
/// min_i (Av)_i / v_i <= lambda <= max_i (Av)_i / v_i has relative width < tol.
/// Every 64 steps without convergence the iterating matrix is squared.
PerronResult perron_eigenvalue(const ResidueMatrix& m, double tol = 1e-13, int max_iter = 100000);

/// 64 points: s - 1 geometric in [1e-3, 2].
std::vector<double> default_s_grid();

struct ChainBound {
    double x = 0;
    double y = 0;
    u64 r = 0;
    u64 phi_r = 0;
    double s_star = 0;
    double row_sum = 0;   // R(M) at s_star
    double lambda = 0;    // Perron root at s_star (NaN when the matrix is over budget)
    double bound = 0;     // phi(r) x^s* / (1 - R)
    double asymptotic_y = 0; // log x / log log x
    double asymptotic_s = 0; // 1 + log log y / log y at y = asymptotic_y
};

/// phi(r) min_{s in grid, R(M) < 1} x^s / (1 - R(M)); an upper bound for
/// N(x; p) for every prime p > y. Throws InfeasibleError if R >= 1 on the
/// whole grid.
ChainBound chain_count_bound(double x, double y, const std::vector<double>& grid = default_s_grid());

} // namespace primechain
