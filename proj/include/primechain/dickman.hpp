#pragma once

// Dickman's function: rho(u) = 1 on [0, 1], u rho'(u) = -rho(u - 1) for u > 1.

#include <vector>

namespace primechain {

inline constexpr double kDefaultRhoStep = 1.0 / 1024.0;
inline constexpr double kDefaultRhoMax = 20.0;

/// rho on the grid u_i = i h, 0 <= u_i <= u_max. Exact closed forms on
/// [0, 2]; beyond that the identity u rho(u) = int_{u-1}^u rho(t) dt is
/// discretized with an endpoint-corrected trapezoid rule. Every term is
/// positive, so the error stays relative even where rho is tiny. Values
/// between grid points use four-point interpolation inside one unit
/// interval. Immutable after construction.
class RhoTable {
public:
    explicit RhoTable(double step = kDefaultRhoStep, double u_max = kDefaultRhoMax);

    double step() const { return step_; }
    double u_max() const { return u_max_; }
    const std::vector<double>& values() const { return values_; }

    /// Throws DomainError outside [0, u_max].
    double operator()(double u) const;

private:
    double step_;
    double u_max_;
    int per_unit_; // 1 / step
    std::vector<double> values_;
};

/// Shared table with the default step and range.
const RhoTable& default_rho_table();

double rho(double u);

/// log_0(u) = u, log_j(u) = log(log_{j-1}(u)). Throws DomainError when an
/// iterate is nonpositive.
double iterated_log(int j, double u);

/// (1 / (log_{n-1}(u) log_n(u)))^u, the leading-order size of P{M_n <= 1/u}.
/// The 1 + o(1) correction is not computable, so this is a comparator only.
double rho_n_asymptotic(int n, double u);
double log_rho_n_asymptotic(int n, double u);

} // namespace primechain
