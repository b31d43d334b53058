#include "primechain/dickman.hpp"

#include "primechain/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace primechain {

RhoTable::RhoTable(double step, double u_max) : step_(step), u_max_(u_max)
{
    const double inv = 1.0 / step;
    per_unit_ = static_cast<int>(std::lround(inv));
    if (per_unit_ < 4 || per_unit_ % 2 != 0 || std::abs(inv - per_unit_) > 1e-9)
        throw DomainError("RhoTable: step must be 1/H for an even H >= 4");
    if (!(u_max >= 2.0))
        throw DomainError("RhoTable: u_max must be >= 2");

    const int H = per_unit_;
    const auto n = static_cast<std::size_t>(std::ceil(u_max * H - 1e-9)) + 1;
    values_.assign(n, 0.0);
    auto u_at = [&](std::size_t i) { return static_cast<double>(i) / H; };
    for (std::size_t i = 0; i < n && i <= static_cast<std::size_t>(2 * H); ++i)
        values_[i] = i <= static_cast<std::size_t>(H) ? 1.0 : 1.0 - std::log(u_at(i));

    // u rho(u) = int_{u-1}^u rho(t) dt, trapezoid with the endpoint
    // derivative correction h^2/12 (rho'(u-1) - rho'(u)); rho' = -rho(t-1)/t
    // is known from earlier values and continuous for t > 1. rho(u) enters
    // the right side with weight h/2 and is solved for directly.
    const double h = step;
    auto deriv = [&](std::size_t i) { return i <= static_cast<std::size_t>(H) ? 0.0 : -values_[i - H] / u_at(i); };
    for (std::size_t i = 2 * H + 1; i < n; ++i) {
        const double u = u_at(i);
        double interior = 0.0;
        for (std::size_t j = i - H + 1; j < i; ++j)
            interior += values_[j];
        const double d_lo = i - H == static_cast<std::size_t>(H) ? -1.0 : deriv(i - H);
        const double d_hi = deriv(i);
        const double rhs = h * (0.5 * values_[i - H] + interior) + h * h / 12.0 * (d_lo - d_hi);
        values_[i] = rhs / (u - 0.5 * h);
    }
}

double RhoTable::operator()(double u) const
{
    if (!(u >= 0.0) || u > u_max_)
        throw DomainError("rho: u=" + std::to_string(u) + " outside [0, " + std::to_string(u_max_) + "]");
    if (u <= 1.0)
        return 1.0;
    if (u <= 2.0)
        return 1.0 - std::log(u);

    // Four-point Lagrange interpolation, stencil kept inside one unit interval.
    const int H = per_unit_;
    const double pos = u * H;
    const auto k = static_cast<long>(std::floor(u));
    const long seg_lo = k * H;
    const long seg_hi = std::min<long>(seg_lo + H, static_cast<long>(values_.size()) - 1);
    long i0 = static_cast<long>(std::floor(pos)) - 1;
    i0 = std::clamp(i0, seg_lo, seg_hi - 3);
    if (std::abs(pos - std::round(pos)) < 1e-12 && std::lround(pos) < static_cast<long>(values_.size()))
        return values_[static_cast<std::size_t>(std::lround(pos))];
    double result = 0.0;
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b)
            if (b != a)
                w *= (pos - static_cast<double>(i0 + b)) / static_cast<double>(a - b);
        result += w * values_[static_cast<std::size_t>(i0 + a)];
    }
    return result;
}

const RhoTable& default_rho_table()
{
    static const RhoTable table;
    return table;
}

double rho(double u) { return default_rho_table()(u); }

double iterated_log(int j, double u)
{
    if (j < 0)
        throw DomainError("iterated_log: negative order");
    double v = u;
    for (int i = 0; i < j; ++i) {
        if (!(v > 0.0))
            throw DomainError("iterated_log: nonpositive iterate");
        v = std::log(v);
    }
    if (!(v > 0.0))
        throw DomainError("iterated_log: log_" + std::to_string(j) + "(" + std::to_string(u) + ") <= 0");
    return v;
}

double log_rho_n_asymptotic(int n, double u)
{
    if (n < 1)
        throw DomainError("rho_n_asymptotic: n must be >= 1");
    return -u * std::log(iterated_log(n - 1, u) * iterated_log(n, u));
}

double rho_n_asymptotic(int n, double u) { return std::exp(log_rho_n_asymptotic(n, u)); }

} // namespace primechain
