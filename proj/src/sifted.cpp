#include "primechain/sifted.hpp"

#include "primechain/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace primechain {

namespace {

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6 / 2,
    -1.0 / 30 / 24,
    1.0 / 42 / 720,
    -1.0 / 30 / 40320,
    5.0 / 66 / 3628800,
    -691.0 / 2730 / 479001600,
    7.0 / 6 / 87178291200.0,
    -3617.0 / 510 / 20922789888000.0,
    43867.0 / 798 / 6402373705728000.0,
    -174611.0 / 330 / 2432902008176640000.0,
    854513.0 / 138 / 1.1240007277776077e21,
    -236364091.0 / 2730 / 6.204484017332394e23,
    8553103.0 / 6 / 4.0329146112660565e26,
    -23749461029.0 / 870 / 3.0488834461171384e29,
    8615841276005.0 / 14322 / 2.6525285981219103e32,
};

u64 inverse_mod(u64 a, u64 m)
{
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        const long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1)
        throw DomainError("inverse_mod: not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
}

u64 primorial(const std::vector<u64>& primes)
{
    u64 r = 1;
    for (u64 p : primes)
        r *= p;
    return r;
}

} // namespace

double hurwitz_zeta(double s, double a, double tol)
{
    if (!(s > 1.0))
        throw DomainError("hurwitz_zeta: s must exceed 1");
    if (!(a > 0.0))
        throw DomainError("hurwitz_zeta: a must be positive");
    if (!(tol > 0.0))
        throw DomainError("hurwitz_zeta: tol must be positive");

    // Direct terms until the shifted argument is large enough for the
    // asymptotic series to converge quickly.
    const double shift_min = 12.0 + s;
    double sum = 0.0;
    double x = a;
    while (x < shift_min) {
        sum += std::pow(x, -s);
        x += 1.0;
    }
    const double xs = std::pow(x, -s);
    sum += x * xs / (s - 1.0) + 0.5 * xs;

    // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) x^(-s-2k+1)
    double rising = s;         // s (s+1) ... (s+2k-2)
    double power = xs / x;     // x^(-s-2k+1)
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
        const double term = kBernoulliOverFactorial[k] * rising * power;
        sum += term;
        if (std::abs(term) < tol * std::abs(sum))
            return sum;
        rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
        power /= x * x;
    }
    return sum;
}

std::vector<u64> sifting_primes(double y)
{
    std::vector<u64> out;
    for (u64 p = 2; static_cast<double>(p) <= y; ++p)
        if (is_prime_u64(p))
            out.push_back(p);
    return out;
}

double link_series(u64 a, u64 b, u64 r, double s)
{
    const u64 inv = inverse_mod(a, r);
    u64 m0 = mulmod(inv, (b + r - 1) % r, r);
    if (m0 == 0)
        m0 = r;
    const double rd = static_cast<double>(r);
    return std::pow(rd, -s) * hurwitz_zeta(s, static_cast<double>(m0) / rd);
}

ResidueMatrix build_matrix(double y, double s, std::size_t budget)
{
    if (!(y >= 2.0))
        throw DomainError("build_matrix: y must be >= 2");
    if (y >= 29.0)
        throw CapacityError("build_matrix: y must be < 29 (primorial limit)");
    if (!(s > 1.0))
        throw DomainError("build_matrix: s must exceed 1");

    ResidueMatrix m;
    m.y = y;
    m.s = s;
    const auto primes = sifting_primes(y);
    m.r = primorial(primes);
    u64 phi = 1;
    for (u64 p : primes)
        phi *= p - 1;
    if (static_cast<long double>(phi) * phi * sizeof(double) > static_cast<long double>(budget))
        throw CapacityError("build_matrix: phi(r)=" + std::to_string(phi) + " exceeds dense storage budget");

    for (u64 a = 1; a < m.r || a == 1; ++a)
        if (std::gcd(a, m.r) == 1)
            m.units.push_back(a);
    if (m.r == 1)
        m.units = {1};

    // S(a, b) depends only on m0 in [1, r]; cache zeta(s, m0/r) per m0.
    const double scale = std::pow(static_cast<double>(m.r), -s);
    std::vector<double> cache(m.r + 1, std::numeric_limits<double>::quiet_NaN());
    auto entry = [&](u64 m0) {
        double& c = cache[m0];
        if (std::isnan(c))
            c = scale * hurwitz_zeta(s, static_cast<double>(m0) / static_cast<double>(m.r));
        return c;
    };

    const std::size_t n = m.units.size();
    m.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const u64 a = m.units[j];
        const u64 inv = m.r == 1 ? 0 : inverse_mod(a, m.r);
        for (std::size_t i = 0; i < n; ++i) {
            const u64 b = m.units[i];
            u64 m0 = m.r == 1 ? 0 : mulmod(inv, (b + m.r - 1) % m.r, m.r);
            if (m0 == 0)
                m0 = m.r;
            m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(m0);
        }
    }
    return m;
}

double euler_tail_factor(double y, double s)
{
    double v = hurwitz_zeta(s, 1.0);
    for (u64 p : sifting_primes(y))
        v *= 1.0 - std::pow(static_cast<double>(p), -s);
    return v;
}

double row_sum_closed_form(u64 b, double y, double s)
{
    const auto primes = sifting_primes(y);
    const u64 r = primorial(primes);
    const u64 d = std::gcd((b + r - 1) % r, r) == 0 ? r : std::gcd((b + r - 1) % r, r);
    double v = euler_tail_factor(y, s);
    for (u64 p : primes)
        if (d % p == 0) {
            const double pd = static_cast<double>(p);
            v *= (pd - 1.0) / (std::pow(pd, s) - 1.0);
        }
    return v;
}

double max_row_sum_closed_form(double y, double s)
{
    return euler_tail_factor(y, s) / (std::pow(2.0, s) - 1.0);
}

double max_row_sum_upper(double y, double s, u64 cutoff)
{
    const SpfTable table(std::max<u64>(cutoff, 2));
    double log_prod = 0.0;
    for (u64 p : table.primes_up_to(cutoff)) {
        if (static_cast<double>(p) <= y)
            continue;
        log_prod -= std::log1p(-std::pow(static_cast<double>(p), -s));
    }
    // -log(1 - t) <= t / (1 - t); sum_{n > P} n^-s <= P^(1-s) / (s - 1)
    const double pc = static_cast<double>(cutoff);
    const double tail = std::pow(pc, 1.0 - s) / (s - 1.0) / (1.0 - std::pow(pc, -s));
    return std::exp(log_prod + tail) / (std::pow(2.0, s) - 1.0);
}

RowSumReport max_row_sum(const ResidueMatrix& m)
{
    RowSumReport out;
    const Eigen::VectorXd rows = m.entries.rowwise().sum();
    Eigen::Index best = 0;
    out.direct = rows.maxCoeff(&best);
    out.argmax_b = m.units[static_cast<std::size_t>(best)];
    out.closed_form = max_row_sum_closed_form(m.y, m.s);
    out.closed_form_upper = max_row_sum_upper(m.y, m.s);
    return out;
}

PerronResult perron_eigenvalue(const ResidueMatrix& m, double tol, int max_iter)
{
    if (!(tol > 0.0))
        throw DomainError("perron_eigenvalue: tol must be positive");
    const Eigen::MatrixXd& a = m.entries;
    const auto n = a.rows();
    Eigen::MatrixXd power = a; // a^(2^j), rescaled to unit max entry
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    for (int it = 1; it <= max_iter; ++it) {
        const Eigen::VectorXd w = a * v;
        const Eigen::ArrayXd ratio = w.array() / v.array();
        const double lo = ratio.minCoeff(), hi = ratio.maxCoeff();
        if (hi - lo < tol * hi)
            return {w.sum(), it, v};
        if (it % 64 == 0) {
            power = power * power;
            power /= power.maxCoeff();
        }
        const Eigen::VectorXd next = power * v;
        v = next / next.sum();
    }
    throw NumericalError("perron_eigenvalue: no convergence after " + std::to_string(max_iter) + " iterations");
}

std::vector<double> default_s_grid()
{
    std::vector<double> grid;
    constexpr int kPoints = 64;
    const double lo = std::log(1e-3), hi = std::log(2.0);
    for (int i = 0; i < kPoints; ++i)
        grid.push_back(1.0 + std::exp(lo + (hi - lo) * i / (kPoints - 1)));
    return grid;
}

ChainBound chain_count_bound(double x, double y, const std::vector<double>& grid)
{
    if (!(x >= 1.0))
        throw DomainError("chain_count_bound: x must be >= 1");
    if (!(y >= 2.0) || y >= 29.0)
        throw CapacityError("chain_count_bound: y must lie in [2, 29)");
    ChainBound out;
    out.x = x;
    out.y = y;
    const auto primes = sifting_primes(y);
    out.r = primorial(primes);
    out.phi_r = 1;
    for (u64 p : primes)
        out.phi_r *= p - 1;

    double best = std::numeric_limits<double>::infinity();
    for (double s : grid) {
        if (!(s > 1.0))
            continue;
        const double rm = max_row_sum_closed_form(y, s);
        if (!(rm < 1.0))
            continue;
        const double b = static_cast<double>(out.phi_r) * std::pow(x, s) / (1.0 - rm);
        if (b < best) {
            best = b;
            out.s_star = s;
            out.row_sum = rm;
        }
    }
    if (!std::isfinite(best))
        throw InfeasibleError("chain_count_bound: R(M) >= 1 at every grid point");
    out.bound = best;
    out.lambda = std::numeric_limits<double>::quiet_NaN();
    if (out.phi_r <= 5760)
        out.lambda = perron_eigenvalue(build_matrix(y, out.s_star)).lambda;

    if (x > std::exp(1.0)) {
        const double l2 = std::log(std::log(x));
        out.asymptotic_y = l2 > 0 ? std::log(x) / l2 : 0.0;
        if (out.asymptotic_y > std::exp(1.0))
            out.asymptotic_s = 1.0 + std::log(std::log(out.asymptotic_y)) / std::log(out.asymptotic_y);
    }
    return out;
}

} // namespace primechain
