#include "primechain/oracles.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numeric>

namespace primechain::oracle {

bool is_prime_trial(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<u64> prime_divisors_trial(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

u64 naive_f(u64 p)
{
    u64 f = 1;
    for (u64 q : prime_divisors_trial(p - 1))
        f += naive_f(q);
    return f;
}

int naive_h(u64 p)
{
    int h = 0;
    for (u64 q : prime_divisors_trial(p - 1))
        h = std::max(h, naive_h(q));
    return h + 1;
}

u64 naive_g(u64 p)
{
    if (p == 2)
        return 1;
    u64 g = 0;
    for (u64 q : prime_divisors_trial(p - 1))
        g += naive_g(q);
    return g;
}

u64 prime_count_trial(u64 x)
{
    u64 c = 0;
    for (u64 n = 2; n <= x; ++n)
        c += is_prime_trial(n);
    return c;
}

namespace {

u64 forward(u64 q, u64 top)
{
    u64 c = 1;
    for (u64 m = 1; m * q + 1 <= top; ++m)
        if (is_prime_trial(m * q + 1))
            c += forward(m * q + 1, top);
    return c;
}

std::vector<bool> plain_sieve(u64 n)
{
    std::vector<bool> prime(n + 1, true);
    prime[0] = false;
    if (n >= 1)
        prime[1] = false;
    for (u64 i = 2; i * i <= n; ++i)
        if (prime[i])
            for (u64 j = i * i; j <= n; j += i)
                prime[j] = false;
    return prime;
}

} // namespace

u64 chain_count_forward(u64 p, double x)
{
    return forward(p, static_cast<u64>(std::floor(static_cast<double>(p) * x)));
}

u64 chain_total(u64 x)
{
    u64 total = 0;
    for (u64 p = 2; p <= x; ++p)
        if (is_prime_trial(p))
            total += naive_f(p);
    return total;
}

double rho_second_interval(double u)
{
    boost::math::quadrature::tanh_sinh<double> q;
    const double integral = u > 2.0 ? q.integrate([](double t) { return std::log(t - 1.0) / t; }, 2.0, u) : 0.0;
    return 1.0 - std::log(u) + integral;
}

double twin_product(u64 cutoff)
{
    const auto prime = plain_sieve(cutoff);
    long double prod = 2.0L;
    for (u64 p = 3; p <= cutoff; ++p)
        if (prime[p]) {
            const long double d = static_cast<long double>(p - 1);
            prod *= 1.0L - 1.0L / (d * d);
        }
    return static_cast<double>(prod);
}

double link_series_direct(u64 a, u64 b, u64 r, double s, u64 terms)
{
    u64 m0 = 0;
    for (u64 m = 1; m <= r; ++m)
        if ((a * m) % r == (b + r - 1) % r) {
            m0 = m;
            break;
        }
    if (m0 == 0)
        return std::nan("");
    long double sum = 0;
    // smallest terms first
    for (u64 j = terms; j-- > 0;)
        sum += std::pow(static_cast<long double>(m0 + j * r), -static_cast<long double>(s));
    const double edge = static_cast<double>(m0 + terms * r) - 0.5 * static_cast<double>(r);
    sum += std::pow(edge, 1.0 - s) / ((s - 1.0) * static_cast<double>(r));
    return static_cast<double>(sum);
}

double spectral_radius(const Eigen::MatrixXd& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace primechain::oracle
