#include "primechain/error.hpp"
#include "primechain/oracles.hpp"
#include "primechain/sifted.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace primechain;

TEST_SUITE("sifted")
{
    TEST_CASE("Hurwitz zeta")
    {
        const double pi2 = std::numbers::pi * std::numbers::pi;
        CHECK(hurwitz_zeta(2, 1) == doctest::Approx(pi2 / 6).epsilon(1e-14));
        CHECK(hurwitz_zeta(2, 0.5) == doctest::Approx(pi2 / 2).epsilon(1e-14));
        CHECK(hurwitz_zeta(3, 1) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
        CHECK(hurwitz_zeta(1.5, 2) == doctest::Approx(hurwitz_zeta(1.5, 1) - 1).epsilon(1e-13));
        CHECK_THROWS_AS(hurwitz_zeta(1, 1), DomainError);
        CHECK_THROWS_AS(hurwitz_zeta(2, 0), DomainError);
    }

    TEST_CASE("max row sums")
    {
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const ResidueMatrix m2 = build_matrix(2, 2);
        CHECK(m2.phi() == 1);
        CHECK(max_row_sum(m2).direct == doctest::Approx(pi2 / 24).epsilon(1e-12));
        CHECK(perron_eigenvalue(m2).lambda == doctest::Approx(pi2 / 24).epsilon(1e-12));
        const ResidueMatrix m3 = build_matrix(3, 2);
        CHECK(max_row_sum(m3).direct == doctest::Approx(pi2 / 27).epsilon(1e-12));
        CHECK(max_row_sum_closed_form(3, 2) == doctest::Approx(0.36551).epsilon(1e-4 / 0.36551));
        CHECK(perron_eigenvalue(m3).lambda <= 0.36551 + 1e-4);
    }

    TEST_CASE("capacity and errors")
    {
        CHECK_THROWS_AS(build_matrix(29, 2), CapacityError);
        CHECK_THROWS_AS(build_matrix(13, 2, 1 << 20), CapacityError);
        CHECK_THROWS_AS(build_matrix(3, 1), DomainError);
        CHECK_THROWS_AS(perron_eigenvalue(build_matrix(5, 2), 1e-13, 1), NumericalError);
        CHECK_THROWS_AS(chain_count_bound(1e6, 2, {1.001}), InfeasibleError);
        CHECK_THROWS_AS(chain_count_bound(0.5, 3), DomainError);
    }

    TEST_CASE("entries against direct summation")
    {
        for (double s : {1.3, 2.0, 3.5}) {
            const ResidueMatrix m = build_matrix(5, s);
            for (std::size_t i = 0; i < m.phi(); ++i)
                for (std::size_t j = 0; j < m.phi(); ++j) {
                    const double want = oracle::link_series_direct(m.units[j], m.units[i], m.r, s, 100'000);
                    REQUIRE(m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                            doctest::Approx(want).epsilon(1e-9));
                }
        }
    }

    TEST_CASE("property: row sums, Perron root and the d = 2 rows")
    {
        for (double y : {2.0, 3.0, 5.0, 7.0, 11.0})
            for (double s : {1.05, 1.5, 2.0, 2.9}) {
                const ResidueMatrix m = build_matrix(y, s);
                for (std::size_t i = 0; i < m.phi(); ++i) {
                    const double direct = m.entries.row(static_cast<Eigen::Index>(i)).sum();
                    REQUIRE(direct == doctest::Approx(row_sum_closed_form(m.units[i], y, s)).epsilon(1e-8));
                    REQUIRE(std::gcd(m.units[i] - 1, m.r) % 2 == 0);
                }
                const RowSumReport r = max_row_sum(m);
                REQUIRE(std::gcd(r.argmax_b - 1, m.r) == 2);
                REQUIRE(r.closed_form <= r.closed_form_upper);
                const PerronResult pr = perron_eigenvalue(m);
                REQUIRE(pr.lambda <= r.direct * (1 + 1e-12));
                if (m.phi() <= 48)
                    REQUIRE(pr.lambda == doctest::Approx(oracle::spectral_radius(m.entries)).epsilon(1e-9));
                REQUIRE(pr.vector.minCoeff() > 0);
            }
    }

    TEST_CASE("chain bound dominates enumeration")
    {
        for (double y : {2.0, 3.0, 5.0})
            for (double x : {10.0, 300.0, 1000.0}) {
                const ChainBound b = chain_count_bound(x, y);
                CHECK(b.row_sum < 1);
                for (u64 p : {7ULL, 11ULL, 13ULL, 29ULL, 47ULL})
                    CHECK(static_cast<double>(oracle::chain_count_forward(p, x)) <= b.bound);
            }
    }

    TEST_CASE("default grid")
    {
        const auto g = default_s_grid();
        CHECK(g.size() == 64);
        CHECK(g.front() == doctest::Approx(1.001));
        CHECK(g.back() == doctest::Approx(3.0));
    }
}
