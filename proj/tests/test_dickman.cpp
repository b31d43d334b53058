#include "primechain/dickman.hpp"
#include "primechain/error.hpp"
#include "primechain/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace primechain;

TEST_SUITE("dickman")
{
    TEST_CASE("closed forms")
    {
        CHECK(rho(0.5) == 1.0);
        CHECK(rho(1.0) == 1.0);
        CHECK(rho(2.0) == 1.0 - std::log(2.0));
        CHECK(rho(1.5) == 1.0 - std::log(1.5));
    }

    TEST_CASE("second interval against quadrature")
    {
        for (double u : {2.1, 2.5, 2.77, 3.0})
            CHECK(rho(u) == doctest::Approx(oracle::rho_second_interval(u)).epsilon(1e-11));
        CHECK(std::abs(rho(3.0) - 0.0486084) <= 1e-6);
    }

    TEST_CASE("reference values")
    {
        CHECK(rho(4) == doctest::Approx(4.9109256477653e-3).epsilon(1e-10));
        CHECK(rho(6) == doctest::Approx(1.9649696353955e-5).epsilon(1e-10));
        CHECK(rho(10) == doctest::Approx(2.7701718377260e-11).epsilon(1e-9));
    }

    TEST_CASE("grid refinement")
    {
        const RhoTable& a = default_rho_table();
        const RhoTable b(a.step() / 2, a.u_max());
        for (std::size_t i = 0; i < a.values().size(); ++i) {
            const double u = static_cast<double>(i) * a.step();
            if (u <= 10)
                REQUIRE(std::abs(a.values()[i] - b.values()[2 * i]) < 1e-9);
            REQUIRE(std::abs(a.values()[i] - b.values()[2 * i]) <= 1e-8 * b.values()[2 * i]);
        }
        for (double u : {2.3, 5.55, 13.1, 19.9})
            CHECK(a(u) == doctest::Approx(b(u)).epsilon(1e-8));
    }

    TEST_CASE("shape")
    {
        const auto& v = default_rho_table().values();
        for (std::size_t i = 1025; i + 1 < v.size(); ++i) {
            REQUIRE(v[i] > 0);
            REQUIRE(v[i] < v[i - 1]);
            REQUIRE(std::log(v[i + 1]) - 2 * std::log(v[i]) + std::log(v[i - 1]) <= 1e-12);
        }
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(rho(-0.1), DomainError);
        CHECK_THROWS_AS(rho(20.5), DomainError);
        CHECK_THROWS_AS(RhoTable(1.0 / 3.0), DomainError);
        CHECK_THROWS_AS(rho_n_asymptotic(3, 2.0), DomainError);
        CHECK_THROWS_AS(iterated_log(1, -1.0), DomainError);
    }

    TEST_CASE("asymptotic comparator")
    {
        CHECK(rho_n_asymptotic(1, 10) == doctest::Approx(std::pow(1 / (10 * std::log(10.0)), 10)).epsilon(1e-12));
        double prev = rho_n_asymptotic(1, 5);
        for (double u = 5.5; u <= 20; u += 0.5) {
            const double cur = rho_n_asymptotic(1, u);
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(iterated_log(0, 7.0) == 7.0);
        CHECK(iterated_log(2, 100.0) == doctest::Approx(std::log(std::log(100.0))));
    }
}
