#include "gen.hpp"

#include "primechain/error.hpp"
#include "primechain/oracles.hpp"
#include "primechain/singular.hpp"

#include <doctest.h>

#include <numeric>

using namespace primechain;

TEST_SUITE("singular")
{
    TEST_CASE("forms")
    {
        const FormSystem a = forms_from_links({2});
        CHECK(a.a == std::vector<u64>{1, 2});
        CHECK(a.b == std::vector<u64>{0, 1});
        const FormSystem b = forms_from_links({2, 4});
        CHECK(b.a == std::vector<u64>{1, 2, 8});
        CHECK(b.b == std::vector<u64>{0, 1, 5});
        CHECK(forms_from_links({}).k() == 1);
        CHECK_THROWS_AS(forms_from_links(std::vector<u64>(8, 1'000'000)), CapacityError);
    }

    TEST_CASE("local root counts")
    {
        CHECK(xi(2, forms_from_links({2})) == 1);
        CHECK(xi(3, forms_from_links({2})) == 2);
        for (u64 p : {2, 3, 5, 97})
            CHECK(xi(p, forms_from_links({})) == 1);
    }

    TEST_CASE("series values")
    {
        const SingularValue tw = singular_series({2}, 1'000'000);
        CHECK(tw.value == doctest::Approx(1.32032).epsilon(1e-3 / 1.32));
        CHECK(tw.value == doctest::Approx(oracle::twin_product(1'000'000)).epsilon(1e-6));
        CHECK(tw.tail_low <= tw.value);
        CHECK(tw.value <= tw.tail_high);
        CHECK(singular_series({}, 1000).value == doctest::Approx(1.0).epsilon(1e-15));
        // 1000003 | m_1 and m_2 = 1000002: f_3 = 1000003 (m_2 m_1/1000003 n + 1)
        CHECK(singular_series({2 * 1000003ULL, 1000002}, 1000).value == 0.0);
        const SingularValue one = singular_series({1}, 1000);
        CHECK(one.value == 0.0);
        CHECK(one.vanishes);
    }

    TEST_CASE("root-count lower bound examples")
    {
        const RhoPmResult r = rhopm_sum(3, 2, {1}, {0});
        CHECK(r.sum == 5);
        CHECK(r.rhs == 5);
        CHECK(rhopm_sum(7, 1, {}, {}).rhs == 1);
        CHECK(rhopm_check(7, 1, {}, {}));
        CHECK(rhopm_check(5, 3, {1, 2}, {0, 0}));
        CHECK_THROWS_AS(rhopm_sum(17, 2, {1}, {0}), CapacityError);
        CHECK_THROWS_AS(rhopm_sum(5, 3, {3}, {0, 0}), DomainError);
    }

    TEST_CASE("property: scan and root counting agree for p <= 1e4")
    {
        gen::Source g(41);
        std::vector<u64> primes;
        for (u64 p = 2; p <= 10'000; ++p)
            if (oracle::is_prime_trial(p))
                primes.push_back(p);
        for (int i = 0; i < 12; ++i) {
            const std::size_t k = 1 + g.integer(1, 5);
            const FormSystem sys = forms_from_links(g.links(k - 1, 1000));
            for (u64 p : primes) {
                const u64 a = xi(p, sys);
                REQUIRE(a == xi_roots(p, sys));
                bool identically_zero = false;
                for (std::size_t j = 0; j < sys.k(); ++j)
                    identically_zero = identically_zero || (sys.a[j] % p == 0 && sys.b[j] % p == 0);
                if (identically_zero) {
                    REQUIRE(a == p);
                } else {
                    REQUIRE(a >= 1);
                    REQUIRE(a <= std::min<u64>(sys.k(), p));
                }
            }
        }
    }

    TEST_CASE("property: vanishing exactly when some xi(p) = p")
    {
        gen::Source g(42);
        for (int i = 0; i < 80; ++i) {
            const std::size_t k = 1 + g.integer(1, 4);
            const auto links = g.links(k - 1, 20);
            const FormSystem sys = forms_from_links(links);
            bool full = false;
            for (u64 p = 2; p <= k; ++p)
                full = full || (oracle::is_prime_trial(p) && xi(p, sys) == p);
            for (std::size_t j = 0; j < k; ++j)
                full = full || std::gcd(sys.a[j], sys.b[j]) > 1;
            const SingularValue v = singular_series(links, 500);
            REQUIRE((v.value == 0.0) == full);
            if (!full) {
                REQUIRE(v.value > 0);
                REQUIRE(v.tail_low <= v.value);
                REQUIRE(v.value <= v.tail_high);
            }
        }
    }

    TEST_CASE("property: root-count lower bound on random assignments")
    {
        gen::Source g(43);
        for (int i = 0; i < 300; ++i) {
            const u64 primes[] = {2, 3, 5, 7, 11, 13};
            const u64 p = primes[g.integer(0, 5)];
            const std::size_t k = g.integer(2, 4);
            std::vector<std::size_t> idx;
            for (std::size_t j = 1; j < k; ++j)
                if (g.integer(0, 1))
                    idx.push_back(j);
            std::vector<u64> fixed(k - 1);
            for (auto& m : fixed)
                m = g.integer(0, p - 1);
            REQUIRE(rhopm_check(p, k, idx, fixed));
        }
    }
}
