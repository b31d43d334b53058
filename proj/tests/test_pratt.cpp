#include "gen.hpp"

#include "primechain/error.hpp"
#include "primechain/oracles.hpp"
#include "primechain/pratt.hpp"

#include <doctest.h>

#include <cmath>

using namespace primechain;

TEST_SUITE("pratt")
{
    TEST_CASE("f, H, g of small primes")
    {
        PrattDag dag;
        CHECK(f_of(2, dag) == 1);
        CHECK(f_of(3, dag) == 2);
        CHECK(f_of(7, dag) == 4);
        CHECK(h_of(2, dag) == 1);
        CHECK(h_of(5, dag) == 2);
        CHECK(h_of(7, dag) == 3);
        CHECK(g_of(2, dag) == 1);
        CHECK(g_of(7, dag) == 2);
        CHECK(f_of(59, dag) == 8);
        CHECK(g_of(59, dag) == 4);
        CHECK_THROWS_AS(f_of(9, dag), DomainError);
        CHECK_THROWS_AS(h_of(1, dag), DomainError);
        CHECK_THROWS_AS(g_of(0, dag), DomainError);
    }

    TEST_CASE("level profiles")
    {
        PrattDag dag;
        CHECK(level_counts(2, dag).counts == std::vector<u64>{1});
        CHECK(level_counts(5, dag).counts == std::vector<u64>{1, 1});
        CHECK(level_counts(7, dag).counts == std::vector<u64>{1, 2, 1});
        CHECK_THROWS_AS(level_counts(15, dag), DomainError);
    }

    TEST_CASE("range statistics at 10")
    {
        const SpfTable t = build_spf(100);
        const RangeStats s = range_stats(10, t);
        CHECK(s.chain_total == 9);
        CHECK(s.max_h == 3);
        CHECK(s.max_h_prime == 7);
        CHECK(s.f_hist.at(2) == 2);
        CHECK_THROWS_AS(range_stats(101, t), CapacityError);
    }

    TEST_CASE("Fermat primes")
    {
        CHECK(is_fermat_prime(17));
        CHECK_FALSE(is_fermat_prime(7));
        CHECK(is_fermat_prime(65537));
        CHECK(is_fermat_prime(3));
        CHECK_FALSE(is_fermat_prime(2));
    }

    TEST_CASE("totient iteration")
    {
        const SpfTable t = build_spf(100'000);
        CHECK(phi_iterate(1, 3, t) == 1);
        CHECK(phi_iterate(12, 1, t) == 4);
        CHECK(phi_iter_stats(100'000, 6, 0.5, t) >= 0.99);
        CHECK_THROWS_AS(phi_iter_stats(100'000, 0, 0.5, t), DomainError);
    }

    TEST_CASE("least-prime chains")
    {
        CHECK(linnik_chain(4) == std::vector<u64>{2, 3, 7, 29});
        CHECK(linnik_chain(5).back() == 59);
        CHECK(linnik_chain(6).back() == 709);
        CHECK_THROWS_AS(linnik_chain(0), DomainError);
    }

    TEST_CASE("label multiset of 7")
    {
        PrattDag dag;
        const auto m = label_multiset(7, dag);
        CHECK(m.at(2) == 2);
        CHECK(m.at(3) == 1);
        CHECK(m.at(7) == 1);
    }

    TEST_CASE("property: memoized values equal naive recursion")
    {
        const SpfTable t = build_spf(3'000'000);
        PrattDag dag(&t);
        gen::Source g(21);
        int n = 0;
        while (n < 400) {
            const u64 p = g.integer(2, 3'000'000);
            if (!t.is_prime(p))
                continue;
            ++n;
            REQUIRE(f_of(p, dag) == oracle::naive_f(p));
            REQUIRE(h_of(p, dag) == oracle::naive_h(p));
            REQUIRE(g_of(p, dag) == oracle::naive_g(p));
            REQUIRE(level_counts(p, dag).total() == f_of(p, dag));
            REQUIRE(level_counts(p, dag).counts.size() == static_cast<std::size_t>(h_of(p, dag)));
            u64 labels = 0;
            for (const auto& [q, c] : label_multiset(p, dag))
                labels += c;
            REQUIRE(labels == f_of(p, dag));
        }
    }

    TEST_CASE("property: bounds and mass identity on random primes")
    {
        gen::Source g(22);
        PrattDag dag;
        int n = 0;
        while (n < 300) {
            const u64 p = g.integer(3, u64{1} << 40);
            if (!is_prime_u64(p))
                continue;
            ++n;
            const double lg = std::log2(static_cast<double>(p));
            REQUIRE(static_cast<double>(f_of(p, dag)) <= 2 * lg - 1);
            REQUIRE(h_of(p, dag) <= lg + 1);
            REQUIRE(f_of(p, dag) % 2 == 0);
            REQUIRE(2 * g_of(p, dag) == f_of(p, dag));
            const MassCheck mc = mass_check(p, dag);
            REQUIRE(mc.identity_holds);
            REQUIRE(mc.prod_l_bound_holds);
        }
    }

    TEST_CASE("range statistics do not depend on threads")
    {
        const SpfTable t = build_spf(400'000);
        const RangeStats a = range_stats(400'000, t, 1);
        const RangeStats b = range_stats(400'000, t, 3);
        CHECK(a == b);
        CHECK(a.prime_count == t.prime_count(400'000));
        u64 h_total = 0;
        for (const auto& [h, c] : a.h_hist)
            h_total += c;
        CHECK(h_total == a.prime_count);
    }

    TEST_CASE("f-count bound")
    {
        const SpfTable t = build_spf(100'000);
        for (const auto& b : f_count_bounds(range_stats(100'000, t)))
            CHECK(b.holds());
    }
}
