#include "gen.hpp"

#include "primechain/chains.hpp"
#include "primechain/error.hpp"
#include "primechain/oracles.hpp"
#include "primechain/pratt.hpp"

#include <doctest.h>

#include <cmath>

using namespace primechain;

namespace {

std::vector<std::vector<u64>> as_lists(const ChainEnumeration& e)
{
    std::vector<std::vector<u64>> out;
    for (const auto& c : e.chains)
        out.push_back(c.primes);
    return out;
}

} // namespace

TEST_SUITE("chains")
{
    TEST_CASE("enumeration examples")
    {
        const SpfTable t = build_spf(1000);
        CHECK(as_lists(enumerate_from(7, 10, &t)) ==
              std::vector<std::vector<u64>>{{7}, {7, 29}, {7, 29, 59}, {7, 43}});
        CHECK(as_lists(enumerate_from(2, 5, &t)) ==
              std::vector<std::vector<u64>>{{2}, {2, 3}, {2, 3, 7}, {2, 5}, {2, 7}});
        CHECK(enumerate_from(101, 1, &t).total == 1);
        CHECK(enumerate_from(7, 10, nullptr).total == 4);
    }

    TEST_CASE("enumeration errors")
    {
        const SpfTable t = build_spf(1000);
        CHECK_THROWS_AS(enumerate_from(9, 10, &t), DomainError);
        CHECK_THROWS_AS(enumerate_from(7, 0.5, &t), DomainError);
        EnumerateOptions o;
        o.bound = 3;
        CHECK_THROWS_AS(enumerate_from(7, 10, &t, o), CapacityError);
    }

    TEST_CASE("backward oracle")
    {
        CHECK(f_oracle(7) == 4);
        CHECK(f_oracle(2) == 1);
        const auto cs = chains_ending_at(7);
        CHECK(cs.size() == 4);
        CHECK_THROWS_AS(chains_ending_at(7, 2), CapacityError);
    }

    TEST_CASE("link vectors")
    {
        const ChainRecord c{{3, 7, 29, 59}};
        const LinkVector v = link_vector(c);
        CHECK(v.base == 3);
        CHECK(v.links == std::vector<u64>{2, 4, 2});
        CHECK(rebuild(v) == c);
        CHECK(link_vector(ChainRecord{{11}}).links.empty());
        CHECK_THROWS_AS(link_vector(ChainRecord{{3, 11}}), IntegrityError);
        CHECK_THROWS_AS(rebuild(LinkVector{3, {3}}), IntegrityError);
        CHECK_THROWS_AS(rebuild(LinkVector{3, {0}}), IntegrityError);
        CHECK_THROWS_AS(rebuild(LinkVector{4, {}}), IntegrityError);
    }

    TEST_CASE("N identity")
    {
        const SpfTable t = build_spf(10'000);
        CHECK(n_identity_check(100, t));
        CHECK(n_identity_check(1000, t));
        CHECK(n_identity_check(10'000, t));
    }

    TEST_CASE("property: counts, monotonicity and round trips")
    {
        const SpfTable t = build_spf(2'000'000);
        gen::Source g(31);
        for (int i = 0; i < 40; ++i) {
            u64 p = g.integer(2, 400);
            while (!t.is_prime(p))
                ++p;
            const double x1 = g.real(1, 200);
            const double x2 = x1 * g.real(1, 10);
            const auto a = enumerate_from(p, x1, &t);
            const auto b = enumerate_from(p, x2, &t);
            REQUIRE(a.total <= b.total);
            REQUIRE(a.total == oracle::chain_count_forward(p, x1));
            u64 sum = 0;
            for (u64 c : a.by_length)
                sum += c;
            REQUIRE(sum == a.total);
            const u64 n2 = a.by_length.size() > 2 ? a.by_length[2] : 0;
            REQUIRE(n2 == count_primes_in_ap(static_cast<u64>(std::floor(p * x1)), p, t));
            for (const auto& c : a.chains) {
                REQUIRE(is_chain(c));
                REQUIRE(rebuild(link_vector(c)) == c);
            }
        }
    }

    TEST_CASE("property: backward enumeration matches the Pratt recursion")
    {
        const SpfTable t = build_spf(100'000);
        PrattDag dag(&t);
        gen::Source g(32);
        for (int i = 0; i < 200; ++i) {
            u64 p = g.integer(2, 100'000);
            while (!t.is_prime(p))
                ++p;
            const auto cs = chains_ending_at(p);
            REQUIRE(cs.size() == f_of(p, dag));
            u64 from2 = 0;
            for (const auto& c : cs)
                from2 += c.primes.front() == 2;
            REQUIRE(from2 == g_of(p, dag));
        }
    }
}
