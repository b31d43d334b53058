#include "primechain/brw.hpp"
#include "primechain/dickman.hpp"
#include "primechain/error.hpp"
#include "primechain/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace primechain;

namespace {

RunConfig config(std::uint64_t reps, int gens, double cap, std::uint64_t seed = 5)
{
    RunConfig c;
    c.seed = seed;
    c.replicates = reps;
    c.generations = gens;
    c.cap = cap;
    return c;
}

} // namespace

TEST_SUITE("rng")
{
    TEST_CASE("Philox4x32-10 known answers")
    {
        using C = Philox4x32::counter_type;
        CHECK(Philox4x32(Philox4x32::key_type{0, 0})(C{0, 0, 0, 0}) ==
              C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
        CHECK(Philox4x32(Philox4x32::key_type{0xffffffff, 0xffffffff})(C{0xffffffff, 0xffffffff, 0xffffffff,
                                                                           0xffffffff}) ==
              C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
        CHECK(Philox4x32(Philox4x32::key_type{0xa4093822, 0x299f31d0})(C{0x243f6a88, 0x85a308d3, 0x13198a2e,
                                                                           0x03707344}) ==
              C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    }

    TEST_CASE("uniforms are open and addressable")
    {
        const Philox4x32 g(9);
        const UniformStream s(g, derive_stream(1, 2));
        double sum = 0;
        for (std::uint32_t i = 0; i < 100'000; ++i) {
            const double u = s.uniform(i);
            REQUIRE(u > 0);
            REQUIRE(u < 1);
            sum += u;
        }
        CHECK(std::abs(sum / 100'000 - 0.5) < 0.005);
        CHECK(s.uniform(77) == UniformStream(g, derive_stream(1, 2)).uniform(77));
        CHECK(s.uniform(77) != UniformStream(g, derive_stream(1, 3)).uniform(77));
        for (std::uint32_t i = 0; i < 1000; ++i)
            REQUIRE(s.below(i, 13) < 13);
    }
}

TEST_SUITE("brw")
{
    TEST_CASE("offsets from forced uniforms")
    {
        const auto o = sample_lpd_offsets([](std::uint32_t) { return 0.5; }, 5.0);
        REQUIRE(!o.empty());
        CHECK(o[0].value == doctest::Approx(std::log(2.0)));
        CHECK(o[1].value == doctest::Approx(std::log(4.0)));
        for (std::size_t i = 0; i < o.size(); ++i)
            CHECK(o[i].value <= 5.0);
        CHECK_THROWS_AS(sample_lpd_offsets([](std::uint32_t) { return 0.5; }, 0.0), DomainError);
    }

    TEST_CASE("tiny caps give empty offspring")
    {
        const Philox4x32 g(3);
        int empty = 0;
        for (std::uint64_t i = 0; i < 2000; ++i)
            empty += sample_lpd_offsets(UniformStream(g, i), 1e-4).empty();
        CHECK(empty >= 1990);
    }

    TEST_CASE("generation zero and Z_n(0)")
    {
        const auto run = simulate_run(config(1, 3, 3.0), 0);
        REQUIRE(run.size() == 4);
        CHECK(run[0].positions == std::vector<double>{0.0});
        for (int n = 1; n <= 3; ++n)
            CHECK(z_count(run[n], 0.0, 3.0) == 0);
        CHECK_THROWS_AS(z_count(run[1], 3.5, 3.0), CensoringError);
    }

    TEST_CASE("population budget")
    {
        RunConfig c = config(1, 8, 12.0);
        c.max_population = 1000;
        CHECK_THROWS_AS(simulate_run(c, 0), CapacityError);
        CHECK_THROWS_AS(simulate_run(config(1, 2, -1.0), 0), DomainError);
    }

    TEST_CASE("mean counts")
    {
        const RunConfig c = config(100'000, 3, 2.0);
        const std::vector<ZQuery> qs{{1, 1.0}, {2, 1.0}, {3, 2.0}};
        const auto z = z_samples(c, qs);
        for (std::size_t q = 0; q < qs.size(); ++q) {
            std::vector<double> xs(c.replicates);
            for (std::uint64_t r = 0; r < c.replicates; ++r)
                xs[r] = static_cast<double>(z[r * qs.size() + q]);
            const MeanEstimate m = mean_of(xs);
            const double want = std::pow(qs[q].t, qs[q].n) / std::tgamma(qs[q].n + 1.0);
            CHECK(std::abs(m.mean - want) <= 3 * m.se);
        }
    }

    TEST_CASE("law of M_1 is Dickman's")
    {
        for (double u : {1.5, 2.0, 2.5, 3.0}) {
            const Proportion p = m1_below(config(50'000, 1, 1.0, 17), u);
            CHECK(std::abs(p.p() - rho(u)) <= 3 * p.se());
        }
    }

    TEST_CASE("truncation exactness")
    {
        for (std::uint64_t rep = 0; rep < 300; ++rep) {
            const auto lo = simulate_run(config(1, 5, 2.5), rep);
            const auto hi = simulate_run(config(1, 5, 4.5), rep);
            for (int n = 0; n <= 5; ++n)
                for (double t = 0; t <= 2.5; t += 0.125)
                    REQUIRE(z_count(lo[n], t, 2.5) == z_count(hi[n], t, 4.5));
        }
    }

    TEST_CASE("exact B_n does not depend on the cap")
    {
        for (std::uint64_t rep = 0; rep < 200; ++rep) {
            const double a = exact_bn(6, predicted_bn(6) + 4, 8, rep);
            const double b = exact_bn(6, predicted_bn(6) + 7, 8, rep);
            if (std::isfinite(a))
                REQUIRE(a == b);
            else
                REQUIRE(b > predicted_bn(6) + 4);
        }
    }

    TEST_CASE("B_n from the explicit simulation equals branch and bound")
    {
        for (std::uint64_t rep = 0; rep < 100; ++rep) {
            const auto run = simulate_run(config(1, 4, 5.0, 21), rep);
            CHECK(run[4].minimum() == exact_bn(4, 5.0, 21, rep));
        }
    }

    TEST_CASE("median of B_1")
    {
        RunConfig c = config(10'000, 1, 0);
        const MedianEstimate m = estimate_median_bn(1, c, MedianMethod::exact);
        CHECK(std::abs(m.median - 0.5) <= 0.02);
        CHECK(m.ci_low <= m.median);
        CHECK(m.median <= m.ci_high);
        c.cap = 1.0;
        CHECK_THROWS_AS(estimate_median_bn(1, c), DomainError);
    }

    TEST_CASE("exact and population routes agree")
    {
        const RunConfig c = config(20'000, 1, 0, 3);
        const double a = estimate_median_bn(10, c, MedianMethod::exact).median;
        const double b = estimate_median_bn(10, c, MedianMethod::population).median;
        CHECK(std::abs(a - b) < 0.1);
    }

    TEST_CASE("thread count does not change results")
    {
        RunConfig a = config(2000, 5, 3.0, 99);
        RunConfig b = a;
        b.threads = 5;
        CHECK(z_samples(a, {{5, 3.0}, {2, 1.5}}) == z_samples(b, {{5, 3.0}, {2, 1.5}}));
        a.cap = b.cap = predicted_bn(9) + 4;
        CHECK(sample_bn(9, a, MedianMethod::exact).values == sample_bn(9, b, MedianMethod::exact).values);
        CHECK(sample_bn(9, a, MedianMethod::population).values == sample_bn(9, b, MedianMethod::population).values);
        CHECK(t_epsilon_samples(0.02, a) == t_epsilon_samples(0.02, b));
    }

    TEST_CASE("T(eps)")
    {
        const RunConfig c = config(1, 0, 1.0);
        CHECK(t_epsilon(1.0, c, 0) == 0);
        CHECK_THROWS_AS(t_epsilon(0.0, c, 0), DomainError);
        CHECK_THROWS_AS(t_epsilon(1e-3, c, 0, 1), CapacityError);
        const auto ts = t_epsilon_samples(std::exp(-12.0), config(200, 0, 1.0, 1));
        double mean = 0;
        for (int t : ts)
            mean += t;
        mean /= static_cast<double>(ts.size());
        CHECK(std::abs(mean / 12.0 - std::exp(1.0)) <= 0.35);
    }

    TEST_CASE("Z_1 tail bound")
    {
        const RunConfig c = config(50'000, 1, 2.0, 4);
        const auto z = z_samples(c, {{1, 1.0}, {1, 2.0}});
        for (std::size_t q = 0; q < 2; ++q)
            for (std::uint64_t k = 1; k <= 10; ++k) {
                Proportion p;
                p.trials = c.replicates;
                for (std::uint64_t r = 0; r < c.replicates; ++r)
                    p.hits += z[r * 2 + q] >= k;
                const double t = q + 1.0;
                CHECK(p.p() <= std::pow(std::exp(1.0) * t / static_cast<double>(k), k - 1.0) + 3 * p.se());
            }
    }

    TEST_CASE("tails and the recursive equation")
    {
        const TailEstimate t = estimate_tails(6, config(3000, 1, 0, 2));
        CHECK(t.points.front().x == 0);
        CHECK(t.left_slope > 0);
        const RdeResult r = rde_iterate(2000, 8, config(1, 0, 1.0, 2));
        CHECK(r.ks.size() == 8);
        CHECK(r.medians.size() == 8);
        CHECK_FALSE(r.diverged);
        CHECK(r.median_ci_low <= r.median);
        CHECK_THROWS_AS(rde_iterate(10, 3, config(1, 0, 1.0)), DomainError);
    }

    TEST_CASE("first RDE step is -1/e + B_1")
    {
        const RdeResult r = rde_iterate(20'000, 1, config(1, 0, 1.0, 6));
        // median of B_1 is 1/2
        CHECK(std::abs(r.median - (0.5 - std::exp(-1.0))) < 0.03);
    }

    TEST_CASE("method names")
    {
        CHECK(parse_median_method("exact") == MedianMethod::exact);
        CHECK(to_string(MedianMethod::population) == "population");
        CHECK_THROWS_AS(parse_median_method("magic"), DomainError);
    }

    TEST_CASE("Wilson interval brackets the estimate")
    {
        Proportion p{30, 100};
        const auto [lo, hi] = p.wilson();
        CHECK(lo < 0.3);
        CHECK(hi > 0.3);
        CHECK(ks_distance({1, 2, 3}, {1, 2, 3}) == 0.0);
        CHECK(ks_distance({0, 0}, {1, 1}) == 1.0);
    }
}
