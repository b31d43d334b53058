#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Seeded generators for property tests.
namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::vector<std::uint64_t> links(std::size_t count, std::uint64_t hi)
    {
        std::vector<std::uint64_t> out(count);
        for (auto& m : out)
            m = integer(1, hi);
        return out;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace gen
