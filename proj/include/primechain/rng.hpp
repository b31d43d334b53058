#pragma once

// Counter-based random numbers. Philox4x32-10 (Salmon et al., "Parallel
// random numbers: as easy as 1, 2, 3") maps a 128-bit counter and a 64-bit
// key to 128 random bits with no internal state, so any draw can be
// addressed directly by (seed, stream, index).

#include <array>
#include <cstdint>

namespace primechain {

__extension__ typedef unsigned __int128 u128_t;

class Philox4x32 {
public:
    using counter_type = std::array<std::uint32_t, 4>;
    using key_type = std::array<std::uint32_t, 2>;

    constexpr explicit Philox4x32(key_type key) : key_(key) {}
    constexpr explicit Philox4x32(std::uint64_t seed)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
    {
    }

    constexpr counter_type operator()(counter_type ctr) const
    {
        key_type k = key_;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                k[0] += kWeyl0;
                k[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    constexpr key_type key() const { return key_; }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

    key_type key_;
};

/// SplitMix64 finalizer; used to derive stream identifiers.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_stream(std::uint64_t parent, std::uint64_t index)
{
    return mix64(parent ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// Uniform in the open interval (0, 1) from 64 random bits (53 used).
constexpr double to_open_unit(std::uint64_t bits)
{
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// One addressable stream of uniforms: draw(i) depends only on
/// (seed, stream id, purpose, i).
class UniformStream {
public:
    constexpr UniformStream(const Philox4x32& gen, std::uint64_t stream, std::uint32_t purpose = 0)
        : gen_(&gen), stream_(stream), purpose_(purpose)
    {
    }

    double uniform(std::uint32_t index) const { return to_open_unit(bits(index)); }

    std::uint64_t bits(std::uint32_t index) const
    {
        const auto out = (*gen_)({static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                                  index, purpose_});
        return (std::uint64_t{out[0]} << 32) | out[1];
    }

    /// Uniform integer in [0, n) by multiply-shift on 64 random bits.
    std::uint64_t below(std::uint32_t index, std::uint64_t n) const
    {
        return static_cast<std::uint64_t>((static_cast<u128_t>(bits(index)) * n) >> 64);
    }

    std::uint64_t id() const { return stream_; }

private:
    const Philox4x32* gen_;
    std::uint64_t stream_;
    std::uint32_t purpose_;
};

} // namespace primechain
