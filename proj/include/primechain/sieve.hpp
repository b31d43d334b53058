#pragma once

// Smallest-prime-factor tables and the integer arithmetic everything else
// sits on.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace primechain {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline constexpr u64 kSpfCeiling = 0xffffffffULL;
inline constexpr std::size_t kDefaultSegmentWidth = std::size_t{1} << 20;

struct PrimePower {
    u64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization; primes strictly increasing, exponents >= 1.
/// The factorization of 1 is empty.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> terms) : terms_(std::move(terms)) {}

    std::span<const PrimePower> terms() const& { return terms_; }
    std::vector<PrimePower> terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const PrimePower& operator[](std::size_t i) const { return terms_[i]; }

    u64 value() const;
    u64 largest_prime() const { return terms_.empty() ? 1 : terms_.back().prime; }
    std::vector<u64> primes() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> terms_;
};

/// Smallest prime factor for every 2 <= n <= limit.
///
/// Only odd n are stored (the spf of an even number is 2). The table is
/// filled segment by segment from the base primes up to sqrt(limit);
/// segments are independent, so construction can be spread over threads.
/// Once built the table is immutable.
class SpfTable {
public:
    explicit SpfTable(u64 limit, std::size_t segment_width = kDefaultSegmentWidth,
                      unsigned threads = 1);

    u64 limit() const { return limit_; }
    std::size_t segment_width() const { return segment_width_; }

    u64 spf(u64 n) const;
    bool is_prime(u64 n) const;
    bool contains(u64 n) const { return n >= 2 && n <= limit_; }

    Factorization factorize(u64 n) const;
    /// Distinct prime divisors in increasing order.
    std::vector<u64> prime_divisors(u64 n) const;
    u64 largest_prime_factor(u64 n) const;

    /// All primes <= min(x, limit) in increasing order.
    std::vector<u64> primes_up_to(u64 x) const;
    u64 prime_count(u64 x) const;

private:
    u64 limit_;
    std::size_t segment_width_;
    std::vector<u32> odd_spf_; // entry i holds spf(2i+1); entry 0 unused
};

inline SpfTable build_spf(u64 limit, std::size_t segment_width = kDefaultSegmentWidth,
                          unsigned threads = 1)
{
    return SpfTable(limit, segment_width, threads);
}

Factorization factorize(u64 n, const SpfTable& t);

/// pi(x; q, 1): primes p <= x with p == 1 (mod q).
u64 count_primes_in_ap(u64 x, u64 q, const SpfTable& t);

/// prod over p^a || n of p^(a-1).
u64 l_value(u64 n, const SpfTable& t);

/// Euler's totient from the factorization.
u64 totient(u64 n, const SpfTable& t);

// 64-bit helpers for values beyond any table.
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
/// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime_u64(u64 n);
/// Trial division; for n beyond the table. Slow for large semiprimes.
Factorization factorize_trial(u64 n);
/// Uses the table when n fits, otherwise trial division.
Factorization factorize_any(u64 n, const SpfTable* t);
bool is_prime_any(u64 n, const SpfTable* t);

} // namespace primechain
