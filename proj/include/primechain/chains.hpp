#pragma once

// Explicit enumeration of prime chains p_1 < p_2 < ... with
// p_{j+1} == 1 (mod p_j).

#include "primechain/sieve.hpp"

#include <vector>

namespace primechain {

struct ChainRecord {
    std::vector<u64> primes;

    std::size_t length() const { return primes.size(); }
    friend auto operator<=>(const ChainRecord&, const ChainRecord&) = default;
};

/// (p_1; m_1..m_{k-1}) with p_{j+1} = m_j p_j + 1.
struct LinkVector {
    u64 base = 0;
    std::vector<u64> links;
    friend bool operator==(const LinkVector&, const LinkVector&) = default;
};

struct ChainEnumeration {
    std::vector<ChainRecord> chains;  // sorted lexicographically
    u64 total = 0;                    // N(x; p)
    std::vector<u64> by_length;       // by_length[k] = N_k(x; p); index 0 unused
};

struct EnumerateOptions {
    u64 bound = 1'000'000;       // cap on the number of chains returned
    bool include_trivial = true; // count the length-1 chain [p]
    bool keep_chains = true;     // false: count only
};

/// All chains with p_1 = p and p_k <= p x. Primality of m q + 1 comes from
/// the table when it fits, deterministic Miller-Rabin otherwise.
ChainEnumeration enumerate_from(u64 p, double x, const SpfTable* table,
                                const EnumerateOptions& opt = {});

/// Every chain ending at p, built backwards through the prime divisors of
/// each predecessor minus one (trial division, no tables, no memo).
std::vector<ChainRecord> chains_ending_at(u64 p, std::size_t cap = 1'000'000);
u64 f_oracle(u64 p, std::size_t cap = 1'000'000);

/// Throws IntegrityError if c is not a chain.
LinkVector link_vector(const ChainRecord& c);
/// Throws IntegrityError if a reconstructed term is composite.
ChainRecord rebuild(const LinkVector& v);

bool is_chain(const ChainRecord& c);

/// sum_{p<=x} f(p) == pi(x) + sum_{q<=x/2} f(q) pi(x; q, 1), exactly.
bool n_identity_check(u64 x, const SpfTable& table);

} // namespace primechain
