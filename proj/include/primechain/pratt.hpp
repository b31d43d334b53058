#pragma once

// Pratt trees: T(p) has root p and one subtree T(q) for every distinct prime
// q dividing p-1. Everything here is computed over a memoized DAG so shared
// subtrees are only visited once.

#include "primechain/sieve.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace primechain {

struct PrattNode {
    std::vector<u64> children; // distinct primes dividing p-1, increasing
    u64 f = 0;                 // node count of T(p) = chains ending at p
    int h = 0;                 // height of T(p); h(2) = 1
    u64 g = 0;                 // chains 2 -> ... -> p
};

/// Per-depth node counts of T(p); counts[0] = 1 for the root.
struct LevelProfile {
    std::vector<u64> counts;
    u64 total() const;
};

/// Memoized map prime -> node. Factorizations of p-1 come from the spf
/// table when p-1 fits, otherwise from trial division. Not thread safe; use
/// one DAG per worker.
class PrattDag {
public:
    explicit PrattDag(const SpfTable* table = nullptr) : table_(table) {}

    /// Throws DomainError for composite p.
    const PrattNode& node(u64 p);
    const LevelProfile& levels(u64 p);
    std::size_t size() const { return nodes_.size(); }
    const SpfTable* table() const { return table_; }

private:
    const PrattNode& build(u64 p);

    const SpfTable* table_;
    std::unordered_map<u64, PrattNode> nodes_;
    std::unordered_map<u64, LevelProfile> profiles_;
};

u64 f_of(u64 p, PrattDag& dag);
int h_of(u64 p, PrattDag& dag);
u64 g_of(u64 p, PrattDag& dag);
LevelProfile level_counts(u64 p, PrattDag& dag);

/// p - 1 is a power of two whose exponent is itself a power of two.
bool is_fermat_prime(u64 p);

/// Multiset of prime labels of T(p): label -> multiplicity.
std::map<u64, u64> label_multiset(u64 p, PrattDag& dag);

struct MassCheck {
    bool identity_holds = false; // prod_{q in Q(p)} q l(q-1)/(q-1) == p, exactly
    u64 prod_l = 1;              // prod_{q in Q(p)} l(q-1)
    bool prod_l_bound_holds = false; // prod_l * 2^(f/2) <= p
};

/// Exact check via prime-exponent accumulation of the rational product.
MassCheck mass_check(u64 p, PrattDag& dag);

struct RangeStats {
    u64 limit = 0;
    u64 prime_count = 0;
    u64 chain_total = 0; // N(x) = sum f(p)
    std::map<int, u64> h_hist;
    std::map<u64, u64> f_hist;
    int max_h = 0;
    u64 max_h_prime = 0; // least prime attaining max_h
    u64 max_f = 0;
    u64 max_f_prime = 0;

    friend bool operator==(const RangeStats&, const RangeStats&) = default;
};

/// Sweeps every prime p <= x in increasing order. Children of p lie below
/// p/2, so each dyadic block [2^j, 2^(j+1)) is processed in parallel.
RangeStats range_stats(u64 x, const SpfTable& table, unsigned threads = 1);

/// |{p <= x : f(p) = h}| against (6 log x / h)^h.
struct FCountBound {
    u64 h;
    u64 count;
    double bound;
    bool holds() const { return static_cast<double>(count) <= bound; }
};
std::vector<FCountBound> f_count_bounds(const RangeStats& stats);

/// Fraction of n <= x with P^+(phi_k(n)) <= x^eps, where phi_k is the k-th
/// iterate of Euler's totient and P^+(1) = 1.
double phi_iter_stats(u64 x, int k, double eps, const SpfTable& table);
u64 phi_iterate(u64 n, int k, const SpfTable& table);

/// q_1 = 2, q_{j+1} = least prime == 1 (mod q_j).
std::vector<u64> linnik_chain(int length, const SpfTable* table = nullptr);

} // namespace primechain
