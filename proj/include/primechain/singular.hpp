#pragma once

// Linear forms attached to a chain of links, their local root counts and
// the singular series.

#include "primechain/sieve.hpp"

#include <vector>

namespace primechain {

/// f_1(n) = n, f_{j+1}(n) = m_j f_j(n) + 1, written f_j(n) = a_j n + b_j.
struct FormSystem {
    std::vector<u64> links; // m_1..m_{k-1}
    std::vector<u64> a;     // a_1..a_k
    std::vector<u64> b;     // b_1..b_k

    std::size_t k() const { return a.size(); }
};

/// Throws CapacityError when a coefficient overflows 64 bits.
FormSystem forms_from_links(const std::vector<u64>& links);

/// Number of n in [0, p) with p | prod_j f_j(n), by scanning every n. At most
/// min(k, p) unless p divides gcd(a_j, b_j) for some j, in which case it is p.
u64 xi(u64 p, const FormSystem& sys);
/// Same count from the distinct roots -b_j / a_j mod p; O(k log p).
u64 xi_roots(u64 p, const FormSystem& sys);

struct SingularValue {
    double value = 0;     // point estimate
    double tail_low = 0;  // rigorous interval for the full product
    double tail_high = 0;
    u64 cutoff = 0;       // primes <= cutoff handled exactly
    std::size_t k = 0;
    bool vanishes = false; // some p has xi(p) = p
};

/// prod_p (1 - xi(p)/p)(1 - 1/p)^-k. Primes <= cutoff exactly; beyond,
/// xi(p) = k except for primes dividing
///   N = m_1 ... m_{k-1} prod_{i<j} |a_i b_j - a_j b_i|,
/// of which at most log N / log cutoff exceed the cutoff.
SingularValue singular_series(const std::vector<u64>& links, u64 cutoff);

/// Exhaustive check of
///   sum_{0 <= m_i < p, i in I} xi(p, m) >= p^{|I|+1} - (p-1)^{|I|+1}
/// with the links outside I fixed. indices are 1-based positions in
/// 1..k-1; fixed has k-1 entries (entries in I are ignored).
struct RhoPmResult {
    u64 sum = 0;
    u64 rhs = 0;
    bool holds() const { return sum >= rhs; }
};
RhoPmResult rhopm_sum(u64 p, std::size_t k, const std::vector<std::size_t>& indices,
                      const std::vector<u64>& fixed);
bool rhopm_check(u64 p, std::size_t k, const std::vector<std::size_t>& indices, const std::vector<u64>& fixed);

} // namespace primechain
