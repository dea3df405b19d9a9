#pragma once

#include <cstdint>
#include <vector>

namespace cyclelab {

/// Linear sieve carrying the Moebius function, smallest prime factors and the
/// prime list up to `limit`.
struct MoebiusSieve {
    std::size_t limit = 0;
    std::vector<std::int8_t> mu;    // mu[m], valid for 1 <= m <= limit
    std::vector<std::int32_t> spf;  // smallest prime factor, spf[1] = 1
    std::vector<std::int32_t> primes;

    bool is_prime(std::size_t m) const { return m >= 2 && spf[m] == static_cast<std::int32_t>(m); }
};

MoebiusSieve moebius_sieve(std::size_t limit);

/// Distinct prime divisors of m, ascending.
std::vector<std::int32_t> distinct_prime_factors(std::size_t m, const MoebiusSieve& sieve);

/// Sorted multiset of prime exponents of m ([1] = prime, [1,1] = pq, [2] = p^2, ...).
/// Requires 2 <= m <= sieve.limit.
std::vector<int> factor_signature(std::size_t m, const MoebiusSieve& sieve);

}  // namespace cyclelab
