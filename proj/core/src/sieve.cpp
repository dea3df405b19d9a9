#include "cyclelab/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclelab {

MoebiusSieve moebius_sieve(std::size_t limit) {
    if (limit < 1) throw std::domain_error("sieve limit must be >= 1");
    MoebiusSieve s;
    s.limit = limit;
    s.mu.assign(limit + 1, 0);
    s.spf.assign(limit + 1, 0);
    s.mu[1] = 1;
    s.spf[1] = 1;
    for (std::size_t i = 2; i <= limit; ++i) {
        if (s.spf[i] == 0) {
            s.spf[i] = static_cast<std::int32_t>(i);
            s.mu[i] = -1;
            s.primes.push_back(static_cast<std::int32_t>(i));
        }
        for (std::int32_t p : s.primes) {
            const std::size_t ip = i * static_cast<std::size_t>(p);
            if (p > s.spf[i] || ip > limit) break;
            s.spf[ip] = p;
            s.mu[ip] = (p == s.spf[i]) ? std::int8_t{0} : static_cast<std::int8_t>(-s.mu[i]);
        }
    }
    return s;
}

std::vector<std::int32_t> distinct_prime_factors(std::size_t m, const MoebiusSieve& sieve) {
    if (m < 1 || m > sieve.limit) throw std::domain_error("value outside sieve range");
    std::vector<std::int32_t> out;
    while (m > 1) {
        const std::int32_t p = sieve.spf[m];
        out.push_back(p);
        while (m % static_cast<std::size_t>(p) == 0) m /= static_cast<std::size_t>(p);
    }
    return out;
}

std::vector<int> factor_signature(std::size_t m, const MoebiusSieve& sieve) {
    if (m < 2 || m > sieve.limit) throw std::domain_error("value outside sieve range");
    std::vector<int> sig;
    while (m > 1) {
        const std::size_t p = static_cast<std::size_t>(sieve.spf[m]);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        sig.push_back(e);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace cyclelab
