#include "cyclelab/rotation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclelab/parity.hpp"

namespace cyclelab {

namespace {

// Modular inverse of a mod m via extended Euclid; requires gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        const long long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1 && old_r != -1) throw std::domain_error("not invertible");
    if (old_r == -1) old_s = -old_s;
    return ((old_s % m) + m) % m;
}

bool is_prime_trial(unsigned m) {
    if (m < 2) return false;
    for (unsigned d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

}  // namespace

unsigned rotation_distance_geometric(unsigned l, unsigned n) {
    if (n == 0 || n >= l) throw std::domain_error("require 1 <= n <= l-1");
    const ParityVector fl = floor_parity(l, n);
    const ParityVector ce = ceiling_parity(l, n);
    for (unsigned k = 1; k <= l; ++k) {
        if (rotate_left(fl, k) == ce) return k == l ? l : k;
    }
    throw std::logic_error("floor and ceiling staircases are not rotations of one another");
}

unsigned rotation_distance_modular(unsigned l, unsigned n) {
    if (n == 0 || n >= l) throw std::domain_error("require 1 <= n <= l-1");
    if (std::gcd(l, n) != 1) throw std::domain_error("require gcd(l, n) = 1");
    const long long inv = mod_inverse(static_cast<long long>(n), static_cast<long long>(l));
    long long d = (static_cast<long long>(l) - inv) % static_cast<long long>(l);
    if (d == 0) d = l;  // cannot happen for l > 1; defensive normalization to 1..l-1
    return static_cast<unsigned>(d);
}

RotationRecord solve_congruence(unsigned l, unsigned n) {
    RotationRecord rec;
    rec.l = l;
    rec.n = n;
    rec.d = rotation_distance_modular(l, n);
    const long long nd1 = static_cast<long long>(n) * rec.d + 1;
    if (nd1 % static_cast<long long>(l) != 0)
        throw std::logic_error("l does not divide n*d + 1");
    rec.x = nd1 / static_cast<long long>(l);
    rec.n_minus_x = static_cast<long long>(n) - rec.x;
    // d(n-x) - (l-d)x = -1 over the integers, not merely mod l.
    const long long lhs = static_cast<long long>(rec.d) * rec.n_minus_x -
                          static_cast<long long>(l - rec.d) * rec.x;
    if (lhs != -1) throw std::logic_error("congruence identity violated");
    return rec;
}

SequencePair sequences(unsigned l) {
    if (l < 3 || !is_prime_trial(l)) throw std::domain_error("l must be an odd prime >= 3");
    SequencePair out;
    out.n_minus_x.reserve(l - 1);
    out.x.reserve(l - 1);
    for (unsigned n = 1; n < l; ++n) {
        const RotationRecord rec = solve_congruence(l, n);
        out.n_minus_x.push_back(rec.n_minus_x);
        out.x.push_back(rec.x);
    }
    std::sort(out.n_minus_x.begin(), out.n_minus_x.end());
    std::sort(out.x.begin(), out.x.end());
    return out;
}

namespace {

BasisTable basis_table_with_sieve(unsigned l, const MoebiusSieve& sieve) {
    BasisTable table;
    table.l = l;
    for (unsigned n = 1; n < l; ++n) {
        const RotationRecord rec = solve_congruence(l, n);
        table.groups[rec.x].push_back(n);
    }
    for (auto& [x, ns] : table.groups) {
        table.basis.push_back(x);
        std::set<std::int32_t> primes;
        for (unsigned n : ns) {
            for (std::int32_t p : distinct_prime_factors(n, sieve)) primes.insert(p);
        }
        const int count = static_cast<int>(primes.size());
        table.factor_counts[x] = count;
        table.max_factor_count = std::max(table.max_factor_count, count);
        std::sort(ns.begin(), ns.end(), std::greater<unsigned>());  // table order in the source data
    }
    return table;
}

}  // namespace

BasisTable basis_table(unsigned l) {
    if (l < 3 || !is_prime_trial(l)) throw std::domain_error("l must be an odd prime >= 3");
    return basis_table_with_sieve(l, moebius_sieve(l));
}

std::vector<PrimeSweepRow> prime_sweep(std::int64_t limit) {
    if (limit < 3) throw std::domain_error("sweep limit must be >= 3");
    const MoebiusSieve sieve = moebius_sieve(static_cast<std::size_t>(limit));
    std::vector<PrimeSweepRow> rows;
    for (std::int32_t p : sieve.primes) {
        if (p == 2) continue;
        const BasisTable table = basis_table_with_sieve(static_cast<unsigned>(p), sieve);
        rows.push_back({p, static_cast<int>(table.basis.size()), table.max_factor_count});
    }
    return rows;
}

}  // namespace cyclelab
