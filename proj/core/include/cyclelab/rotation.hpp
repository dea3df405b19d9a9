#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclelab/sieve.hpp"

namespace cyclelab {

/// Rotation distance d between the floor and ceiling staircases together with
/// the congruence solution: l*x = n*d + 1 and d(n-x) - (l-d)x = -1 exactly.
struct RotationRecord {
    unsigned l = 0;
    unsigned n = 0;
    unsigned d = 0;
    long long x = 0;
    long long n_minus_x = 0;
};

/// Least k >= 1 with rotate_left(floor_parity(l,n), k) = ceiling_parity(l,n).
/// O(l^2); retained as the oracle for the modular route.
unsigned rotation_distance_geometric(unsigned l, unsigned n);

/// d = (-n^{-1}) mod l, normalized to 1..l-1. Requires gcd(l,n) = 1.
unsigned rotation_distance_modular(unsigned l, unsigned n);

RotationRecord solve_congruence(unsigned l, unsigned n);

struct SequencePair {
    std::vector<long long> n_minus_x;  // sorted ascending, length l-1
    std::vector<long long> x;          // sorted ascending, length l-1
};

/// Both congruence sequences for prime l >= 3, n = 1..l-1.
SequencePair sequences(unsigned l);

/// For prime l: n in 1..l-1 grouped by the quotient x = (n*d+1)/l, with the
/// count of distinct primes dividing each group's n-values.
struct BasisTable {
    unsigned l = 0;
    std::map<long long, std::vector<unsigned>> groups;  // x -> n values, descending as generated
    std::vector<long long> basis;                       // sorted distinct x values
    std::map<long long, int> factor_counts;
    int max_factor_count = 0;
};

BasisTable basis_table(unsigned l);

struct PrimeSweepRow {
    std::int64_t p = 0;
    int basis_size = 0;
    int max_distinct_primes = 0;
};

/// One row per odd prime p < limit, via the modular rotation distance.
std::vector<PrimeSweepRow> prime_sweep(std::int64_t limit);

}  // namespace cyclelab
