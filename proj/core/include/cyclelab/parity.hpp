#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cyclelab {

/// A 0/1 word of length l with n ones. Indexing in the formulas below is
/// 1-based; storage is index-ascending (bits[0] is position 1).
struct ParityVector {
    std::vector<std::uint8_t> bits;

    std::size_t length() const { return bits.size(); }
    std::size_t ones() const;

    bool operator==(const ParityVector&) const = default;
    bool operator<(const ParityVector& other) const { return bits < other.bits; }
};

/// Staircase vector from ceiling differences: bits[j] = ceil(jn/l) - ceil((j-1)n/l).
/// Contains exactly n ones. Throws std::domain_error for l = 0 or n > l.
ParityVector ceiling_parity(std::size_t l, std::size_t n);

/// Staircase vector from floor differences: bits[j] = floor(jn/l) - floor((j-1)n/l).
ParityVector floor_parity(std::size_t l, std::size_t n);

/// Left shift by k positions (k taken mod l): bits'[j] = bits[(j+k) mod l].
ParityVector rotate_left(const ParityVector& v, std::size_t k);

/// Minimal period p of the word, p | l.
std::size_t minimal_period(const ParityVector& v);

/// The distinct rotations of v, ordered by increasing shift count.
/// Cardinality is l / minimal_period(v).
std::vector<ParityVector> orbit(const ParityVector& v);

/// Lexicographically least rotation (canonical orbit representative).
ParityVector canonical_rotation(const ParityVector& v);

}  // namespace cyclelab
