#include "cyclelab/parity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclelab {

std::size_t ParityVector::ones() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

namespace {

void check_domain(std::size_t l, std::size_t n) {
    if (l == 0) throw std::domain_error("parity vector length must be positive");
    if (n > l) throw std::domain_error("ones count exceeds length");
}

}  // namespace

ParityVector ceiling_parity(std::size_t l, std::size_t n) {
    check_domain(l, n);
    ParityVector v;
    v.bits.resize(l);
    for (std::size_t j = 1; j <= l; ++j) {
        std::size_t hi = (j * n + l - 1) / l;        // ceil(jn/l)
        std::size_t lo = ((j - 1) * n + l - 1) / l;  // ceil((j-1)n/l)
        v.bits[j - 1] = static_cast<std::uint8_t>(hi - lo);
    }
    return v;
}

ParityVector floor_parity(std::size_t l, std::size_t n) {
    check_domain(l, n);
    ParityVector v;
    v.bits.resize(l);
    for (std::size_t j = 1; j <= l; ++j) {
        v.bits[j - 1] = static_cast<std::uint8_t>(j * n / l - (j - 1) * n / l);
    }
    return v;
}

ParityVector rotate_left(const ParityVector& v, std::size_t k) {
    const std::size_t l = v.length();
    if (l == 0) return v;
    k %= l;
    ParityVector out;
    out.bits.resize(l);
    for (std::size_t j = 0; j < l; ++j) out.bits[j] = v.bits[(j + k) % l];
    return out;
}

std::size_t minimal_period(const ParityVector& v) {
    const std::size_t l = v.length();
    for (std::size_t p = 1; p <= l; ++p) {
        if (l % p != 0) continue;
        bool periodic = true;
        for (std::size_t j = p; j < l && periodic; ++j) periodic = v.bits[j] == v.bits[j - p];
        if (periodic) return p;
    }
    return l;
}

std::vector<ParityVector> orbit(const ParityVector& v) {
    const std::size_t p = minimal_period(v);
    std::vector<ParityVector> out;
    out.reserve(p);
    for (std::size_t k = 0; k < p; ++k) out.push_back(rotate_left(v, k));
    return out;
}

ParityVector canonical_rotation(const ParityVector& v) {
    ParityVector best = v;
    for (std::size_t k = 1; k < v.length(); ++k) {
        ParityVector r = rotate_left(v, k);
        if (r.bits < best.bits) best = std::move(r);
    }
    return best;
}

}  // namespace cyclelab
