#include "cyclelab/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclelab {

namespace {

BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt pow3(unsigned e) {
    BigInt r = 1;
    BigInt b = 3;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool is_odd(const BigInt& x) { return (x & 1) != 0; }

}  // namespace

CycleClass make_cycle_class(unsigned l, unsigned n) {
    if (l == 0 || n == 0 || n > l) throw std::domain_error("require 1 <= n <= l");
    CycleClass cc;
    cc.l = l;
    cc.n = n;
    cc.c = pow2(l) - pow3(n);
    cc.r = std::gcd(l, n);
    return cc;
}

BigInt phi(const ParityVector& v) {
    // Explicit sum: sum_j s_j 3^(ones in s_{j+1..l}) 2^(j-1), accumulated right to left.
    BigInt total = 0;
    BigInt three = 1;
    for (std::size_t j = v.length(); j-- > 0;) {
        if (v.bits[j]) {
            total += three * pow2(static_cast<unsigned>(j));
            three *= 3;
        }
    }
    return total;
}

BigInt m_bound(unsigned l, unsigned n) {
    if (l == 0 || n == 0 || n > l) throw std::domain_error("require 1 <= n <= l");
    BigInt total = 0;
    for (unsigned long long j = 1; j <= l; ++j) {
        unsigned long long hi = (j * n + l - 1) / l;
        unsigned long long lo = ((j - 1) * n + l - 1) / l;
        if (hi != lo) total += pow2(static_cast<unsigned>(j - 1)) * pow3(n - static_cast<unsigned>(hi));
    }
    return total;
}

BigInt n_bound(unsigned l, unsigned n) {
    if (l == 0 || n == 0 || n > l) throw std::domain_error("require 1 <= n <= l");
    const unsigned r = std::gcd(l, n);
    BigInt loss = 0;
    for (unsigned i = 0; i < r; ++i) {
        loss += pow2(i * (l / r)) * pow3(n - 1 - i * (n / r));
    }
    return 2 * m_bound(l, n) - loss;
}

Rational fixed_point(const ParityVector& v) {
    if (v.length() == 0) throw std::domain_error("empty parity vector");
    BigInt num = phi(v);
    BigInt denom = pow2(static_cast<unsigned>(v.length())) - pow3(static_cast<unsigned>(v.ones()));
    if (denom < 0) {  // cpp_rational requires a positive denominator
        num = -num;
        denom = -denom;
    }
    return Rational(num, denom);
}

BigInt step(const BigInt& x, const BigInt& c) {
    if (!is_odd(c)) throw std::domain_error("c must be odd");
    if (is_odd(x)) return (3 * x + c) / 2;
    return x / 2;
}

Cycle cycle_from_parity(const ParityVector& v) {
    const std::size_t l = v.length();
    const std::size_t n = v.ones();
    if (l == 0 || n == 0) throw std::domain_error("require a nonempty vector with at least one 1");
    Cycle cy;
    cy.parity = v;
    cy.c = pow2(static_cast<unsigned>(l)) - pow3(static_cast<unsigned>(n));
    cy.elements.resize(l);
    cy.elements[0] = phi(v);
    for (std::size_t j = 1; j < l; ++j) cy.elements[j] = step(cy.elements[j - 1], cy.c);
    for (std::size_t j = 0; j < l; ++j) {
        if (is_odd(cy.elements[j]) != (v.bits[j] == 1))
            throw std::logic_error("cycle parity mismatch");
    }
    if (step(cy.elements[l - 1], cy.c) != cy.elements[0]) throw std::logic_error("cycle not closed");
    return cy;
}

std::pair<Cycle, BigInt> reduce_primitive(const Cycle& cy) {
    BigInt g = 0;
    for (const BigInt& e : cy.elements) g = boost::multiprecision::gcd(g, e);
    if (g == 0) throw std::domain_error("zero cycle cannot be reduced");
    Cycle out = cy;
    for (BigInt& e : out.elements) e /= g;
    out.c /= g;
    return {out, g};
}

namespace {

// Rotations as fixed-width words, MSB-first so numeric order matches
// lexicographic order on the bit vector.
std::uint32_t encode_msb_first(const ParityVector& v) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < v.length(); ++j) w = (w << 1) | v.bits[j];
    return w;
}

std::uint32_t rotl_word(std::uint32_t w, unsigned k, unsigned l) {
    const std::uint32_t mask = (l == 32) ? ~0u : ((1u << l) - 1);
    return ((w << k) | (w >> (l - k))) & mask;
}

ParityVector decode_msb_first(std::uint32_t w, unsigned l) {
    ParityVector v;
    v.bits.resize(l);
    for (unsigned j = 0; j < l; ++j) v.bits[j] = (w >> (l - 1 - j)) & 1u;
    return v;
}

}  // namespace

BoundsReport verify_extremality(unsigned l, unsigned n, unsigned brute_limit) {
    if (l == 0 || n == 0 || n > l) throw std::domain_error("require 1 <= n <= l");
    if (l > brute_limit)
        throw std::domain_error("l exceeds the brute-force limit (" + std::to_string(brute_limit) +
                                "); refusing the enumeration");

    BoundsReport rep;
    rep.l = l;
    rep.n = n;
    rep.m = m_bound(l, n);
    rep.n_value = n_bound(l, n);

    // Smallest n-subset mask, advanced by Gosper's hack.
    std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t end = (l == 32) ? ~0u : (1u << l);
    rep.m_holds = true;
    rep.n_holds = true;
    while (mask < end) {
        // Keep only canonical (numerically least MSB-first rotation) representatives.
        bool canonical = true;
        for (unsigned k = 1; k < l && canonical; ++k) {
            if (rotl_word(mask, k, l) < mask) canonical = false;
        }
        if (canonical) {
            OrbitExtrema oe;
            oe.representative = decode_msb_first(mask, l);
            bool first = true;
            bool first_odd = true;
            for (unsigned k = 0; k < l; ++k) {
                ParityVector rot = rotate_left(oe.representative, k);
                BigInt val = phi(rot);
                if (first || val < oe.min_element) oe.min_element = val;
                first = false;
                if (rot.bits[0] == 1) {
                    if (first_odd || val > oe.max_odd) oe.max_odd = val;
                    first_odd = false;
                }
            }
            if (oe.min_element > rep.m) rep.m_holds = false;
            if (oe.max_odd < rep.n_value) rep.n_holds = false;
            rep.orbits.push_back(std::move(oe));
        }
        // Gosper: next word with the same popcount.
        std::uint32_t c = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
        std::uint32_t r = mask + c;
        if (c == 0 || r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }

    const Cycle m_cycle = cycle_from_parity(ceiling_parity(l, n));
    const bool has_m = std::find(m_cycle.elements.begin(), m_cycle.elements.end(), rep.m) !=
                       m_cycle.elements.end();
    const bool has_n = std::find(m_cycle.elements.begin(), m_cycle.elements.end(), rep.n_value) !=
                       m_cycle.elements.end();
    rep.same_cycle = has_m && has_n;
    return rep;
}

}  // namespace cyclelab
