#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclelab/parity.hpp"

namespace cyclelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The (l, n) family constants: c = 2^l - 3^n and r = gcd(l, n).
struct CycleClass {
    unsigned l = 0;
    unsigned n = 0;
    BigInt c;
    unsigned r = 0;
};

CycleClass make_cycle_class(unsigned l, unsigned n);

/// An l-periodic orbit of x -> (3x+c)/2 (x odd), x -> x/2 (x even).
/// elements[j] is odd exactly when parity.bits[j] = 1, and
/// elements[(j+1) mod l] = step(elements[j], c).
struct Cycle {
    ParityVector parity;
    std::vector<BigInt> elements;
    BigInt c;
};

/// phi(s) = sum_j s_j 3^(ones after j) 2^(j-1); phi of the empty word is 0.
BigInt phi(const ParityVector& v);

/// M_{l,n}: the ceiling-staircase value, an upper bound on cycle minima in the
/// (l, n) family. Requires 1 <= n <= l.
BigInt m_bound(unsigned l, unsigned n);

/// N_{l,n} = 2 M_{l,n} - sum_{i=0}^{r-1} 2^(i l/r) 3^(n-1-i n/r), r = gcd(l,n):
/// a lower bound on the maximum odd cycle element.
BigInt n_bound(unsigned l, unsigned n);

/// The unique fixed point phi(v) / (2^l - 3^n) of the affine map attached to v.
Rational fixed_point(const ParityVector& v);

/// One step of the 3n+c map. c must be odd.
BigInt step(const BigInt& x, const BigInt& c);

/// The full cycle with c = 2^l - 3^n; element 1 is phi(v), successive elements
/// follow the step map. Requires 1 <= n <= l.
Cycle cycle_from_parity(const ParityVector& v);

/// Divides out the gcd of the elements. Returns the reduced cycle and the
/// divisor. Throws std::domain_error on the zero cycle.
std::pair<Cycle, BigInt> reduce_primitive(const Cycle& cy);

struct OrbitExtrema {
    ParityVector representative;
    BigInt min_element;
    BigInt max_odd;
};

struct BoundsReport {
    unsigned l = 0;
    unsigned n = 0;
    BigInt m;
    BigInt n_value;
    std::vector<OrbitExtrema> orbits;
    bool m_holds = false;      // m >= every orbit minimum
    bool n_holds = false;      // n_value <= every orbit max-odd
    bool same_cycle = false;   // M and N observed in the same orbit (reported, not asserted)
};

/// Brute-force check of the extremal bounds over one representative per
/// rotation orbit of S_{l,n}. Refuses l > brute_limit.
BoundsReport verify_extremality(unsigned l, unsigned n, unsigned brute_limit = 20);

}  // namespace cyclelab
