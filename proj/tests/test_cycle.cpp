#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cyclelab/cycle.hpp"

using namespace cyclelab;

namespace {

ParityVector pv(std::initializer_list<int> bits) {
    ParityVector v;
    for (int b : bits) v.bits.push_back(static_cast<std::uint8_t>(b));
    return v;
}

// Independent oracle: phi via the append recursion
// phi(s0) = phi(s), phi(s1) = 3 phi(s) + 2^len(s).
BigInt phi_recursive(const ParityVector& v) {
    BigInt acc = 0;
    BigInt pow2 = 1;
    for (std::size_t j = 0; j < v.length(); ++j) {
        if (v.bits[j]) acc = 3 * acc + pow2;
        pow2 <<= 1;
    }
    return acc;
}

}  // namespace

TEST_CASE("phi on small words") {
    CHECK(phi(pv({})) == 0);
    CHECK(phi(pv({1})) == 1);
    CHECK(phi(pv({0})) == 0);
    CHECK(phi(pv({1, 1, 0})) == 5);
    CHECK(phi(pv({1, 0})) == 1);
    CHECK(phi(ceiling_parity(6, 4)) == 85);
}

TEST_CASE("phi matches the append recursion on random words") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t l = rng() % 40;
        ParityVector v;
        for (std::size_t j = 0; j < l; ++j) v.bits.push_back(rng() & 1u);
        CHECK(phi(v) == phi_recursive(v));
    }
}

TEST_CASE("phi parity follows the first bit") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t l = 1 + rng() % 24;
        ParityVector v;
        for (std::size_t j = 0; j < l; ++j) v.bits.push_back(rng() & 1u);
        CHECK(((phi(v) % 2 != 0)) == (v.bits[0] == 1));
    }
}

TEST_CASE("cycle class constants") {
    const CycleClass k = make_cycle_class(11, 7);
    CHECK(k.c == -139);
    CHECK(k.r == 1);
    CHECK(make_cycle_class(2, 1).c == 1);
    CHECK(make_cycle_class(6, 4).r == 2);
}

TEST_CASE("extremal bounds") {
    CHECK(m_bound(11, 7) == 3767);
    CHECK(n_bound(11, 7) == 6805);
    CHECK(m_bound(6, 4) == 85);
    CHECK(n_bound(6, 4) == 119);
    CHECK(m_bound(2, 1) == 1);
    CHECK(n_bound(2, 1) == 1);
    CHECK_THROWS_AS(m_bound(3, 0), std::domain_error);
    CHECK_THROWS_AS(n_bound(0, 0), std::domain_error);
}

TEST_CASE("M is phi of the ceiling staircase") {
    for (unsigned l = 1; l <= 30; ++l)
        for (unsigned n = 1; n <= l; ++n) CHECK(m_bound(l, n) == phi(ceiling_parity(l, n)));
}

TEST_CASE("N identity via the floor staircase when it closes") {
    // N_{l,n} = 2M - sum 2^{il/r} 3^{n-1-in/r} should equal the largest odd
    // element of the ceiling cycle in verified small cases.
    const auto rep = verify_extremality(6, 4);
    CHECK(rep.m == 85);
    CHECK(rep.n_value == 119);
    REQUIRE(rep.orbits.size() == 3);
    CHECK(rep.m_holds);
    CHECK(rep.n_holds);
    CHECK(rep.same_cycle);
}

TEST_CASE("fixed point") {
    CHECK(fixed_point(pv({1, 1, 0})) == Rational(-5));
    CHECK(fixed_point(pv({1, 0})) == Rational(1));
    CHECK(fixed_point(ceiling_parity(11, 7)) == Rational(-3767, 139));
}

TEST_CASE("step map") {
    CHECK(step(1, 1) == 2);
    CHECK(step(2, 1) == 1);
    CHECK(step(19, 5) == 31);
    CHECK(step(76, 5) == 38);
    CHECK_THROWS_AS(step(3, 2), std::domain_error);
}

TEST_CASE("cycle_from_parity builds closed orbits with matching parities") {
    SUBCASE("trivial c=1 cycle") {
        const Cycle cy = cycle_from_parity(pv({1, 0}));
        CHECK(cy.c == 1);
        CHECK(cy.elements == std::vector<BigInt>{1, 2});
    }
    SUBCASE("c = -139 ceiling cycle starts at M") {
        const Cycle cy = cycle_from_parity(ceiling_parity(11, 7));
        CHECK(cy.c == -139);
        CHECK(cy.elements.front() == 3767);
        for (std::size_t j = 0; j < 11; ++j) {
            CHECK(((cy.elements[j] % 2 != 0)) == (cy.parity.bits[j] == 1));
            CHECK(step(cy.elements[j], cy.c) == cy.elements[(j + 1) % 11]);
        }
    }
    SUBCASE("all-zero word rejected") {
        CHECK_THROWS_AS(cycle_from_parity(pv({0, 0, 0})), std::domain_error);
    }
}

TEST_CASE("c = 5 known cycle (19 31 49 76 38) arises from (l,n) = (5,3)") {
    const Cycle cy = cycle_from_parity(pv({1, 1, 1, 0, 0}));
    CHECK(cy.c == 5);
    CHECK(cy.elements == std::vector<BigInt>{19, 31, 49, 76, 38});
}

TEST_CASE("reduce_primitive") {
    SUBCASE("gcd divisors on staircase cycles") {
        CHECK(reduce_primitive(cycle_from_parity(ceiling_parity(6, 4))).second == 17);
        CHECK(reduce_primitive(cycle_from_parity(ceiling_parity(4, 2))).second == 7);
        CHECK(reduce_primitive(cycle_from_parity(ceiling_parity(9, 6))).second == 217);
    }
    SUBCASE("the c = -1 Collatz-like cycle appears 139-fold inside c = -139") {
        const Cycle cy = cycle_from_parity(pv({0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 0}));
        CHECK(cy.c == -139);
        auto [red, g] = reduce_primitive(cy);
        CHECK(g == 139);
        CHECK(red.c == -1);
        CHECK(red.elements ==
              std::vector<BigInt>{34, 17, 25, 37, 55, 82, 41, 61, 91, 136, 68});
        for (std::size_t j = 0; j < 11; ++j)
            CHECK(step(red.elements[j], red.c) == red.elements[(j + 1) % 11]);
    }
    SUBCASE("zero cycle rejected") {
        Cycle z;
        z.parity = pv({1, 0});
        z.elements = {0, 0};
        z.c = 1;
        CHECK_THROWS_AS(reduce_primitive(z), std::domain_error);
    }
}

TEST_CASE("verify_extremality: orbit extrema for (6,4)") {
    const auto rep = verify_extremality(6, 4);
    std::vector<BigInt> minima, maxodds;
    for (const auto& o : rep.orbits) {
        minima.push_back(o.min_element);
        maxodds.push_back(o.max_odd);
    }
    CHECK(minima == std::vector<BigInt>{65, 73, 85});
    CHECK(maxodds == std::vector<BigInt>{179, 143, 119});
}

TEST_CASE("verify_extremality: bounds hold across small (l,n)") {
    for (unsigned l = 2; l <= 14; ++l) {
        for (unsigned n = 1; n < l; ++n) {
            const auto rep = verify_extremality(l, n);
            CHECK(rep.m_holds);
            CHECK(rep.n_holds);
        }
    }
}

TEST_CASE("verify_extremality refuses oversized l") {
    CHECK_THROWS_AS(verify_extremality(25, 3, 20), std::domain_error);
}

TEST_CASE("orbit minima are odd") {
    for (unsigned l = 2; l <= 12; ++l)
        for (unsigned n = 1; n < l; ++n)
            for (const auto& o : verify_extremality(l, n).orbits)
                CHECK(o.min_element % 2 != 0);
}
