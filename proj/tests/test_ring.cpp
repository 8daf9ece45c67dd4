#include "doctest.h"

#include <random>
#include <stdexcept>

#include "f2uv/ring.hpp"

using namespace f2uv;

TEST_CASE("ring construction validates its parameters") {
    CHECK_NOTHROW(Ring(1, 1));
    CHECK_NOTHROW(Ring(3, 2));
    CHECK_NOTHROW(Ring(32, 1));
    CHECK_THROWS_AS(Ring(1, 2), std::invalid_argument);   // needs k >= m
    CHECK_THROWS_AS(Ring(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Ring(7, 5), std::invalid_argument);   // 35 bits > one word
}

TEST_CASE("canonical integer encoding round-trips through strings") {
    const Ring r32(3, 2);
    // bit i + j*k: 29 = 2^0 + 2^2 + 2^3 + 2^4 -> 1 + u^2 + v + uv
    CHECK(r32.to_string(29) == "uv+v+u^2+1");
    CHECK(r32.parse("uv+v+u^2+1") == 29);
    CHECK(r32.parse(" uv + v + u^2 + 1 ") == 29);

    const Ring r31(3, 1);
    CHECK(r31.to_string(6) == "u^2+u");
    CHECK(r31.parse("u^2+u") == 6);
    CHECK(r31.to_string(0) == "0");
    CHECK(r31.parse("0") == 0);
    CHECK(r31.to_string(1) == "1");

    for (elt a = 0; a < r32.size(); ++a)
        CHECK(r32.parse(r32.to_string(a)) == a);
}

TEST_CASE("parse applies the quotient relations and rejects junk") {
    const Ring r31(3, 1);
    CHECK(r31.parse("u^3") == 0);          // u^3 = 0 in the quotient
    CHECK(r31.parse("u^3+1") == 1);
    CHECK(r31.parse("v") == 0);            // v = v^1 vanishes for m = 1
    CHECK(r31.parse("u^40") == 0);
    CHECK(r31.parse("0+1") == 1);          // additive zero term
    CHECK(r31.parse("1+1") == 0);          // characteristic 2
    CHECK_THROWS_AS(r31.parse(""), std::invalid_argument);
    CHECK_THROWS_AS(r31.parse("u+"), std::invalid_argument);
    CHECK_THROWS_AS(r31.parse("01"), std::invalid_argument);
    CHECK_THROWS_AS(r31.parse("w"), std::invalid_argument);
    CHECK_THROWS_AS(r31.parse("u^"), std::invalid_argument);
    CHECK_THROWS_AS(r31.parse("2u"), std::invalid_argument);
}

TEST_CASE("multiplication is the truncated 2-D convolution") {
    const Ring r32(3, 2);
    const elt u = r32.parse("u");
    const elt v = r32.parse("v");
    CHECK(r32.mul(u, u) == r32.parse("u^2"));
    CHECK(r32.mul(r32.parse("u^2"), u) == 0);          // u^3 = 0
    CHECK(r32.mul(v, v) == 0);                          // v^2 = 0
    CHECK(r32.mul(u, v) == r32.parse("uv"));
    CHECK(r32.mul(r32.parse("u+1"), r32.parse("u+1")) == r32.parse("u^2+1"));
    CHECK(r32.mul(r32.parse("uv+v+u^2+1"), 1) == 29);

    // nilpotency of the maximal ideal: (au + bv)^{k+m} = 0
    const Ring r22(2, 2);
    for (elt a = 0; a < r22.size(); ++a)
        if (!Ring::is_unit(a))
            CHECK(r22.pow(a, 4) == 0);
}

TEST_CASE("ring axioms hold on random triples") {
    for (const auto& [k, m] : {std::pair{2, 1}, {2, 2}, {3, 2}, {4, 3}, {6, 5}}) {
        const Ring ring(k, m);
        std::mt19937_64 rng(7 * k + m);
        for (int trial = 0; trial < 200; ++trial) {
            const elt a = static_cast<elt>(rng() % ring.size());
            const elt b = static_cast<elt>(rng() % ring.size());
            const elt c = static_cast<elt>(rng() % ring.size());
            CHECK(ring.mul(a, b) == ring.mul(b, a));
            CHECK(ring.mul(a, ring.mul(b, c)) == ring.mul(ring.mul(a, b), c));
            CHECK(ring.mul(a, Ring::add(b, c)) == Ring::add(ring.mul(a, b), ring.mul(a, c)));
            CHECK(ring.mul(a, 1) == a);
            CHECK(Ring::add(a, a) == 0);
        }
    }
}

TEST_CASE("units are exactly the elements with constant coefficient 1") {
    // exhaustive over every ring with k*m <= 12
    for (int k = 1; k <= 12; ++k) {
        for (int m = 1; m <= k && k * m <= 12; ++m) {
            const Ring ring(k, m);
            std::uint64_t units = 0;
            for (elt a = 0; a < ring.size(); ++a) {
                bool invertible = false;
                if (Ring::is_unit(a)) {
                    const elt inv = ring.inverse(a);
                    invertible = ring.mul(a, inv) == 1;
                } else {
                    CHECK_THROWS_AS(ring.inverse(a), std::domain_error);
                }
                CHECK(Ring::is_unit(a) == invertible);
                if (invertible) ++units;
            }
            CHECK(units == ring.unit_count());
            CHECK(units == ring.size() / 2);
        }
    }
}

TEST_CASE("checked() validates external integers") {
    const Ring r31(3, 1);
    CHECK(r31.checked(7) == 7);
    CHECK_THROWS_AS(r31.checked(8), std::out_of_range);
}
