#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "f2uv/ring_code.hpp"

using namespace f2uv;

namespace {

RingMatrix random_code(const Ring& ring, int rows, int cols, std::mt19937_64& rng) {
    RingMatrix g(ring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            g.at(r, c) = static_cast<elt>(rng() % ring.size());
    return g;
}

} // namespace

TEST_CASE("inner products") {
    const Ring r32(3, 2);
    const elt u = r32.parse("u");
    const elt v = r32.parse("v");
    CHECK(inner_product(r32, {u, v}, {v, u}) == 0);                  // uv + vu = 2uv
    CHECK(inner_product(r32, {u, 1}, {u, 1}) == r32.parse("u^2+1"));
    CHECK(inner_product(r32, {}, {}) == 0);
}

TEST_CASE("[1 | 1] is self-dual over every ring") {
    for (const auto& [k, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const Ring ring(k, m);
        RingMatrix g(ring, 1, 2);
        g.at(0, 0) = 1;
        g.at(0, 1) = 1;
        CHECK(is_standard_form(g));
        CHECK(is_self_dual_free(g));
        CHECK(brute_force_self_dual(g));
        const Gray gray(ring);
        CHECK(check_gray_duality(gray, g));
    }
}

TEST_CASE("a non-free self-dual code") {
    // over R_{2,1}, the code {0, u} of length 1: u*u = 0 and nothing else
    // annihilates u, so C = C-perp even though C is not free
    const Ring r21(2, 1);
    RingMatrix g(r21, 1, 1);
    g.at(0, 0) = r21.parse("u");
    CHECK(brute_force_self_dual(g));
    CHECK_THROWS_AS(is_self_dual_free(g), std::invalid_argument);
    const auto words = enumerate_codewords(g);
    CHECK(words == std::vector<std::uint64_t>{0, 2});
}

TEST_CASE("|C| * |C-perp| = |R|^n") {
    std::mt19937_64 rng(5150);
    for (const auto& [k, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const Ring ring(k, m);
        const int nmax = 16 / ring.bits();
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
            const RingMatrix g = random_code(ring, 1 + static_cast<int>(rng() % 2), n, rng);
            const auto code = enumerate_codewords(g);
            const auto dual = brute_force_dual(g);
            CHECK(static_cast<std::uint64_t>(code.size()) * dual.size() ==
                  std::uint64_t{1} << (ring.bits() * n));
        }
    }
}

TEST_CASE("codeword enumeration is the row span") {
    const Ring r31(3, 1);
    std::mt19937_64 rng(31);
    const RingMatrix g = random_code(r31, 2, 3, rng);
    const auto words = enumerate_codewords(g);
    // closed under addition (packed addition is XOR) and contains the rows
    for (std::size_t i = 0; i < words.size(); i += 7)
        for (std::size_t j = 0; j < words.size(); j += 5)
            CHECK(std::binary_search(words.begin(), words.end(), words[i] ^ words[j]));
    for (int r = 0; r < g.rows; ++r)
        CHECK(std::binary_search(words.begin(), words.end(), pack_vec(r31, g.row_vec(r))));
    // scalar multiples of rows stay inside
    for (elt s = 0; s < r31.size(); ++s) {
        std::vector<elt> scaled = g.row_vec(0);
        for (auto& e : scaled) e = r31.mul(s, e);
        CHECK(std::binary_search(words.begin(), words.end(), pack_vec(r31, scaled)));
    }
}

TEST_CASE("pack/unpack round-trips") {
    const Ring r32(3, 2);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<elt> v(2);
        for (auto& e : v) e = static_cast<elt>(rng() % r32.size());
        CHECK(unpack_vec(r32, pack_vec(r32, v), 2) == v);
    }
}

TEST_CASE("Gray image size matches the code size") {
    std::mt19937_64 rng(1234);
    for (const auto& [k, m] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        const Ring ring(k, m);
        const Gray gray(ring);
        const int nmax = 14 / ring.bits();
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
            const RingMatrix g = random_code(ring, 1 + static_cast<int>(rng() % 2), n, rng);
            const auto code = enumerate_codewords(g);
            const BinaryMatrix b = gray_image_generator(gray, g);
            CHECK((std::uint64_t{1} << rank(b)) == code.size());
        }
    }
}

TEST_CASE("Gray images of duals are duals of Gray images") {
    std::mt19937_64 rng(777);
    for (const auto& [k, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const Ring ring(k, m);
        const Gray gray(ring);
        const int nmax = 16 / ring.bits();
        for (int trial = 0; trial < 5; ++trial) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
            const RingMatrix g = random_code(ring, 1 + static_cast<int>(rng() % 2), n, rng);
            CHECK(check_gray_duality(gray, g));
        }
    }
}

TEST_CASE("standard-form requirements are enforced") {
    const Ring r21(2, 1);
    RingMatrix bad(r21, 2, 3);
    CHECK_THROWS_AS(is_self_dual_free(bad), std::invalid_argument);
    RingMatrix not_identity(r21, 1, 2);
    not_identity.at(0, 0) = r21.parse("u");
    not_identity.at(0, 1) = 1;
    CHECK_FALSE(is_standard_form(not_identity));
    CHECK_THROWS_AS(is_self_dual_free(not_identity), std::invalid_argument);
}
