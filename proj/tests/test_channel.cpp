#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifccr/channel.hpp"

using namespace ifccr;
using gf2::BitVector;

TEST_CASE("params carry the max gain") {
    auto p = new_params(2, 1, 1, 2, 2, 2);
    CHECK(p.m == 2);
    CHECK(new_params(0, 0, 0, 0, 0, 0).m == 0);
    CHECK(new_params(1, 0, 0, 0, 0, 7).m == 7);
    CHECK_THROWS_AS(new_params(-1, 0, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("channel law") {
    auto p = new_params(2, 1, 1, 2, 2, 2);
    auto out = transmit(p, BitVector::from_string("10"), BitVector::from_string("01"),
                        BitVector::from_string("11"));
    // y1 = x1 + xc + S^1 x2, y2 = S^1 x1 + xc + x2
    CHECK(out.y1.to_string() == "10");
    CHECK(out.y2.to_string() == "11");
}

TEST_CASE("inputs must have length m exactly") {
    auto p = new_params(2, 1, 1, 2, 2, 2);
    auto ok = BitVector::from_string("00");
    CHECK_THROWS_AS(transmit(p, BitVector::from_string("0"), ok, ok), std::invalid_argument);
    CHECK_THROWS_AS(transmit(p, ok, BitVector::from_string("000"), ok), std::invalid_argument);
}

TEST_CASE("swap_users is the mirror involution") {
    auto p = new_params(5, 1, 2, 4, 3, 0);
    auto q = swap_users(p);
    CHECK(q.n11 == 4);
    CHECK(q.n12 == 2);
    CHECK(q.n21 == 1);
    CHECK(q.n22 == 5);
    CHECK(q.n1c == 0);
    CHECK(q.n2c == 3);
    CHECK(swap_users(q) == p);
}

TEST_CASE("mirror symmetry of the channel law") {
    auto p = new_params(3, 1, 2, 2, 1, 3);
    auto q = swap_users(p);
    auto x1 = BitVector::from_string("101");
    auto xc = BitVector::from_string("011");
    auto x2 = BitVector::from_string("110");
    auto out = transmit(p, x1, xc, x2);
    auto mirrored = transmit(q, x2, xc, x1);
    CHECK(out.y1 == mirrored.y2);
    CHECK(out.y2 == mirrored.y1);
}

TEST_CASE("degenerate zero channel") {
    auto p = new_params(0, 0, 0, 0, 0, 0);
    auto z = BitVector(0);
    auto out = transmit(p, z, z, z);
    CHECK(out.y1.size() == 0);
    CHECK(out.y2.size() == 0);
}
