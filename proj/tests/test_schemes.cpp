#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ifccr/schemes.hpp"

using namespace ifccr;
using gf2::BitMatrix;
using gf2::BitVector;

TEST_CASE("empty scheme is trivially decodable") {
    auto p = new_params(2, 1, 1, 2, 2, 2);
    auto rep = decode_check(p, empty_scheme(p));
    CHECK(rep.both_ok());
    CHECK(rep.k1 == 0);
    CHECK(rep.k2 == 0);
}

TEST_CASE("dimension mismatches are rejected") {
    auto p = new_params(2, 1, 1, 2, 2, 2);
    auto s = empty_scheme(new_params(3, 1, 1, 2, 2, 2));
    CHECK_THROWS_AS(decode_check(p, s), std::invalid_argument);
    auto ok = empty_scheme(p);
    CHECK_THROWS_AS(encode(p, ok, BitVector(1), BitVector(0)), std::invalid_argument);
}

TEST_CASE("pre-cancellation scheme hits the rectangle corner") {
    auto p = new_params(5, 1, 1, 5, 3, 3);
    auto s = example1_scheme(p);
    CHECK(s.k1 == 5);
    CHECK(s.k2 == 5);
    auto rep = decode_check(p, s);
    CHECK(rep.both_ok());
    auto brute = brute_force_decode_check(p, s);
    CHECK(brute.rx1_ok);
    CHECK(brute.rx2_ok);
}

TEST_CASE("pre-cancellation regime guards") {
    CHECK_THROWS_WITH_AS(example1_scheme(new_params(3, 0, 0, 5, 4, 3)),
                         "regime (7) violated: need n11 > n1c > n12", regime_error);
    CHECK_THROWS_WITH_AS(example1_scheme(new_params(4, 0, 0, 2, 3, 6)),
                         "regime (7) violated: need n22 > n2c > n21", regime_error);
}

TEST_CASE("pre-cancellation works across the regime for gains <= 4") {
    for (int n11 = 0; n11 <= 4; ++n11)
    for (int n12 = 0; n12 <= 4; ++n12)
    for (int n21 = 0; n21 <= 4; ++n21)
    for (int n22 = 0; n22 <= 4; ++n22)
    for (int n1c = 0; n1c <= 4; ++n1c)
    for (int n2c = 0; n2c <= 4; ++n2c) {
        if (!(n11 > n1c && n1c > n12 && n22 > n2c && n2c > n21)) continue;
        auto p = new_params(n11, n12, n21, n22, n1c, n2c);
        CAPTURE(n11); CAPTURE(n12); CAPTURE(n21); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        auto s = example1_scheme(p);
        REQUIRE(s.k1 == n11);
        REQUIRE(s.k2 == n22);
        REQUIRE(decode_check(p, s).both_ok());
    }
}

TEST_CASE("no-interference corner schemes: pentagon channel") {
    auto p = new_params(4, 0, 0, 2, 3, 6);
    auto one = example2_scheme(p, Corner::one);
    CHECK(one.k1 == 4);
    CHECK(one.k2 == 3);
    auto two = example2_scheme(p, Corner::two);
    CHECK(two.k1 == 1);
    CHECK(two.k2 == 6);
    CHECK(decode_check(p, one).both_ok());
    CHECK(decode_check(p, two).both_ok());
    CHECK(brute_force_decode_check(p, two).both_ok());
}

TEST_CASE("no-interference corner schemes: silent relay and broadcast cases") {
    auto weak = new_params(3, 0, 0, 2, 1, 1);
    auto s = example2_scheme(weak, Corner::one);
    CHECK(s.k1 == 3);
    CHECK(s.k2 == 2);
    CHECK(example2_scheme(weak, Corner::two).k1 == 3);  // rectangle: corners coincide

    auto bc = new_params(0, 0, 0, 0, 2, 2);
    auto b1 = example2_scheme(bc, Corner::one);
    CHECK(b1.k1 == 2);
    CHECK(b1.k2 == 0);
    auto b2 = example2_scheme(bc, Corner::two);
    CHECK(b2.k1 == 0);
    CHECK(b2.k2 == 2);

    CHECK_THROWS_AS(example2_scheme(new_params(2, 1, 0, 2, 1, 1), Corner::one), regime_error);
}

TEST_CASE("no-interference corners hit both region corners for gains <= 4") {
    for (int n11 = 0; n11 <= 4; ++n11)
    for (int n22 = 0; n22 <= 4; ++n22)
    for (int n1c = 0; n1c <= 4; ++n1c)
    for (int n2c = 0; n2c <= 4; ++n2c) {
        auto p = new_params(n11, 0, 0, n22, n1c, n2c);
        CAPTURE(n11); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        // the constructor itself asserts decodability and corner membership
        REQUIRE_NOTHROW(example2_scheme(p, Corner::one));
        REQUIRE_NOTHROW(example2_scheme(p, Corner::two));
    }
}

TEST_CASE("rank checker agrees with the brute-force decoder on random schemes") {
    std::mt19937_64 gen(7);
    auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (gen() & 1) m.set(r, c, true);
        return m;
    };
    for (int trial = 0; trial < 500; ++trial) {
        auto p = new_params(static_cast<int>(gen() % 4), static_cast<int>(gen() % 4),
                            static_cast<int>(gen() % 4), static_cast<int>(gen() % 4),
                            static_cast<int>(gen() % 4), static_cast<int>(gen() % 4));
        auto m = static_cast<std::size_t>(p.m);
        LinearScheme s;
        s.k1 = static_cast<int>(gen() % 3);
        s.k2 = static_cast<int>(gen() % 3);
        s.A1 = random_matrix(m, static_cast<std::size_t>(s.k1));
        s.Ac1 = random_matrix(m, static_cast<std::size_t>(s.k1));
        s.A2 = random_matrix(m, static_cast<std::size_t>(s.k2));
        s.Ac2 = random_matrix(m, static_cast<std::size_t>(s.k2));
        auto fast = decode_check(p, s);
        auto slow = brute_force_decode_check(p, s);
        CAPTURE(trial);
        REQUIRE(fast.rx1_ok == slow.rx1_ok);
        REQUIRE(fast.rx2_ok == slow.rx2_ok);
    }
}

TEST_CASE("brute force refuses oversized schemes") {
    auto p = new_params(5, 1, 1, 5, 3, 3);
    auto s = example1_scheme(p);
    CHECK_THROWS_AS(brute_force_decode_check(p, s, 8), std::invalid_argument);
}

TEST_CASE("simulation of a decodable scheme never errs and is reproducible") {
    auto p = new_params(5, 1, 1, 5, 3, 3);
    auto s = example1_scheme(p);
    auto rep = simulate_scheme(p, s, 1000, 42);
    CHECK(rep.trials == 1000);
    CHECK(rep.errors == 0);
    CHECK(rep.seed == 42);
    CHECK_FALSE(rep.collision.has_value());
    auto again = simulate_scheme(p, s, 1000, 42);
    CHECK(again.trials == rep.trials);
    CHECK(again.errors == rep.errors);
}

TEST_CASE("simulation reports a collision for an undecodable scheme") {
    auto p = new_params(1, 0, 0, 1, 1, 1);
    LinearScheme s;  // k1 = 1 but user 1 never transmits
    s.k1 = 1;
    s.k2 = 0;
    s.A1 = BitMatrix(1, 1);
    s.Ac1 = BitMatrix(1, 1);
    s.A2 = BitMatrix(1, 0);
    s.Ac2 = BitMatrix(1, 0);
    REQUIRE_FALSE(decode_check(p, s).rx1_ok);
    auto rep = simulate_scheme(p, s, 1000, 1);
    CHECK(rep.trials == 0);
    REQUIRE(rep.collision.has_value());
    CHECK(rep.collision->first != rep.collision->second);
}

TEST_CASE("encode matches the channel law composition") {
    auto p = new_params(5, 1, 1, 5, 3, 3);
    auto s = example1_scheme(p);
    auto b1 = BitVector::from_string("10110");
    auto b2 = BitVector::from_string("01011");
    auto [x1, xc, x2] = encode(p, s, b1, b2);
    CHECK(x1.size() == 5);
    CHECK(x1 == gf2::apply(s.A1, b1));
    CHECK(xc == (gf2::apply(s.Ac1, b1) ^ gf2::apply(s.Ac2, b2)));
    CHECK(x2 == gf2::apply(s.A2, b2));
}
