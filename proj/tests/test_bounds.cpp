#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifccr/bounds.hpp"

using namespace ifccr;

TEST_CASE("closed-form values at a hand-computed point") {
    auto b = closed_bound_values(new_params(2, 1, 1, 2, 2, 2));
    CHECK(b.value[0] == 2);  // 5a
    CHECK(b.value[1] == 2);  // 5b
    CHECK(b.value[2] == 4);  // 5c
    CHECK(b.value[3] == 4);  // 5d
    CHECK(b.value[4] == 6);  // 5e
    CHECK(b.value[5] == 8);  // 5f
    CHECK(b.value[6] == 8);  // 5g
}

TEST_CASE("degenerate alignment branch of the sum bounds") {
    // n22 - n2c == n12 - n1c: X2 and Xc hit both receivers at the same offset
    auto p = new_params(3, 1, 0, 2, 2, 3);
    CHECK(p.n22 - p.n2c == p.n12 - p.n1c);
    auto b = closed_bound_values(p);
    CHECK(b.value[2] == std::max({3, 1, 2}) + std::max(2 - 1, 0));  // aligned form
    CHECK(b.value == rank_bound_values(p).value);
}

TEST_CASE("closed form equals rank calculus for all tuples with gains <= 2") {
    for (int n11 = 0; n11 <= 2; ++n11)
    for (int n12 = 0; n12 <= 2; ++n12)
    for (int n21 = 0; n21 <= 2; ++n21)
    for (int n22 = 0; n22 <= 2; ++n22)
    for (int n1c = 0; n1c <= 2; ++n1c)
    for (int n2c = 0; n2c <= 2; ++n2c) {
        auto p = new_params(n11, n12, n21, n22, n1c, n2c);
        CAPTURE(n11); CAPTURE(n12); CAPTURE(n21); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        REQUIRE(closed_bound_values(p).value == rank_bound_values(p).value);
    }
}

TEST_CASE("outer bound region carries the equation labels") {
    auto r = outer_bound_closed(new_params(2, 1, 1, 2, 2, 2));
    bool saw_5a = false;
    for (const auto& q : r.inequalities()) saw_5a = saw_5a || q.label == "5a";
    CHECK(saw_5a);
}

TEST_CASE("outer bound is inside the deterministic-channel region") {
    for (auto p : {new_params(2, 1, 1, 2, 2, 2), new_params(5, 1, 1, 5, 3, 3),
                   new_params(4, 0, 0, 2, 3, 6), new_params(3, 2, 1, 4, 0, 2)}) {
        CHECK(outer_bound_closed(p).is_subset_of(deterministic_thm1(p)));
    }
}

TEST_CASE("mixed regime capacity is the full rectangle") {
    auto p = new_params(5, 1, 1, 5, 3, 3);
    REQUIRE(mixed_regime_applies(p));
    auto cap = capacity_mixed_regime(p);
    REQUIRE(cap.has_value());
    auto rect = RateRegion::from_inequalities({{1, 0, 5, ""}, {0, 1, 5, ""}});
    CHECK(cap->equals(rect));
    CHECK(outer_bound_closed(p).equals(rect));
    CHECK_FALSE(capacity_mixed_regime(new_params(4, 0, 0, 2, 3, 6)).has_value());
}

TEST_CASE("no-interference capacity: pentagon example") {
    auto cap = capacity_no_interference(new_params(4, 0, 0, 2, 3, 6));
    REQUIRE(cap.has_value());
    std::vector<RatePoint> want = {{Rational(0), Rational(0)},
                                   {Rational(4), Rational(0)},
                                   {Rational(4), Rational(3)},
                                   {Rational(1), Rational(6)},
                                   {Rational(0), Rational(6)}};
    CHECK(cap->vertices() == want);
    CHECK(outer_bound_closed(new_params(4, 0, 0, 2, 3, 6)).equals(*cap));
    CHECK_FALSE(capacity_no_interference(new_params(4, 1, 0, 2, 3, 6)).has_value());
}

TEST_CASE("no-interference capacity: degenerate broadcast triangle") {
    auto cap = capacity_no_interference(new_params(0, 0, 0, 0, 2, 2));
    REQUIRE(cap.has_value());
    std::vector<RatePoint> want = {{Rational(0), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(0), Rational(2)}};
    CHECK(cap->vertices() == want);
}

TEST_CASE("no-interference capacity matches the outer bound for gains <= 3") {
    for (int n11 = 0; n11 <= 3; ++n11)
    for (int n22 = 0; n22 <= 3; ++n22)
    for (int n1c = 0; n1c <= 3; ++n1c)
    for (int n2c = 0; n2c <= 3; ++n2c) {
        auto p = new_params(n11, 0, 0, n22, n1c, n2c);
        CAPTURE(n11); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        auto cap = capacity_no_interference(p);
        REQUIRE(cap.has_value());
        REQUIRE(outer_bound_closed(p).equals(*cap));
    }
}

TEST_CASE("redundancy identities hold without cross links") {
    for (int n11 = 0; n11 <= 3; ++n11)
    for (int n22 = 0; n22 <= 3; ++n22)
    for (int n1c = 0; n1c <= 3; ++n1c)
    for (int n2c = 0; n2c <= 3; ++n2c) {
        auto rep = redundancy_identities(new_params(n11, 0, 0, n22, n1c, n2c));
        CAPTURE(n11); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        REQUIRE(rep.f_identity);
        REQUIRE(rep.g_identity);
        REQUIRE(rep.f == rep.a + rep.e);
        REQUIRE(rep.g == rep.b + rep.e);
    }
    CHECK_THROWS_AS(redundancy_identities(new_params(1, 1, 0, 1, 1, 1)), regime_error);
}

TEST_CASE("mirror symmetry of the outer bound for gains <= 2") {
    for (int n11 = 0; n11 <= 2; ++n11)
    for (int n12 = 0; n12 <= 2; ++n12)
    for (int n21 = 0; n21 <= 2; ++n21)
    for (int n22 = 0; n22 <= 2; ++n22)
    for (int n1c = 0; n1c <= 2; ++n1c)
    for (int n2c = 0; n2c <= 2; ++n2c) {
        auto p = new_params(n11, n12, n21, n22, n1c, n2c);
        CAPTURE(n11); CAPTURE(n12); CAPTURE(n21); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        REQUIRE(outer_bound_closed(p).mirrored().equals(outer_bound_closed(swap_users(p))));
    }
}

TEST_CASE("all-zero channel collapses to the origin") {
    auto r = outer_bound_closed(new_params(0, 0, 0, 0, 0, 0));
    CHECK(r.vertices() == std::vector<RatePoint>{{Rational(0), Rational(0)}});
}
