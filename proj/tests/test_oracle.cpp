#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ifccr/oracle.hpp"

using namespace ifccr;
using gf2::BitMatrix;

TEST_CASE("canonical encoder counts match the subspace counts") {
    // number of k-dimensional subspaces of F_2^n (Gaussian binomials)
    CHECK(canonical_encoders(2, 1).size() == 3);
    CHECK(canonical_encoders(3, 1).size() == 7);
    CHECK(canonical_encoders(3, 2).size() == 7);
    CHECK(canonical_encoders(4, 2).size() == 35);
    CHECK(canonical_encoders(2, 3).empty());  // no full column rank
    CHECK(canonical_encoders(3, 0).size() == 1);
}

TEST_CASE("canonical encoders are canonical and full rank") {
    for (const auto& m : canonical_encoders(4, 2)) {
        CHECK(gf2::rank(m) == 2);
        CHECK(gf2::stack_canonical_form(m) == m);
    }
    // all distinct
    std::set<std::vector<std::string>> seen;
    for (const auto& m : canonical_encoders(4, 2)) seen.insert(m.to_rows());
    CHECK(seen.size() == 35);
}

TEST_CASE("tiny symmetric channel achieves the full unit square") {
    auto p = new_params(1, 0, 0, 1, 1, 1);
    OracleOptions opt;
    opt.kmax = 1;
    auto res = search_linear_schemes(p, opt);
    std::vector<std::pair<int, int>> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(res.achievable == want);
    CHECK_FALSE(res.incomplete);
    CHECK(res.is_achievable(1, 1));
    CHECK_FALSE(res.is_achievable(2, 0));
    // only the Pareto point keeps a witness
    CHECK(res.witnesses.size() == 1);
    CHECK(res.witnesses.count({1, 1}) == 1);

    auto gap = compare_to_bound(res, outer_bound_closed(p));
    CHECK(gap.sound());
    CHECK(gap.not_achieved.empty());
    CHECK(gap.all_corners_achieved);
}

TEST_CASE("witnesses actually decode") {
    auto res = search_linear_schemes(new_params(2, 1, 0, 2, 1, 2));
    for (const auto& [rates, scheme] : res.witnesses) {
        CAPTURE(rates.first);
        CAPTURE(rates.second);
        auto rep = decode_check(res.params, scheme);
        REQUIRE(rep.both_ok());
        REQUIRE(rep.k1 == rates.first);
        REQUIRE(rep.k2 == rates.second);
    }
}

TEST_CASE("achievable set is downward closed") {
    auto res = search_linear_schemes(new_params(2, 1, 1, 2, 2, 2));
    std::set<std::pair<int, int>> pts(res.achievable.begin(), res.achievable.end());
    for (const auto& [k1, k2] : pts) {
        if (k1 > 0) CHECK(pts.count({k1 - 1, k2}) == 1);
        if (k2 > 0) CHECK(pts.count({k1, k2 - 1}) == 1);
    }
}

TEST_CASE("caps are enforced") {
    OracleOptions opt;
    opt.m_cap = 2;
    CHECK_THROWS_AS(search_linear_schemes(new_params(3, 0, 0, 0, 0, 0), opt),
                    std::invalid_argument);
    OracleOptions big;
    big.kmax = 10;
    CHECK_THROWS_AS(search_linear_schemes(new_params(1, 0, 0, 1, 1, 1), big),
                    std::invalid_argument);
}

TEST_CASE("exhausted budget flags the result incomplete") {
    OracleOptions opt;
    opt.budget_ms = -1;  // always already exhausted
    auto res = search_linear_schemes(new_params(2, 1, 1, 2, 2, 2), opt);
    CHECK(res.incomplete);
    CHECK(res.is_achievable(0, 0));  // the trivial point survives
}

TEST_CASE("canonicalization does not change the achievable set") {
    OracleOptions raw;
    raw.canonicalize = false;
    raw.kmax = 2;
    OracleOptions canon;
    canon.kmax = 2;
    for (auto p : {new_params(1, 0, 0, 1, 1, 1), new_params(2, 1, 0, 1, 1, 2),
                   new_params(1, 1, 1, 1, 1, 1), new_params(2, 0, 0, 2, 1, 1)}) {
        auto a = search_linear_schemes(p, canon);
        auto b = search_linear_schemes(p, raw);
        CAPTURE(p.n11);
        REQUIRE_FALSE(b.incomplete);
        REQUIRE(a.achievable == b.achievable);
        CHECK(a.stats.schemes_checked <= b.stats.schemes_checked);
    }
}

TEST_CASE("oracle is sound against the outer bound on tiny channels") {
    for (int n11 = 0; n11 <= 1; ++n11)
    for (int n12 = 0; n12 <= 1; ++n12)
    for (int n21 = 0; n21 <= 1; ++n21)
    for (int n22 = 0; n22 <= 1; ++n22)
    for (int n1c = 0; n1c <= 1; ++n1c)
    for (int n2c = 0; n2c <= 1; ++n2c) {
        auto p = new_params(n11, n12, n21, n22, n1c, n2c);
        OracleOptions opt;
        opt.kmax = 2;
        if (p.m > 0) opt.kmax = std::min(opt.kmax, p.m + std::max(n1c, n2c));
        auto res = search_linear_schemes(p, opt);
        auto gap = compare_to_bound(res, outer_bound_closed(p));
        CAPTURE(n11); CAPTURE(n12); CAPTURE(n21); CAPTURE(n22); CAPTURE(n1c); CAPTURE(n2c);
        REQUIRE(gap.sound());
    }
}
