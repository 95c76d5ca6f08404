#include "ifccr/bounds.hpp"

#include <algorithm>

namespace ifccr {

namespace {
long long pos(long long x) { return std::max(x, 0LL); }
}

std::vector<Inequality> SevenBounds::to_inequalities() const {
    std::vector<Inequality> out;
    for (std::size_t i = 0; i < 7; ++i)
        out.push_back(Inequality{kShape[i].first, kShape[i].second, value[i], kLabel[i]});
    return out;
}

RateRegion SevenBounds::to_region() const { return RateRegion::from_inequalities(to_inequalities()); }

SevenBounds closed_bound_values(const ChannelParams& p) {
    const long long n11 = p.n11, n12 = p.n12, n21 = p.n21, n22 = p.n22, n1c = p.n1c, n2c = p.n2c;
    SevenBounds b{};
    b.value[0] = std::max(n11, n1c);
    b.value[1] = std::max(n22, n2c);
    // sum bound from H(Y1) + H(Y2|Y1,X1); degenerate when X2 and Xc align
    // identically at both receivers
    if (n22 - n2c != n12 - n1c)
        b.value[2] = pos(n11 - std::max(n12, n1c)) + std::max(n22 + n1c, n2c + n12);
    else
        b.value[2] = std::max({n11, n12, n1c}) + pos(n22 - n12);
    // sum bound from H(Y2) + H(Y1|Y2,X2); degenerate when X1 and Xc align
    if (n11 - n1c != n21 - n2c)
        b.value[3] = pos(n22 - std::max(n21, n2c)) + std::max(n11 + n2c, n1c + n21);
    else
        b.value[3] = std::max({n22, n21, n2c}) + pos(n11 - n21);
    const long long h1_v21 = std::max({n11 - n21, n12, n1c});
    const long long h2_v12 = std::max({n22 - n12, n21, n2c});
    const long long mi1 = std::min(n1c, n12);
    const long long mi2 = std::min(n2c, n21);
    b.value[4] = h1_v21 + mi1 + h2_v12 + mi2;
    b.value[5] = std::max({n11, n12, n1c}) + h1_v21 + mi1 + h2_v12 + mi2;
    b.value[6] = std::max({n22, n21, n2c}) + h1_v21 + mi1 + h2_v12 + mi2;
    return b;
}

SevenBounds rank_bound_values(const ChannelParams& p) {
    auto Y1 = observable(p, "Y1");
    auto Y2 = observable(p, "Y2");
    auto X1 = observable(p, "X1");
    auto X2 = observable(p, "X2");
    auto V12 = observable(p, "V12");
    auto V21 = observable(p, "V21");
    auto V1c = observable(p, "V1c");
    auto V2c = observable(p, "V2c");

    SevenBounds b{};
    b.value[0] = cond_entropy(Y1, X2);
    b.value[1] = cond_entropy(Y2, X1);
    b.value[2] = entropy(Y1) + cond_entropy(Y2, joint(Y1, X1));
    b.value[3] = entropy(Y2) + cond_entropy(Y1, joint(Y2, X2));
    const int mi1 = mi_min_bound(V12, V1c);
    const int mi2 = mi_min_bound(V21, V2c);
    const int h1 = cond_entropy(Y1, V21);
    const int h2 = cond_entropy(Y2, V12);
    b.value[4] = mi2 + h1 + mi1 + h2;
    b.value[5] = entropy(Y1) + h1 + h2 + mi1 + mi2;
    b.value[6] = entropy(Y2) + h1 + h2 + mi1 + mi2;
    return b;
}

RateRegion outer_bound_closed(const ChannelParams& p) { return closed_bound_values(p).to_region(); }
RateRegion outer_bound_rank(const ChannelParams& p) { return rank_bound_values(p).to_region(); }

RateRegion deterministic_thm1(const ChannelParams& p) {
    auto Y1 = observable(p, "Y1");
    auto Y2 = observable(p, "Y2");
    auto X1 = observable(p, "X1");
    auto X2 = observable(p, "X2");
    std::vector<Inequality> q;
    q.push_back({1, 0, cond_entropy(Y1, X2), "6a"});
    q.push_back({0, 1, cond_entropy(Y2, X1), "6b"});
    q.push_back({1, 1, static_cast<long long>(entropy(Y2)) + cond_entropy(Y1, joint(Y2, X2)), "6c"});
    q.push_back({1, 1, static_cast<long long>(entropy(Y1)) + cond_entropy(Y2, joint(Y1, X1)), "6d"});
    return RateRegion::from_inequalities(std::move(q));
}

bool mixed_regime_applies(const ChannelParams& p) {
    return p.n11 > p.n1c && p.n1c > p.n12 && p.n22 > p.n2c && p.n2c > p.n21;
}

std::optional<RateRegion> capacity_mixed_regime(const ChannelParams& p) {
    if (!mixed_regime_applies(p)) return std::nullopt;
    return RateRegion::from_inequalities({{1, 0, p.n11, "7-R1"}, {0, 1, p.n22, "7-R2"}});
}

std::optional<RateRegion> capacity_no_interference(const ChannelParams& p) {
    if (p.n12 != 0 || p.n21 != 0) return std::nullopt;
    const long long n11 = p.n11, n22 = p.n22, n1c = p.n1c, n2c = p.n2c;
    if (n11 == n1c - n2c && n22 == n2c - n1c) {
        // degenerate broadcast: n1c = n2c = nc, n11 = n22 = 0, Y1 = Y2
        const long long nc = n1c;
        return RateRegion::from_inequalities(
            {{1, 0, nc, "10a"}, {0, 1, nc, "10b"}, {1, 1, nc, "10c"}});
    }
    std::vector<Inequality> q;
    q.push_back({1, 0, std::max(n11, n1c), "9a"});
    q.push_back({0, 1, std::max(n22, n2c), "9b"});
    if (n22 != n2c - n1c)
        q.push_back({1, 1, pos(n11 - n1c) + std::max(n22 + n1c, n2c), "9c"});
    else
        q.push_back({1, 1, std::max(n11, n1c) + n22, "9c"});
    if (n11 != n1c - n2c)
        q.push_back({1, 1, pos(n22 - n2c) + std::max(n11 + n2c, n1c), "9d"});
    else
        q.push_back({1, 1, std::max(n22, n2c) + n11, "9d"});
    return RateRegion::from_inequalities(std::move(q));
}

RedundancyReport redundancy_identities(const ChannelParams& p) {
    if (p.n12 != 0 || p.n21 != 0)
        throw regime_error("redundancy identities require n12 = n21 = 0");
    auto b = closed_bound_values(p);
    RedundancyReport r{};
    r.a = b.value[0];
    r.b = b.value[1];
    r.c = b.value[2];
    r.d = b.value[3];
    r.e = b.value[4];
    r.f = b.value[5];
    r.g = b.value[6];
    r.f_identity = (r.f == r.a + r.e);
    r.g_identity = (r.g == r.b + r.e);
    return r;
}

}  // namespace ifccr
