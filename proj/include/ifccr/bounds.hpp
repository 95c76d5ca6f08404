#pragma once

#include <array>
#include <optional>

#include "ifccr/entropy.hpp"
#include "ifccr/region.hpp"

namespace ifccr {

struct regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The seven bound values in fixed shape order:
/// R1, R2, R1+R2 (c), R1+R2 (d), R1+R2 (e), 2R1+R2 (f), R1+2R2 (g).
struct SevenBounds {
    std::array<long long, 7> value;

    static constexpr std::array<const char*, 7> kLabel = {"5a", "5b", "5c", "5d",
                                                          "5e", "5f", "5g"};
    static constexpr std::array<std::pair<int, int>, 7> kShape = {
        std::pair{1, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}, {1, 2}};

    std::vector<Inequality> to_inequalities() const;
    RateRegion to_region() const;
    bool operator==(const SevenBounds&) const = default;
};

/// Closed-form outer bound values. The sum-rate pair uses the pairing the
/// derivation actually produces (the one that matches the conditional-entropy
/// evaluation term for term); the published display transposes the indicator
/// conditions between the two bounds.
SevenBounds closed_bound_values(const ChannelParams& p);

/// Same seven shapes evaluated independently by rank calculus on the
/// observables (entropies are ranks under iid uniform inputs; mutual
/// informations use the min-of-entropies bound).
SevenBounds rank_bound_values(const ChannelParams& p);

RateRegion outer_bound_closed(const ChannelParams& p);
RateRegion outer_bound_rank(const ChannelParams& p);

/// Four-inequality deterministic region: R1 <= H(Y1|X2), R2 <= H(Y2|X1),
/// R1+R2 <= H(Y2)+H(Y1|Y2,X2), R1+R2 <= H(Y1)+H(Y2|Y1,X1).
RateRegion deterministic_thm1(const ChannelParams& p);

/// Strong signal, mixed cognition, weak interference at both decoders
/// (n11 > n1c > n12 and n22 > n2c > n21): capacity is the rectangle
/// [0,n11] x [0,n22]. Empty when the regime does not hold.
std::optional<RateRegion> capacity_mixed_regime(const ChannelParams& p);

bool mixed_regime_applies(const ChannelParams& p);

/// Capacity without interfering links (n12 = n21 = 0), including the
/// degenerate broadcast case (n1c = n2c, n11 = n22 = 0 -> triangle) and the
/// aligned cases. Empty when n12 or n21 is nonzero.
std::optional<RateRegion> capacity_no_interference(const ChannelParams& p);

/// The eight bound values of the no-interference reduction plus the two
/// redundancy identities that let the 2R1+R2 / R1+2R2 bounds be dropped.
struct RedundancyReport {
    long long a, b, c, d, e, f, g;  // bound values (8a)-(8g), c/d consistent pairing
    bool f_identity;                // f == a + e
    bool g_identity;                // g == b + e
};

RedundancyReport redundancy_identities(const ChannelParams& p);

}  // namespace ifccr
