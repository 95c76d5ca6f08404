#pragma once

#include <cstdint>
#include <optional>

#include "ifccr/bounds.hpp"

namespace ifccr {

/// Single-channel-use linear code: x1 = A1*b1, x2 = A2*b2,
/// xc = Ac1*b1 + Ac2*b2, with message lengths k1, k2.
struct LinearScheme {
    int k1 = 0, k2 = 0;
    gf2::BitMatrix A1, A2, Ac1, Ac2;  // m x k1 / m x k2

    bool operator==(const LinearScheme&) const = default;
};

LinearScheme empty_scheme(const ChannelParams& p);

struct ReceiverRanks {
    int signal;    // rank of the receiver's own-message map
    int interference;
    int joint;
};

struct DecodabilityReport {
    bool rx1_ok = false, rx2_ok = false;
    int k1 = 0, k2 = 0;
    ReceiverRanks rx1{}, rx2{};
    bool both_ok() const { return rx1_ok && rx2_ok; }
};

/// Effective per-receiver maps: M11 = S^(m-n11)A1 + S^(m-n1c)Ac1 etc.
/// Receiver i decodes for every interfering message iff
/// rank([signal | interference]) = k_i + rank(interference).
DecodabilityReport decode_check(const ChannelParams& p, const LinearScheme& s);

/// Independent oracle: enumerate all 2^(k1+k2) message pairs; a receiver is
/// decodable iff no two pairs with different own-message collide in its output.
DecodabilityReport brute_force_decode_check(const ChannelParams& p, const LinearScheme& s,
                                            int max_total_bits = 12);

/// Pre-cancellation scheme for the strong signal / mixed cognition / weak
/// interference regime (n11 > n1c > n12, n22 > n2c > n21): achieves
/// (n11, n22). The relay superposes a copy of each receiver's incoming
/// interference at exactly the levels where it lands.
LinearScheme example1_scheme(const ChannelParams& p);

/// Corner selector for the no-interference schemes: corner 1 maximizes R1
/// first, corner 2 maximizes R2 first.
enum class Corner { one = 1, two = 2 };

/// Corner-point schemes for n12 = n21 = 0, covering the silent-relay,
/// strong-cognition, mixed-cognition, degenerate broadcast and aligned cases.
/// The returned scheme passes decode_check and its rate pair equals the
/// selected corner of capacity_no_interference(p).
LinearScheme example2_scheme(const ChannelParams& p, Corner corner);

struct SimulationReport {
    long long trials = 0;
    long long errors = 0;
    uint64_t seed = 0;
    // set when the scheme is not decodable: a colliding message pair
    std::optional<std::pair<std::string, std::string>> collision;
};

/// Monte Carlo over random messages: encode, transmit, linearly decode,
/// compare. Zero errors for decodable schemes; deterministic given seed.
SimulationReport simulate_scheme(const ChannelParams& p, const LinearScheme& s,
                                 long long trials, uint64_t seed);

/// Encode a message pair and return the channel inputs (x1, xc, x2).
std::array<gf2::BitVector, 3> encode(const ChannelParams& p, const LinearScheme& s,
                                     const gf2::BitVector& b1, const gf2::BitVector& b2);

}  // namespace ifccr
