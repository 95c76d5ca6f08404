#pragma once

#include "ifccr/gf2.hpp"

namespace ifccr {

/// The six bit-level channel gains, parameter order n11,n12,n21,n22,n1c,n2c
/// everywhere (CLI, files, API).
struct ChannelParams {
    int n11, n12, n21, n22, n1c, n2c;
    int m;  // max of the six gains

    bool operator==(const ChannelParams&) const = default;
};

struct ChannelOutput {
    gf2::BitVector y1, y2;
};

ChannelParams new_params(int n11, int n12, int n21, int n22, int n1c, int n2c);

/// Y_u = S^(m-nu1) x1 + S^(m-nuc) xc + S^(m-nu2) x2 over GF(2).
/// Inputs must have length exactly m; shorter vectors are rejected, padding
/// is the caller's job.
ChannelOutput transmit(const ChannelParams& p, const gf2::BitVector& x1,
                       const gf2::BitVector& xc, const gf2::BitVector& x2);

/// Switch the role of the users: (n22, n21, n12, n11, n2c, n1c). Involution.
ChannelParams swap_users(const ChannelParams& p);

}  // namespace ifccr
