#include "ifccr/channel.hpp"

#include <algorithm>

namespace ifccr {

ChannelParams new_params(int n11, int n12, int n21, int n22, int n1c, int n2c) {
    for (int g : {n11, n12, n21, n22, n1c, n2c})
        if (g < 0) throw std::invalid_argument("channel gains must be non-negative");
    int m = std::max({n11, n12, n21, n22, n1c, n2c});
    return ChannelParams{n11, n12, n21, n22, n1c, n2c, m};
}

ChannelOutput transmit(const ChannelParams& p, const gf2::BitVector& x1,
                       const gf2::BitVector& xc, const gf2::BitVector& x2) {
    auto m = static_cast<std::size_t>(p.m);
    if (x1.size() != m || xc.size() != m || x2.size() != m)
        throw std::invalid_argument("transmit: inputs must have length m");
    using gf2::apply;
    using gf2::shift_matrix;
    auto y1 = apply(shift_matrix(m, p.n11), x1) ^ apply(shift_matrix(m, p.n1c), xc) ^
              apply(shift_matrix(m, p.n12), x2);
    auto y2 = apply(shift_matrix(m, p.n21), x1) ^ apply(shift_matrix(m, p.n2c), xc) ^
              apply(shift_matrix(m, p.n22), x2);
    return ChannelOutput{y1, y2};
}

ChannelParams swap_users(const ChannelParams& p) {
    return new_params(p.n22, p.n21, p.n12, p.n11, p.n2c, p.n1c);
}

}  // namespace ifccr
