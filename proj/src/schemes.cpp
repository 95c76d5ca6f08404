#include "ifccr/schemes.hpp"

#include <map>
#include <random>
#include <set>

namespace ifccr {

namespace {

using gf2::BitMatrix;
using gf2::BitVector;

int pos(int x) { return std::max(x, 0); }

BitMatrix effective_map(const ChannelParams& p, int n_direct, const BitMatrix& A, int n_relay,
                        const BitMatrix& Ac) {
    auto m = static_cast<std::size_t>(p.m);
    return gf2::mat_mul(gf2::shift_matrix(m, static_cast<std::size_t>(n_direct)), A) ^
           gf2::mat_mul(gf2::shift_matrix(m, static_cast<std::size_t>(n_relay)), Ac);
}

void check_dims(const ChannelParams& p, const LinearScheme& s) {
    auto m = static_cast<std::size_t>(p.m);
    auto k1 = static_cast<std::size_t>(s.k1);
    auto k2 = static_cast<std::size_t>(s.k2);
    if (s.A1.rows() != m || s.Ac1.rows() != m || s.A2.rows() != m || s.Ac2.rows() != m ||
        s.A1.cols() != k1 || s.Ac1.cols() != k1 || s.A2.cols() != k2 || s.Ac2.cols() != k2)
        throw std::invalid_argument("scheme dimensions do not match channel params");
}

BitVector index_to_bits(uint64_t v, int len) {
    BitVector b(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        if ((v >> i) & 1) b.set(static_cast<std::size_t>(i), true);
    return b;
}

// single unit column placed at level (0-based), or a zero column
void set_unit(BitMatrix& m, std::size_t col, int level) { m.set(static_cast<std::size_t>(level), col, true); }

// user1-maxed corner scheme for n12 = n21 = 0 channels
LinearScheme greedy_user1_max(const ChannelParams& p) {
    const int m = p.m;
    const int r = pos(p.n1c - p.n11);  // user-1 bits carried by the relay top
    const int k1 = p.n11 + r;
    LinearScheme s;
    s.k1 = k1;
    s.A1 = BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k1));
    s.Ac1 = BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k1));
    for (int j = 0; j < r; ++j) set_unit(s.Ac1, static_cast<std::size_t>(j), j);
    for (int i = 0; i < p.n11; ++i) set_unit(s.A1, static_cast<std::size_t>(r + i), i);

    // user 2: relay levels invisible at RX1, then direct levels not hit by
    // the relay's user-1 bits or the relay's user-2 bits
    const int q = pos(p.n2c - p.n1c);
    std::set<int> occupied;  // RX2 levels
    for (int j = 0; j < r && j < p.n2c; ++j) occupied.insert(m - p.n2c + j);
    std::vector<int> relay2_levels;
    for (int j = 0; j < q; ++j) {
        relay2_levels.push_back(p.n1c + j);
        occupied.insert(m - p.n2c + p.n1c + j);
    }
    std::vector<int> direct2_levels;
    for (int i = 0; i < p.n22; ++i)
        if (!occupied.count(m - p.n22 + i)) direct2_levels.push_back(i);

    const int k2 = q + static_cast<int>(direct2_levels.size());
    s.k2 = k2;
    s.A2 = BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k2));
    s.Ac2 = BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k2));
    for (int j = 0; j < q; ++j) set_unit(s.Ac2, static_cast<std::size_t>(j), relay2_levels[static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < direct2_levels.size(); ++i)
        set_unit(s.A2, static_cast<std::size_t>(q) + i, direct2_levels[i]);
    return s;
}

LinearScheme swap_scheme(const LinearScheme& s) {
    return LinearScheme{s.k2, s.k1, s.A2, s.A1, s.Ac2, s.Ac1};
}

}  // namespace

LinearScheme empty_scheme(const ChannelParams& p) {
    auto m = static_cast<std::size_t>(p.m);
    return LinearScheme{0, 0, BitMatrix(m, 0), BitMatrix(m, 0), BitMatrix(m, 0), BitMatrix(m, 0)};
}

DecodabilityReport decode_check(const ChannelParams& p, const LinearScheme& s) {
    check_dims(p, s);
    auto M11 = effective_map(p, p.n11, s.A1, p.n1c, s.Ac1);
    auto M12 = effective_map(p, p.n12, s.A2, p.n1c, s.Ac2);
    auto M22 = effective_map(p, p.n22, s.A2, p.n2c, s.Ac2);
    auto M21 = effective_map(p, p.n21, s.A1, p.n2c, s.Ac1);

    DecodabilityReport rep;
    rep.k1 = s.k1;
    rep.k2 = s.k2;
    auto fill = [](const BitMatrix& sig, const BitMatrix& intf, int k, ReceiverRanks& rr) {
        rr.signal = static_cast<int>(gf2::rank(sig));
        rr.interference = static_cast<int>(gf2::rank(intf));
        rr.joint = static_cast<int>(gf2::rank(gf2::hstack(sig, intf)));
        return rr.joint == k + rr.interference;
    };
    rep.rx1_ok = fill(M11, M12, s.k1, rep.rx1);
    rep.rx2_ok = fill(M22, M21, s.k2, rep.rx2);
    return rep;
}

std::array<BitVector, 3> encode(const ChannelParams& p, const LinearScheme& s,
                                const BitVector& b1, const BitVector& b2) {
    check_dims(p, s);
    if (b1.size() != static_cast<std::size_t>(s.k1) || b2.size() != static_cast<std::size_t>(s.k2))
        throw std::invalid_argument("message lengths do not match scheme");
    auto x1 = gf2::apply(s.A1, b1);
    auto x2 = gf2::apply(s.A2, b2);
    auto xc = gf2::apply(s.Ac1, b1) ^ gf2::apply(s.Ac2, b2);
    return {x1, xc, x2};
}

DecodabilityReport brute_force_decode_check(const ChannelParams& p, const LinearScheme& s,
                                            int max_total_bits) {
    check_dims(p, s);
    if (s.k1 + s.k2 > max_total_bits)
        throw std::invalid_argument("brute force cap exceeded: k1+k2 > " +
                                    std::to_string(max_total_bits));
    DecodabilityReport rep = decode_check(p, s);  // reuse the rank fields
    bool ok1 = true, ok2 = true;
    std::map<std::string, uint64_t> seen1, seen2;
    for (uint64_t v1 = 0; v1 < (uint64_t{1} << s.k1); ++v1)
        for (uint64_t v2 = 0; v2 < (uint64_t{1} << s.k2); ++v2) {
            auto b1 = index_to_bits(v1, s.k1);
            auto b2 = index_to_bits(v2, s.k2);
            auto [x1, xc, x2] = encode(p, s, b1, b2);
            auto out = transmit(p, x1, xc, x2);
            auto y1 = out.y1.to_string();
            auto y2 = out.y2.to_string();
            auto it1 = seen1.find(y1);
            if (it1 == seen1.end()) seen1.emplace(y1, v1);
            else if (it1->second != v1) ok1 = false;
            auto it2 = seen2.find(y2);
            if (it2 == seen2.end()) seen2.emplace(y2, v2);
            else if (it2->second != v2) ok2 = false;
        }
    rep.rx1_ok = ok1;
    rep.rx2_ok = ok2;
    return rep;
}

LinearScheme example1_scheme(const ChannelParams& p) {
    if (!(p.n11 > p.n1c && p.n1c > p.n12))
        throw regime_error("regime (7) violated: need n11 > n1c > n12");
    if (!(p.n22 > p.n2c && p.n2c > p.n21))
        throw regime_error("regime (7) violated: need n22 > n2c > n21");
    // non-alignment of each receiver's signal with the relay's copy of it
    if (p.n11 == p.n21 + p.n1c - p.n2c)
        throw regime_error("relay copy aligns with the signal at receiver 1");
    if (p.n22 == p.n12 + p.n2c - p.n1c)
        throw regime_error("relay copy aligns with the signal at receiver 2");

    const auto m = static_cast<std::size_t>(p.m);
    LinearScheme s;
    s.k1 = p.n11;
    s.k2 = p.n22;
    s.A1 = BitMatrix(m, static_cast<std::size_t>(s.k1));
    s.Ac1 = BitMatrix(m, static_cast<std::size_t>(s.k1));
    s.A2 = BitMatrix(m, static_cast<std::size_t>(s.k2));
    s.Ac2 = BitMatrix(m, static_cast<std::size_t>(s.k2));
    for (int j = 0; j < s.k1; ++j) set_unit(s.A1, static_cast<std::size_t>(j), j);
    for (int j = 0; j < s.k2; ++j) set_unit(s.A2, static_cast<std::size_t>(j), j);
    // the top n21 bits of b1 land at RX2 levels m-n21..m-1; a relay copy at
    // relay levels n2c-n21..n2c-1 lands on exactly those levels and cancels
    for (int j = 0; j < std::min(p.n21, s.k1); ++j)
        set_unit(s.Ac1, static_cast<std::size_t>(j), p.n2c - p.n21 + j);
    for (int j = 0; j < std::min(p.n12, s.k2); ++j)
        set_unit(s.Ac2, static_cast<std::size_t>(j), p.n1c - p.n12 + j);
    return s;
}

LinearScheme example2_scheme(const ChannelParams& p, Corner corner) {
    if (p.n12 != 0 || p.n21 != 0)
        throw regime_error("no-interference schemes require n12 = n21 = 0");
    const bool weak_both = p.n11 >= p.n1c && p.n22 >= p.n2c;
    LinearScheme s;
    if (weak_both) {
        // silent relay, both users on their direct links
        const auto m = static_cast<std::size_t>(p.m);
        s.k1 = p.n11;
        s.k2 = p.n22;
        s.A1 = BitMatrix(m, static_cast<std::size_t>(s.k1));
        s.Ac1 = BitMatrix(m, static_cast<std::size_t>(s.k1));
        s.A2 = BitMatrix(m, static_cast<std::size_t>(s.k2));
        s.Ac2 = BitMatrix(m, static_cast<std::size_t>(s.k2));
        for (int j = 0; j < s.k1; ++j) set_unit(s.A1, static_cast<std::size_t>(j), j);
        for (int j = 0; j < s.k2; ++j) set_unit(s.A2, static_cast<std::size_t>(j), j);
    } else if (corner == Corner::one) {
        s = greedy_user1_max(p);
    } else {
        s = swap_scheme(greedy_user1_max(swap_users(p)));
    }

    auto region = capacity_no_interference(p);
    auto rep = decode_check(p, s);
    if (!rep.both_ok())
        throw std::logic_error("constructed corner scheme failed decode_check");
    Rational r1(s.k1), r2(s.k2);
    bool on_corner = false;
    for (const auto& v : region->vertices())
        if (v.first == r1 && v.second == r2) on_corner = true;
    if (!region->contains({r1, r2}))
        throw std::logic_error("constructed corner scheme exceeds the capacity region");
    if (!on_corner)
        throw std::logic_error("constructed scheme does not sit on the selected corner");
    return s;
}

SimulationReport simulate_scheme(const ChannelParams& p, const LinearScheme& s, long long trials,
                                 uint64_t seed) {
    SimulationReport rep;
    rep.seed = seed;
    auto check = decode_check(p, s);
    if (!check.both_ok()) {
        // report a colliding message pair instead of simulating
        std::map<std::string, std::pair<uint64_t, uint64_t>> seen1, seen2;
        for (uint64_t v1 = 0; v1 < (uint64_t{1} << s.k1); ++v1)
            for (uint64_t v2 = 0; v2 < (uint64_t{1} << s.k2); ++v2) {
                auto b1 = index_to_bits(v1, s.k1);
                auto b2 = index_to_bits(v2, s.k2);
                auto [x1, xc, x2] = encode(p, s, b1, b2);
                auto out = transmit(p, x1, xc, x2);
                auto pair_str = [&](std::pair<uint64_t, uint64_t> pr) {
                    return index_to_bits(pr.first, s.k1).to_string() + ":" +
                           index_to_bits(pr.second, s.k2).to_string();
                };
                auto probe = [&](std::map<std::string, std::pair<uint64_t, uint64_t>>& seen,
                                 const std::string& y, bool first_user, uint64_t own) {
                    auto it = seen.find(y);
                    if (it == seen.end()) { seen.emplace(y, std::make_pair(v1, v2)); return; }
                    uint64_t prev = first_user ? it->second.first : it->second.second;
                    if (prev != own && !rep.collision)
                        rep.collision = {pair_str(it->second), pair_str({v1, v2})};
                };
                probe(seen1, out.y1.to_string(), true, v1);
                probe(seen2, out.y2.to_string(), false, v2);
                if (rep.collision) return rep;
            }
        return rep;
    }

    auto M11 = effective_map(p, p.n11, s.A1, p.n1c, s.Ac1);
    auto M12 = effective_map(p, p.n12, s.A2, p.n1c, s.Ac2);
    auto M22 = effective_map(p, p.n22, s.A2, p.n2c, s.Ac2);
    auto M21 = effective_map(p, p.n21, s.A1, p.n2c, s.Ac1);
    auto D1 = gf2::hstack(M11, M12);  // any solution's first k1 bits are b1
    auto D2 = gf2::hstack(M22, M21);

    std::mt19937_64 gen(seed);
    auto random_bits = [&](int len) {
        BitVector b(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i)
            if (gen() & 1) b.set(static_cast<std::size_t>(i), true);
        return b;
    };
    for (long long t = 0; t < trials; ++t) {
        auto b1 = random_bits(s.k1);
        auto b2 = random_bits(s.k2);
        auto [x1, xc, x2] = encode(p, s, b1, b2);
        auto out = transmit(p, x1, xc, x2);
        BitVector z1, z2;
        bool ok = gf2::solve(D1, out.y1, z1) && gf2::solve(D2, out.y2, z2);
        bool good = ok;
        if (ok) {
            for (int i = 0; i < s.k1; ++i)
                if (z1.get(static_cast<std::size_t>(i)) != b1.get(static_cast<std::size_t>(i))) good = false;
            for (int i = 0; i < s.k2; ++i)
                if (z2.get(static_cast<std::size_t>(i)) != b2.get(static_cast<std::size_t>(i))) good = false;
        }
        if (!good) ++rep.errors;
        ++rep.trials;
    }
    return rep;
}

}  // namespace ifccr
