#include "ifccr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace ifccr {

namespace {

using gf2::BitMatrix;

// pivot-row combinations in lexicographic order
void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

LinearScheme split_scheme(const ChannelParams& p, const BitMatrix& B1, const BitMatrix& B2) {
    const auto m = static_cast<std::size_t>(p.m);
    LinearScheme s;
    s.k1 = static_cast<int>(B1.cols());
    s.k2 = static_cast<int>(B2.cols());
    s.A1 = BitMatrix(m, B1.cols());
    s.Ac1 = BitMatrix(m, B1.cols());
    s.A2 = BitMatrix(m, B2.cols());
    s.Ac2 = BitMatrix(m, B2.cols());
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < B1.cols(); ++c) {
            s.A1.set(r, c, B1.get(r, c));
            s.Ac1.set(r, c, B1.get(m + r, c));
        }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < B2.cols(); ++c) {
            s.A2.set(r, c, B2.get(r, c));
            s.Ac2.set(r, c, B2.get(m + r, c));
        }
    return s;
}

std::vector<BitMatrix> all_encoders_raw(int rows, int k) {
    std::vector<BitMatrix> out;
    const auto nbits = static_cast<uint64_t>(rows) * static_cast<uint64_t>(k);
    for (uint64_t v = 0; v < (uint64_t{1} << nbits); ++v) {
        BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(k));
        for (uint64_t b = 0; b < nbits; ++b)
            if ((v >> b) & 1)
                m.set(static_cast<std::size_t>(b / static_cast<uint64_t>(k)),
                      static_cast<std::size_t>(b % static_cast<uint64_t>(k)), true);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

bool OracleResult::is_achievable(int k1, int k2) const {
    return std::binary_search(achievable.begin(), achievable.end(), std::make_pair(k1, k2));
}

std::vector<BitMatrix> canonical_encoders(int rows, int k) {
    std::vector<BitMatrix> out;
    if (k == 0) {
        out.emplace_back(static_cast<std::size_t>(rows), 0);
        return out;
    }
    if (k > rows) return out;  // no full-column-rank encoder
    combinations(rows, k, [&](const std::vector<int>& pivots) {
        // free cells: (i, j) with i > pivots[j] and i not a pivot row
        std::vector<std::pair<int, int>> free_cells;
        std::set<int> pivot_set(pivots.begin(), pivots.end());
        for (int j = 0; j < k; ++j)
            for (int i = pivots[static_cast<std::size_t>(j)] + 1; i < rows; ++i)
                if (!pivot_set.count(i)) free_cells.emplace_back(i, j);
        const auto nfree = free_cells.size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << nfree); ++mask) {
            BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j)
                m.set(static_cast<std::size_t>(pivots[static_cast<std::size_t>(j)]),
                      static_cast<std::size_t>(j), true);
            for (std::size_t b = 0; b < nfree; ++b)
                if ((mask >> b) & 1)
                    m.set(static_cast<std::size_t>(free_cells[b].first),
                          static_cast<std::size_t>(free_cells[b].second), true);
            out.push_back(std::move(m));
        }
    });
    return out;
}

OracleResult search_linear_schemes(const ChannelParams& p, const OracleOptions& opt) {
    if (p.m > opt.m_cap)
        throw std::invalid_argument("oracle cap exceeded: m = " + std::to_string(p.m) + " > " +
                                    std::to_string(opt.m_cap));
    if (opt.kmax > p.m + std::max(p.n1c, p.n2c) && p.m > 0)
        throw std::invalid_argument("kmax exceeds m + max cognitive gain");

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    OracleResult res;
    res.params = p;
    std::set<std::pair<int, int>> achieved;
    achieved.insert({0, 0});
    res.witnesses[{0, 0}] = empty_scheme(p);

    const int rows = 2 * p.m;
    std::vector<std::vector<BitMatrix>> encoders(static_cast<std::size_t>(opt.kmax) + 1);
    for (int k = 0; k <= opt.kmax; ++k) {
        encoders[static_cast<std::size_t>(k)] =
            opt.canonicalize ? canonical_encoders(rows, k) : all_encoders_raw(rows, k);
        res.stats.canonical_classes += static_cast<long long>(encoders[static_cast<std::size_t>(k)].size());
    }

    for (int total = 1; total <= 2 * opt.kmax && !res.incomplete; ++total) {
        for (int k1 = std::max(0, total - opt.kmax); k1 <= std::min(total, opt.kmax); ++k1) {
            const int k2 = total - k1;
            // downward closure: both predecessors must already be achievable
            if ((k1 > 0 && !achieved.count({k1 - 1, k2})) ||
                (k2 > 0 && !achieved.count({k1, k2 - 1})))
                continue;
            bool found = false;
            for (const auto& B1 : encoders[static_cast<std::size_t>(k1)]) {
                for (const auto& B2 : encoders[static_cast<std::size_t>(k2)]) {
                    if (elapsed_ms() > opt.budget_ms) { res.incomplete = true; break; }
                    auto s = split_scheme(p, B1, B2);
                    ++res.stats.schemes_checked;
                    if (decode_check(p, s).both_ok()) {
                        achieved.insert({k1, k2});
                        res.witnesses[{k1, k2}] = s;
                        found = true;
                        break;
                    }
                }
                if (found || res.incomplete) break;
            }
            if (res.incomplete) break;
        }
    }

    res.achievable.assign(achieved.begin(), achieved.end());
    // keep witnesses only for Pareto-optimal pairs
    for (auto it = res.witnesses.begin(); it != res.witnesses.end();) {
        auto [k1, k2] = it->first;
        bool dominated = achieved.count({k1 + 1, k2}) || achieved.count({k1, k2 + 1});
        it = dominated ? res.witnesses.erase(it) : std::next(it);
    }
    res.stats.elapsed_ms = elapsed_ms();
    return res;
}

GapReport compare_to_bound(const OracleResult& result, const RateRegion& region) {
    GapReport rep;
    for (const auto& [k1, k2] : result.achievable) {
        if (region.contains({Rational(k1), Rational(k2)}))
            rep.achieved_inside.emplace_back(k1, k2);
        else
            rep.soundness_violations.emplace_back(k1, k2);
    }
    const long long r1_max = region.max_r1().num / region.max_r1().den;
    const long long r2_max = region.max_r2().num / region.max_r2().den;
    for (long long i = 0; i <= r1_max; ++i)
        for (long long j = 0; j <= r2_max; ++j)
            if (region.contains({Rational(i), Rational(j)}) &&
                !result.is_achievable(static_cast<int>(i), static_cast<int>(j)))
                rep.not_achieved.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (const auto& [x, y] : region.vertices())
        if (x.den == 1 && y.den == 1) rep.integer_corners.emplace_back(static_cast<int>(x.num), static_cast<int>(y.num));
    rep.all_corners_achieved =
        std::all_of(rep.integer_corners.begin(), rep.integer_corners.end(),
                    [&](const std::pair<int, int>& c) { return result.is_achievable(c.first, c.second); });
    return rep;
}

}  // namespace ifccr
