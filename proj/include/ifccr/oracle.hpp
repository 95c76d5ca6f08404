#pragma once

#include <map>

#include "ifccr/schemes.hpp"

namespace ifccr {

struct SearchStats {
    long long schemes_checked = 0;
    long long canonical_classes = 0;  // encoder classes per user, summed over k
    long long elapsed_ms = 0;
};

struct OracleResult {
    ChannelParams params;
    std::vector<std::pair<int, int>> achievable;               // sorted
    std::map<std::pair<int, int>, LinearScheme> witnesses;     // Pareto-optimal pairs
    bool incomplete = false;
    SearchStats stats;

    bool is_achievable(int k1, int k2) const;
};

struct OracleOptions {
    int kmax = 3;
    int m_cap = 3;                 // refuse larger channels (env DETIC_CR_MAX_M via CLI)
    long long budget_ms = 60000;   // partial results are flagged incomplete
    bool canonicalize = true;      // false: raw enumeration (test-only, tiny sizes)
};

/// Exhaustive search over single-use linear schemes, complete up to
/// message-basis change: stacked encoders (A_i; Ac_i) are enumerated in
/// reduced column echelon form with full column rank. Deterministic.
OracleResult search_linear_schemes(const ChannelParams& p, const OracleOptions& opt = {});

/// All full-column-rank canonical stacked encoders of the given size, in a
/// fixed deterministic order.
std::vector<gf2::BitMatrix> canonical_encoders(int rows, int k);

struct GapReport {
    std::vector<std::pair<int, int>> achieved_inside;
    std::vector<std::pair<int, int>> not_achieved;         // integer points of the region missed
    std::vector<std::pair<int, int>> soundness_violations; // achieved outside the region
    std::vector<std::pair<int, int>> integer_corners;
    bool all_corners_achieved = false;
    bool sound() const { return soundness_violations.empty(); }
};

GapReport compare_to_bound(const OracleResult& result, const RateRegion& region);

}  // namespace ifccr
