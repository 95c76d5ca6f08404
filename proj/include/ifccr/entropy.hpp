#pragma once

#include <string>

#include "ifccr/channel.hpp"

namespace ifccr {

/// A GF(2)-linear function of the stacked input u = (x1; xc; x2).
/// Under iid uniform inputs its image is uniform on the column space of the
/// map, so every entropy is a rank (an integer number of bits).
struct LinearObservable {
    std::string label;
    ChannelParams params;
    gf2::BitMatrix map;  // rows x 3m
};

/// Named observables: X1, X2, Xc (identity on their block), Y1, Y2 (channel
/// outputs), V12 = S^(m-n12) x2, V21 = S^(m-n21) x1, V1c = S^(m-n1c) xc,
/// V2c = S^(m-n2c) xc.
LinearObservable observable(const ChannelParams& p, const std::string& label);

/// Stacked pair (a; b), labelled "a,b".
LinearObservable joint(const LinearObservable& a, const LinearObservable& b);

int entropy(const LinearObservable& obs);
int cond_entropy(const LinearObservable& a, const LinearObservable& given);

/// min{H(a), H(b)}: the upper bound used for I-terms involving Xc-derived
/// observables, whose maximizing distribution is not enumerated.
int mi_min_bound(const LinearObservable& a, const LinearObservable& b);

/// Parse and evaluate a named term: "H(Y1)", "H(Y1|X2)", "H(Y1|Y2,X2)",
/// "I(V12;V1c)". Labels as in observable().
int eval_term(const ChannelParams& p, const std::string& term);

}  // namespace ifccr
