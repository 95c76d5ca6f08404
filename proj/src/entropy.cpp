#include "ifccr/entropy.hpp"

#include <sstream>

namespace ifccr {

namespace {

using gf2::BitMatrix;

// place S^(m-n) into the given input block of a rows x 3m matrix
BitMatrix block_shift(int m, int n, int block) {
    BitMatrix out(m, 3 * static_cast<std::size_t>(m));
    for (int i = m - n; i < m; ++i)
        out.set(i, static_cast<std::size_t>(block * m + i - (m - n)), true);
    return out;
}

void require_same_params(const LinearObservable& a, const LinearObservable& b) {
    if (!(a.params == b.params))
        throw std::invalid_argument("observables built from different channel params");
}

}  // namespace

LinearObservable observable(const ChannelParams& p, const std::string& label) {
    const int m = p.m;
    auto mk = [&](BitMatrix map) { return LinearObservable{label, p, std::move(map)}; };
    if (label == "X1") return mk(block_shift(m, m, 0));
    if (label == "Xc") return mk(block_shift(m, m, 1));
    if (label == "X2") return mk(block_shift(m, m, 2));
    if (label == "V21") return mk(block_shift(m, p.n21, 0));
    if (label == "V12") return mk(block_shift(m, p.n12, 2));
    if (label == "V1c") return mk(block_shift(m, p.n1c, 1));
    if (label == "V2c") return mk(block_shift(m, p.n2c, 1));
    if (label == "Y1")
        return mk(block_shift(m, p.n11, 0) ^ block_shift(m, p.n1c, 1) ^ block_shift(m, p.n12, 2));
    if (label == "Y2")
        return mk(block_shift(m, p.n21, 0) ^ block_shift(m, p.n2c, 1) ^ block_shift(m, p.n22, 2));
    throw std::invalid_argument("unknown observable label: " + label);
}

LinearObservable joint(const LinearObservable& a, const LinearObservable& b) {
    require_same_params(a, b);
    return LinearObservable{a.label + "," + b.label, a.params, gf2::vstack(a.map, b.map)};
}

int entropy(const LinearObservable& obs) { return static_cast<int>(gf2::rank(obs.map)); }

int cond_entropy(const LinearObservable& a, const LinearObservable& given) {
    require_same_params(a, given);
    return static_cast<int>(gf2::rank(gf2::vstack(a.map, given.map)) - gf2::rank(given.map));
}

int mi_min_bound(const LinearObservable& a, const LinearObservable& b) {
    require_same_params(a, b);
    return std::min(entropy(a), entropy(b));
}

int eval_term(const ChannelParams& p, const std::string& term) {
    auto fail = [&]() -> int { throw std::invalid_argument("cannot parse term: " + term); };
    if (term.size() < 4 || term.back() != ')') return fail();
    auto open = term.find('(');
    if (open == std::string::npos) return fail();
    std::string head = term.substr(0, open);
    std::string body = term.substr(open + 1, term.size() - open - 2);

    auto parse_joint = [&](const std::string& labels) {
        std::stringstream ss(labels);
        std::string one;
        LinearObservable acc;
        bool first = true;
        while (std::getline(ss, one, ',')) {
            auto o = observable(p, one);
            acc = first ? o : joint(acc, o);
            first = false;
        }
        if (first) fail();
        return acc;
    };

    if (head == "H") {
        auto bar = body.find('|');
        if (bar == std::string::npos) return entropy(parse_joint(body));
        return cond_entropy(parse_joint(body.substr(0, bar)), parse_joint(body.substr(bar + 1)));
    }
    if (head == "I") {
        auto semi = body.find(';');
        if (semi == std::string::npos) return fail();
        return mi_min_bound(parse_joint(body.substr(0, semi)), parse_joint(body.substr(semi + 1)));
    }
    return fail();
}

}  // namespace ifccr
