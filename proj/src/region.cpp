#include "ifccr/region.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace ifccr {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
Rational Rational::operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

namespace {

bool satisfies(const std::vector<Inequality>& ineqs, const RatePoint& pt) {
    if (pt.first < Rational(0) || pt.second < Rational(0)) return false;
    for (const auto& q : ineqs) {
        Rational lhs = pt.first * Rational(q.a) + pt.second * Rational(q.b);
        if (!(lhs <= Rational(q.c))) return false;
    }
    return true;
}

std::vector<RatePoint> enumerate_vertices(const std::vector<Inequality>& ineqs) {
    // all lines: the inequalities as equalities plus the two axes
    struct Line { long long a, b, c; };
    std::vector<Line> lines;
    for (const auto& q : ineqs) lines.push_back({q.a, q.b, q.c});
    lines.push_back({1, 0, 0});
    lines.push_back({0, 1, 0});

    std::set<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>> seen;
    std::vector<RatePoint> pts;
    auto add = [&](const RatePoint& pt) {
        if (!satisfies(ineqs, pt)) return;
        auto key = std::make_pair(std::make_pair(pt.first.num, pt.first.den),
                                  std::make_pair(pt.second.num, pt.second.den));
        if (seen.insert(key).second) pts.push_back(pt);
    };
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            long long det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (det == 0) continue;
            Rational x(lines[i].c * lines[j].b - lines[j].c * lines[i].b, det);
            Rational y(lines[i].a * lines[j].c - lines[j].a * lines[i].c, det);
            add({x, y});
        }
    add({Rational(0), Rational(0)});
    return pts;
}

// convex hull, CCW, rotated to start at (0,0)
std::vector<RatePoint> hull_ccw(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatePoint& p, const RatePoint& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.second < q.second;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const RatePoint& o, const RatePoint& a, const RatePoint& b) {
        Rational v = (a.first - o.first) * (b.second - o.second) -
                     (a.second - o.second) * (b.first - o.first);
        return v.num;  // sign only
    };
    std::vector<RatePoint> lo, hi;
    for (const auto& pt : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), pt) <= 0) lo.pop_back();
        lo.push_back(pt);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    RatePoint zero{Rational(0), Rational(0)};
    auto z = std::find(lo.begin(), lo.end(), zero);
    assert(z != lo.end());
    std::rotate(lo.begin(), z, lo.end());
    return lo;
}

}  // namespace

RateRegion RateRegion::from_inequalities(std::vector<Inequality> ineqs) {
    for (auto& q : ineqs) {
        if (q.a < 0 || q.a > 2 || q.b < 0 || q.b > 2 || (q.a == 0 && q.b == 0))
            throw region_error("inequality coefficients must be in {0,1,2}, (a,b) != (0,0)");
        if (q.c < 0) throw region_error("inequality bound must be non-negative");
        long long g = std::gcd(std::gcd(static_cast<long long>(q.a), static_cast<long long>(q.b)), q.c);
        if (g > 1) { q.a = static_cast<int>(q.a / g); q.b = static_cast<int>(q.b / g); q.c /= g; }
    }
    bool has_r1 = std::any_of(ineqs.begin(), ineqs.end(), [](const Inequality& q) { return q.b == 0; });
    bool has_r2 = std::any_of(ineqs.begin(), ineqs.end(), [](const Inequality& q) { return q.a == 0; });
    if (!has_r1 || !has_r2) throw region_error("region must be bounded by R1 and R2 inequalities");

    // same (a,b): only the smallest c can bind
    std::sort(ineqs.begin(), ineqs.end(), [](const Inequality& p, const Inequality& q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        return p.c < q.c;
    });
    std::vector<Inequality> dedup;
    for (const auto& q : ineqs)
        if (dedup.empty() || dedup.back().a != q.a || dedup.back().b != q.b) dedup.push_back(q);

    // drop dominated inequalities: redundant iff removal leaves all candidate
    // vertices of the remaining system feasible for it anyway
    std::vector<Inequality> minimal = dedup;
    for (std::size_t i = 0; i < minimal.size();) {
        std::vector<Inequality> rest;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) rest.push_back(minimal[j]);
        bool bounded = std::any_of(rest.begin(), rest.end(), [](const Inequality& q) { return q.b == 0; }) &&
                       std::any_of(rest.begin(), rest.end(), [](const Inequality& q) { return q.a == 0; });
        bool redundant = false;
        if (bounded) {
            auto verts = enumerate_vertices(rest);
            redundant = std::all_of(verts.begin(), verts.end(), [&](const RatePoint& pt) {
                return pt.first * Rational(minimal[i].a) + pt.second * Rational(minimal[i].b) <=
                       Rational(minimal[i].c);
            });
        }
        if (redundant) minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
        else ++i;
    }

    RateRegion r;
    r.ineqs_ = std::move(minimal);
    r.verts_ = hull_ccw(enumerate_vertices(r.ineqs_));
    for (const auto& [x, y] : r.verts_) {
        assert(x.den >= 1 && x.den <= 3 && y.den >= 1 && y.den <= 3);
        (void)x; (void)y;
    }
    return r;
}

bool RateRegion::contains(const RatePoint& pt) const { return satisfies(ineqs_, pt); }

bool RateRegion::is_subset_of(const RateRegion& o) const {
    return std::all_of(verts_.begin(), verts_.end(),
                       [&](const RatePoint& v) { return o.contains(v); });
}

RateRegion RateRegion::mirrored() const {
    std::vector<Inequality> flipped;
    for (const auto& q : ineqs_) flipped.push_back({q.b, q.a, q.c, q.label});
    return from_inequalities(std::move(flipped));
}

Rational RateRegion::max_r1() const {
    Rational best(0);
    for (const auto& v : verts_)
        if (best < v.first) best = v.first;
    return best;
}

Rational RateRegion::max_r2() const {
    Rational best(0);
    for (const auto& v : verts_)
        if (best < v.second) best = v.second;
    return best;
}

}  // namespace ifccr
