#pragma once

#include <string>
#include <vector>

#include "ifccr/channel.hpp"

namespace ifccr {

struct region_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational with small denominator. Region vertices never need
/// denominators above 3 (coefficients live in {0,1,2}).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    std::string to_string() const;
    static Rational parse(const std::string& s);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

using RatePoint = std::pair<Rational, Rational>;

/// a*R1 + b*R2 <= c with a,b in {0,1,2}, c >= 0.
struct Inequality {
    int a, b;
    long long c;
    std::string label;  // optional equation tag, e.g. "5c"

    bool operator==(const Inequality& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Closed convex polygon over non-negative rate pairs, canonicalized to a
/// minimal inequality set plus its CCW vertex list starting at (0,0).
class RateRegion {
  public:
    static RateRegion from_inequalities(std::vector<Inequality> ineqs);

    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    const std::vector<RatePoint>& vertices() const { return verts_; }

    bool contains(const RatePoint& pt) const;
    bool equals(const RateRegion& o) const { return verts_ == o.verts_; }
    bool is_subset_of(const RateRegion& o) const;
    RateRegion mirrored() const;

    /// Largest R1 coordinate of any vertex, and largest R2.
    Rational max_r1() const;
    Rational max_r2() const;

  private:
    RateRegion() = default;
    std::vector<Inequality> ineqs_;
    std::vector<RatePoint> verts_;
};

}  // namespace ifccr
