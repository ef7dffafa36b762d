#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <stdexcept>

namespace hypdim {

// Directed rounding by one-ulp nudging. Every elementary operation used below
// is either correctly rounded (+ - * / sqrt) or within one ulp (exp, log), so a
// result computed in round-to-nearest and nudged outward encloses the exact
// value.
namespace rounding {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline double down(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i) x = down(x);
    return x;
}
inline double up(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i) x = up(x);
    return x;
}

// Sums and products rounded in a fixed direction.
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);
// sqrt(a*a + b*b) rounded in a fixed direction.
double hypot_down(double a, double b);
double hypot_up(double a, double b);

} // namespace rounding

// Closed real interval [lo, hi] with finite endpoints. Arithmetic rounds
// outward so the result always contains the exact set image.
class Interval {
public:
    constexpr Interval() = default;
    Interval(double v); // NOLINT(google-explicit-constructor): points embed as degenerate intervals
    Interval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    // Nearest double to the midpoint; not an enclosure.
    double mid() const { return lo_ + 0.5 * (hi_ - lo_); }
    // Upper bound on the half-width, measured from mid().
    double rad() const;

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    // Certain sign predicates.
    bool positive() const { return lo_ > 0.0; }
    bool negative() const { return hi_ < 0.0; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws std::domain_error("divisor straddles zero") when 0 is in b.
Interval operator/(const Interval& a, const Interval& b);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

// Tight square {x*x}, which is non-negative even when a straddles zero.
Interval sqr(const Interval& a);

// Requires a.lo() >= 0.
Interval sqrt(const Interval& a);

// {x^t : x in a} for a.lo() > 0 and t > 0, evaluated as exp(t log x).
Interval pow(const Interval& a, double t);

// Convex hull of two intervals.
Interval hull(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& a);

} // namespace hypdim
