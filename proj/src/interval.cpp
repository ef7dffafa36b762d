#include "hypdim/interval.hpp"

#include <algorithm>
#include <ostream>

namespace hypdim {
namespace rounding {
namespace {

// Below this magnitude the error-free transformations can lose exactness to
// gradual underflow, so results are nudged unconditionally.
constexpr double kTiny = 0x1p-960;

// The exact value is `r + err`; round it in the requested direction.
double round_down(double r, double err, bool exact_known)
{
    if (!exact_known) return down(r);
    return err < 0.0 ? down(r) : r;
}
double round_up(double r, double err, bool exact_known)
{
    if (!exact_known) return up(r);
    return err > 0.0 ? up(r) : r;
}

// Knuth's TwoSum: s + e == a + b exactly.
double two_sum_err(double a, double b, double s)
{
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

bool exact_ok(double a, double b, double r)
{
    return std::isfinite(r) && (r == 0.0 || std::fabs(r) > kTiny) && std::fabs(a) > kTiny
        && std::fabs(b) > kTiny;
}

} // namespace

double add_down(double a, double b)
{
    const double s = a + b;
    if (a == 0.0 || b == 0.0) return s;
    return round_down(s, two_sum_err(a, b, s), std::isfinite(s));
}

double add_up(double a, double b)
{
    const double s = a + b;
    if (a == 0.0 || b == 0.0) return s;
    return round_up(s, two_sum_err(a, b, s), std::isfinite(s));
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b)
{
    const double p = a * b;
    if (a == 0.0 || b == 0.0) return p;
    return round_down(p, std::fma(a, b, -p), exact_ok(a, b, p));
}

double mul_up(double a, double b)
{
    const double p = a * b;
    if (a == 0.0 || b == 0.0) return p;
    return round_up(p, std::fma(a, b, -p), exact_ok(a, b, p));
}

// a = q*b + rem exactly, so the sign of the correction rem/b decides.
double div_down(double a, double b)
{
    const double q = a / b;
    if (a == 0.0) return q;
    const double rem = std::fma(-q, b, a);
    return round_down(q, b > 0.0 ? rem : -rem, exact_ok(a, b, q));
}

double div_up(double a, double b)
{
    const double q = a / b;
    if (a == 0.0) return q;
    const double rem = std::fma(-q, b, a);
    return round_up(q, b > 0.0 ? rem : -rem, exact_ok(a, b, q));
}

double sqrt_down(double a)
{
    const double s = std::sqrt(a);
    if (a == 0.0) return 0.0;
    return std::max(0.0, round_down(s, std::fma(-s, s, a), exact_ok(a, s, s)));
}

double sqrt_up(double a)
{
    const double s = std::sqrt(a);
    if (a == 0.0) return 0.0;
    return round_up(s, std::fma(-s, s, a), exact_ok(a, s, s));
}

double hypot_down(double a, double b)
{
    return sqrt_down(add_down(mul_down(a, a), mul_down(b, b)));
}

double hypot_up(double a, double b)
{
    return sqrt_up(add_up(mul_up(a, a), mul_up(b, b)));
}

} // namespace rounding

Interval::Interval(double v) : lo_(v), hi_(v)
{
    if (!std::isfinite(v)) throw std::invalid_argument("interval endpoint is not finite");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("interval endpoint is not finite");
    if (lo > hi) throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
}

double Interval::rad() const
{
    const double m = mid();
    return std::max(rounding::sub_up(hi_, m), rounding::sub_up(m, lo_));
}

Interval operator+(const Interval& a, const Interval& b)
{
    return {rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval& a, const Interval& b)
{
    return {rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo())};
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator*(const Interval& a, const Interval& b)
{
    using namespace rounding;
    const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                                mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())});
    const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                                mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())});
    return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b)
{
    using namespace rounding;
    if (b.contains_zero()) throw std::domain_error("divisor straddles zero");
    const double lo = std::min({div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi()),
                                div_down(a.hi(), b.lo()), div_down(a.hi(), b.hi())});
    const double hi = std::max({div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi()),
                                div_up(a.hi(), b.lo()), div_up(a.hi(), b.hi())});
    return {lo, hi};
}

Interval sqr(const Interval& a)
{
    using namespace rounding;
    const double l = std::fabs(a.lo());
    const double h = std::fabs(a.hi());
    const double top = mul_up(std::max(l, h), std::max(l, h));
    if (a.contains_zero()) return {0.0, top};
    const double m = std::min(l, h);
    return {mul_down(m, m), top};
}

Interval sqrt(const Interval& a)
{
    if (a.lo() < 0.0) throw std::domain_error("square root of an interval with negative lower endpoint");
    return {rounding::sqrt_down(a.lo()), rounding::sqrt_up(a.hi())};
}

namespace {

// Bounds on x^t for a single positive x. Endpoints at 1 and t == 1 are exact.
double pow_bound(double x, double t, bool upper)
{
    if (x == 1.0 || t == 1.0) return x;
    // log and exp are within one ulp; two ulps outward at each step plus one
    // ulp of padding on the result.
    constexpr int kUlps = 2;
    const double l = std::log(x);
    const double l_b = upper ? (t > 0 ? rounding::up(l, kUlps) : rounding::down(l, kUlps))
                             : (t > 0 ? rounding::down(l, kUlps) : rounding::up(l, kUlps));
    const double e = upper ? rounding::mul_up(t, l_b) : rounding::mul_down(t, l_b);
    const double r = std::exp(e);
    return upper ? rounding::up(r, kUlps + 1) : std::max(0.0, rounding::down(r, kUlps + 1));
}

} // namespace

Interval pow(const Interval& a, double t)
{
    if (!(a.lo() > 0.0)) throw std::domain_error("power of an interval with non-positive base");
    if (!(t > 0.0)) throw std::domain_error("power exponent must be positive");
    if (t == 0.5) return sqrt(a);
    if (t == 2.0) return sqr(a);
    return {pow_bound(a.lo(), t, false), pow_bound(a.hi(), t, true)};
}

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

std::ostream& operator<<(std::ostream& os, const Interval& a)
{
    return os << '[' << a.lo() << ", " << a.hi() << ']';
}

} // namespace hypdim
