#include "hypdim/cdisc.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hypdim {

using namespace rounding;

namespace {

// Collapsed disc for the closed segment [a, b] on an axis: exact midpoint
// candidate plus the radius needed to reach both ends.
std::pair<double, double> segment_to_disc(double a, double b)
{
    const double m = a + 0.5 * (b - a);
    const double r = std::max(sub_up(b, m), sub_up(m, a));
    return {m, std::max(r, 0.0)};
}

// Exact difference a - b as a double plus an upper bound on |error|.
std::pair<double, double> diff_with_err(double a, double b)
{
    const double d = a - b;
    const double lo = sub_down(a, b);
    const double hi = sub_up(a, b);
    return {d, std::max(hi - d, d - lo)};
}

} // namespace

ExtendedDisc::ExtendedDisc(DiscKind kind, std::complex<double> center, double radius)
    : kind_(kind), center_(center), radius_(radius)
{
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("disc radius must be finite and non-negative");
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw std::invalid_argument("disc centre must be finite");
}

ExtendedDisc ExtendedDisc::full(std::complex<double> center, double radius)
{
    return {DiscKind::Full, center, radius};
}

ExtendedDisc ExtendedDisc::axis_x(double center, double radius)
{
    return {DiscKind::AxisX, {center, 0.0}, radius};
}

ExtendedDisc ExtendedDisc::axis_y(double center_im, double radius)
{
    return {DiscKind::AxisY, {0.0, center_im}, radius};
}

bool ExtendedDisc::contains(std::complex<double> z) const
{
    switch (kind_) {
    case DiscKind::AxisX:
        if (z.imag() != 0.0) return false;
        return std::fabs(z.real() - center_.real()) <= radius_;
    case DiscKind::AxisY:
        if (z.real() != 0.0) return false;
        return std::fabs(z.imag() - center_.imag()) <= radius_;
    case DiscKind::Full:
        break;
    }
    return std::abs(z - center_) <= radius_;
}

ExtendedDisc ExtendedDisc::negated() const
{
    return {kind_, -center_ + std::complex<double>(0.0, 0.0), radius_};
}

ExtendedDisc ExtendedDisc::conjugated() const
{
    return {kind_, std::conj(center_) + std::complex<double>(0.0, 0.0), radius_};
}

ParamEnclosure::ParamEnclosure(double c, double r) : center(c), radius(r)
{
    if (!std::isfinite(c) || !std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("parameter enclosure needs a finite centre and radius >= 0");
}

Interval ParamEnclosure::interval() const
{
    return {sub_down(center, radius), add_up(center, radius)};
}

ExtendedDisc disc_sub_param(const ExtendedDisc& d, const ParamEnclosure& c)
{
    const double rsum = add_up(d.radius(), c.radius);
    switch (d.kind()) {
    case DiscKind::AxisX: {
        const auto [x, err] = diff_with_err(d.center().real(), c.center);
        return ExtendedDisc::axis_x(x, add_up(rsum, err));
    }
    case DiscKind::AxisY:
        return ExtendedDisc::full({-c.center, d.center().imag()}, rsum);
    case DiscKind::Full:
        break;
    }
    const auto [x, err] = diff_with_err(d.center().real(), c.center);
    return ExtendedDisc::full({x, d.center().imag()}, add_up(rsum, err));
}

std::pair<ExtendedDisc, ExtendedDisc> disc_sqrt(const ExtendedDisc& d)
{
    if (d.kind() != DiscKind::Full) throw std::invalid_argument("disc_sqrt expects a full disc");
    const double x = d.center().real();
    const double y = d.center().imag();
    const double r = d.radius();

    const Interval rho(hypot_down(x, y), hypot_up(x, y));
    if (!(rho.lo() > r)) throw std::domain_error("origin in disc");

    const Interval a1 = sqrt(rho + Interval(r));
    const Interval a2 = sqrt(rho - Interval(r));
    const Interval half(0.5);
    const Interval rho_t = (a1 + a2) * half;
    const double r_t = mul_up(sub_up(a1.hi(), a2.lo()), 0.5);

    // Half-angle unit vector u with u^2 = m/|m|, using the cancellation-free
    // pair of formulas for each half plane.
    Interval ch, sh;
    const Interval two_rho = rho * Interval(2.0);
    if (x >= 0.0) {
        ch = sqrt((rho + Interval(x)) / two_rho);
        sh = Interval(y) / (two_rho * ch);
    } else {
        const Interval s = sqrt((rho - Interval(x)) / two_rho);
        sh = y < 0.0 ? -s : s;
        ch = Interval(std::fabs(y)) / (two_rho * s);
    }

    const Interval cx = rho_t * ch;
    const Interval cy = rho_t * sh;
    const std::complex<double> center(cx.mid(), cy.mid());
    const double radius = add_up(r_t, hypot_up(cx.rad(), cy.rad()));
    const auto w = ExtendedDisc::full(center, radius);
    return {w, w.negated()};
}

ExtendedDisc disc_sqrt_hull(const ExtendedDisc& d)
{
    const double far = add_up(hypot_up(d.center().real(), d.center().imag()), d.radius());
    return ExtendedDisc::full({0.0, 0.0}, sqrt_up(far));
}

std::vector<ExtendedDisc> axisx_sqrt(const ExtendedDisc& d)
{
    if (d.kind() != DiscKind::AxisX) throw std::invalid_argument("axisx_sqrt expects an AxisX disc");
    const double lo = sub_down(d.center().real(), d.radius());
    const double hi = add_up(d.center().real(), d.radius());

    std::vector<ExtendedDisc> out;
    if (lo >= 0.0) {
        const auto [m, r] = segment_to_disc(sqrt_down(lo), sqrt_up(hi));
        out.push_back(ExtendedDisc::axis_x(m, r));
    } else if (hi <= 0.0) {
        const auto [m, r] = segment_to_disc(sqrt_down(-hi), sqrt_up(-lo));
        out.push_back(ExtendedDisc::axis_y(m, r));
    } else {
        const auto [mx, rx] = segment_to_disc(0.0, sqrt_up(hi));
        const auto [my, ry] = segment_to_disc(0.0, sqrt_up(-lo));
        out.push_back(ExtendedDisc::axis_x(mx, rx));
        out.push_back(ExtendedDisc::axis_y(my, ry));
    }
    return out;
}

std::vector<ExtendedDisc> split_axis_y(const ExtendedDisc& d, double tol)
{
    if (d.kind() != DiscKind::AxisY) throw std::invalid_argument("split_axis_y expects an AxisY disc");
    if (!(tol > 0.0)) throw std::invalid_argument("split tolerance must be positive");
    if (d.radius() < tol) return {d};

    const double lo = sub_down(d.center().imag(), d.radius());
    const double hi = add_up(d.center().imag(), d.radius());
    auto n = static_cast<long>(std::floor(d.radius() / tol)) + 1;
    for (;; ++n) {
        const double step = (hi - lo) / static_cast<double>(n);
        std::vector<ExtendedDisc> out;
        out.reserve(static_cast<std::size_t>(n));
        double max_r = 0.0;
        double a = lo;
        for (long j = 0; j < n; ++j) {
            const double b = (j + 1 == n) ? hi : lo + step * static_cast<double>(j + 1);
            const auto [m, r] = segment_to_disc(a, b);
            out.push_back(ExtendedDisc::axis_y(m, r));
            max_r = std::max(max_r, r);
            a = b;
        }
        if (max_r < tol) return out;
    }
}

Interval abs_bounds(const ExtendedDisc& d)
{
    const double x = d.center().real();
    const double y = d.center().imag();
    const double lo = std::max(0.0, sub_down(hypot_down(x, y), d.radius()));
    const double hi = add_up(hypot_up(x, y), d.radius());
    return {lo, hi};
}

std::ostream& operator<<(std::ostream& os, const ExtendedDisc& d)
{
    os << '<' << d.center().real();
    if (d.kind() != DiscKind::AxisX) os << (d.center().imag() < 0 ? "-" : "+") << std::fabs(d.center().imag()) << 'i';
    os << ", " << d.radius() << '>';
    if (d.kind() == DiscKind::AxisX) os << "_x";
    if (d.kind() == DiscKind::AxisY) os << "_y";
    return os;
}

} // namespace hypdim
