#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hypdim/interval.hpp"

namespace hypdim {

enum class DiscKind {
    Full,  // {z : |z - m| <= r}
    AxisX, // the same set intersected with the real axis
    AxisY, // the same set intersected with the imaginary axis
};

// A disc <m, r> in the complex plane, or one of its collapsed variants. For
// AxisX discs the centre is real and for AxisY discs purely imaginary. All
// rounding slack is carried by the radius; the centre is an exact double.
class ExtendedDisc {
public:
    ExtendedDisc() = default;

    static ExtendedDisc full(std::complex<double> center, double radius);
    static ExtendedDisc axis_x(double center, double radius);
    static ExtendedDisc axis_y(double center_im, double radius);

    DiscKind kind() const { return kind_; }
    std::complex<double> center() const { return center_; }
    double radius() const { return radius_; }

    // Membership test in exact arithmetic on the stored doubles (used by
    // sampling tests; not a validated predicate).
    bool contains(std::complex<double> z) const;

    ExtendedDisc negated() const;
    ExtendedDisc conjugated() const;

    friend bool operator==(const ExtendedDisc&, const ExtendedDisc&) = default;

private:
    ExtendedDisc(DiscKind kind, std::complex<double> center, double radius);

    DiscKind kind_ = DiscKind::Full;
    std::complex<double> center_{};
    double radius_ = 0.0;
};

// A real parameter set <center, radius>_x.
struct ParamEnclosure {
    double center = 0.0;
    double radius = 0.0;

    ParamEnclosure() = default;
    ParamEnclosure(double c, double r);

    Interval interval() const;
    ExtendedDisc disc() const { return ExtendedDisc::axis_x(center, radius); }
};

// d - c for a real parameter set c. Full-AxisX and AxisY-AxisX give Full
// discs, AxisX-AxisX stays on the real axis.
ExtendedDisc disc_sub_param(const ExtendedDisc& d, const ParamEnclosure& c);

// Both branches of the square root of a Full disc that provably excludes the
// origin: first the branch through sqrt(center) with the principal argument,
// then its negation. Throws std::domain_error("origin in disc") otherwise.
std::pair<ExtendedDisc, ExtendedDisc> disc_sqrt(const ExtendedDisc& d);

// A single origin-centred disc containing both square-root branches of any
// Full disc, including those that contain the origin.
ExtendedDisc disc_sqrt_hull(const ExtendedDisc& d);

// Principal square root of a collapsed real disc: an AxisX disc for the
// non-negative part and an AxisY disc (upper imaginary axis) for the
// non-positive part. A segment with 0 in its interior yields both.
std::vector<ExtendedDisc> axisx_sqrt(const ExtendedDisc& d);

// Cover an AxisY disc by AxisY pieces of radius < tol.
std::vector<ExtendedDisc> split_axis_y(const ExtendedDisc& d, double tol);

// Validated enclosure of {|z| : z in d}.
Interval abs_bounds(const ExtendedDisc& d);

std::ostream& operator<<(std::ostream& os, const ExtendedDisc& d);

} // namespace hypdim
