#include "hypdim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypdim {

using namespace rounding;

namespace {

void require_positive(std::span<const double> v)
{
    for (double x : v)
        if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("vector must be strictly positive");
}

MatVec point_apply(const PointMatrix& p, int threads)
{
    return [&p, threads](std::span<const double> v, std::span<double> out) { matvec(p, v, out, threads); };
}

IntervalMatVec interval_apply(const McMullenMatrix& m, int threads)
{
    return [&m, threads](std::span<const double> v, std::span<Interval> out) { matvec(m, v, out, threads); };
}

// The point matrix lo(M)^t (or hi(M)^t) as degenerate-interval entries,
// powered with outward rounding.
McMullenMatrix endpoint_power(const McMullenMatrix& m, double t, bool upper)
{
    std::vector<Interval> g;
    g.reserve(m.g().size());
    for (const auto& e : m.g()) g.push_back(pow(Interval(upper ? e.hi() : e.lo()), t));
    return {m.level(), std::move(g)};
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

SpectralEnclosure collatz_enclose(const MatVec& apply, std::vector<double>& v, const CollatzStop& stop)
{
    if (v.empty()) throw std::invalid_argument("empty start vector");
    require_positive(v);
    std::vector<double> w(v.size());
    SpectralEnclosure e{0.0, std::numeric_limits<double>::infinity(), 0};

    while (e.iterations < stop.max_iters) {
        apply(v, w);
        ++e.iterations;
        double rmin = std::numeric_limits<double>::infinity();
        double rmax = 0.0;
        double wmax = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!(w[i] > 0.0)) throw std::domain_error("non-positive iterate component at index " + std::to_string(i));
            const double r = w[i] / v[i];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            wmax = std::max(wmax, w[i]);
        }
        e.lo = std::max(e.lo, rmin);
        e.hi = std::min(e.hi, rmax);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] / wmax;

        if (e.hi - e.lo <= stop.width_tol * e.hi) break;
        if (stop.use_threshold && (e.lo > stop.threshold || e.hi < stop.threshold)) break;
    }
    return e;
}

double certify_lower(const IntervalMatVec& apply, std::span<const double> v)
{
    require_positive(v);
    std::vector<Interval> w(v.size());
    apply(v, w);
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) r = std::min(r, div_down(w[i].lo(), v[i]));
    return r;
}

double certify_upper(const IntervalMatVec& apply, std::span<const double> v)
{
    require_positive(v);
    std::vector<Interval> w(v.size());
    apply(v, w);
    double r = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, div_up(w[i].hi(), v[i]));
    return r;
}

BracketError::BracketError(double tl, double rl, double th, double rh)
    : std::runtime_error("invalid bracket: rho(M(" + fmt(tl) + ")) ~ " + fmt(rl) + " must exceed 1 and rho(M("
                         + fmt(th) + ")) ~ " + fmt(rh) + " must be below 1"),
      t_lo(tl), rho_lo(rl), t_hi(th), rho_hi(rh)
{
}

BisectResult bisect_delta(const McMullenMatrix& m, const BisectOptions& opt)
{
    if (!(opt.eps > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (!(0.0 < opt.t_lo && opt.t_lo < opt.t_hi)) throw std::invalid_argument("bisection needs 0 < t_lo < t_hi");

    CollatzStop stop = opt.stop;
    stop.use_threshold = true;
    stop.threshold = 1.0;

    auto estimate = [&](double t, std::vector<double>& v) {
        const PointMatrix p = lo_matrix_pow(m, t);
        return collatz_enclose(point_apply(p, opt.threads), v, stop);
    };

    std::vector<double> va(m.dim(), 1.0);
    std::vector<double> vb(m.dim(), 1.0);
    const auto ea = estimate(opt.t_lo, va);
    const auto eb = estimate(opt.t_hi, vb);
    if (!(ea.lo > 1.0) || !(eb.hi < 1.0))
        throw BracketError(opt.t_lo, 0.5 * (ea.lo + ea.hi), opt.t_hi, 0.5 * (eb.lo + eb.hi));

    BisectResult r;
    double a = opt.t_lo;
    double b = opt.t_hi;
    std::vector<double> v;
    while (b - a > opt.eps) {
        const double t = a + 0.5 * (b - a);
        if (t <= a || t >= b) break; // interval is a few ulps wide
        v = va;
        const auto e = estimate(t, v);
        if (e.lo > 1.0) {
            a = t;
            va.swap(v);
        } else {
            b = t;
        }
        ++r.steps;
    }
    r.delta_star = a;
    r.width = b - a;
    r.vector = std::move(va);
    return r;
}

BoundResult validate(const McMullenMatrix& m, double delta_star, const std::vector<double>* hint,
                     const BisectOptions& opt)
{
    if (!(delta_star > 0.0 && delta_star <= 2.0)) throw std::invalid_argument("delta_star must lie in (0, 2]");
    BoundResult res;
    res.delta_star = delta_star;

    std::vector<double> v = hint && hint->size() == m.dim() ? *hint : std::vector<double>(m.dim(), 1.0);
    const PointMatrix p = lo_matrix_pow(m, delta_star);
    CollatzStop stop = opt.stop;
    stop.use_threshold = false;
    res.rho_at_delta = collatz_enclose(point_apply(p, opt.threads), v, stop);

    const McMullenMatrix a = endpoint_power(m, delta_star, false);
    res.certified_lower = certify_lower(interval_apply(a, opt.threads), v);
    res.certified = res.certified_lower > 1.0;
    res.test_vector = std::string("power iterate after ") + std::to_string(res.rho_at_delta.iterations)
                    + " steps from " + (hint ? "the bisection vector" : "all ones");
    return res;
}

double certified_rho_lower(const McMullenMatrix& m, double t, const BisectOptions& opt)
{
    std::vector<double> v(m.dim(), 1.0);
    const PointMatrix p = lo_matrix_pow(m, t);
    collatz_enclose(point_apply(p, opt.threads), v, opt.stop);
    const McMullenMatrix a = endpoint_power(m, t, false);
    return certify_lower(interval_apply(a, opt.threads), v);
}

double certified_rho_upper(const McMullenMatrix& m, double t, const BisectOptions& opt)
{
    std::vector<double> v(m.dim(), 1.0);
    PointMatrix p = hi_matrix(m);
    for (auto& x : p.g) x = std::pow(x, t);
    collatz_enclose(point_apply(p, opt.threads), v, opt.stop);
    const McMullenMatrix a = endpoint_power(m, t, true);
    return certify_upper(interval_apply(a, opt.threads), v);
}

} // namespace hypdim
