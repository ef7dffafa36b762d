#include "hypdim/tiles.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace hypdim {

using namespace rounding;

TileCode::TileCode(int level_, std::uint64_t index_) : level(level_), index(index_)
{
    if (level < 1 || level > 62) throw std::invalid_argument("tile level out of range");
    if (index >= (std::uint64_t{1} << level)) throw std::invalid_argument("tile index out of range");
}

std::string TileCode::bits() const
{
    std::string s;
    for (int j = level - 1; j >= 0; --j) s.push_back(bit(j) ? '1' : '0');
    return s;
}

TileCode TileCode::child(bool upper_branch) const
{
    return {level + 1, index | (std::uint64_t{upper_branch} << level)};
}

TileCode TileCode::image() const
{
    return {level - 1, index & ((std::uint64_t{1} << (level - 1)) - 1)};
}

TileCode TileCode::parent() const { return {level - 1, index >> 1}; }

std::pair<TileCover, TileCover> initial_covers(int n_discs, const ParamEnclosure& param)
{
    if (n_discs < 3) throw std::invalid_argument("need at least 3 discs per half circle");
    // Disc j is centred at 2 e^{i phi_j}, phi_j = (j + 1/2) pi / n, and must
    // reach the ends of its arc piece at distance 4 sin(pi / 4n). The radius
    // 1.05 * 2 sin(pi / 2n) = 1.05 cos(pi / 4n) * 4 sin(pi / 4n) exceeds that
    // by more than 1.4% for n >= 3, far above the rounding error of the
    // centres.
    const double n = n_discs;
    const double radius = up(1.05 * 2.0 * std::sin(std::numbers::pi / (2.0 * n)), 4);

    TileCover upper{TileCode(1, 1), {}, param};
    TileCover lower{TileCode(1, 0), {}, param};
    for (int j = 0; j < n_discs; ++j) {
        const double phi = (j + 0.5) * std::numbers::pi / n;
        const std::complex<double> m(2.0 * std::cos(phi), 2.0 * std::sin(phi));
        upper.discs.push_back(ExtendedDisc::full(m, radius));
        lower.discs.push_back(ExtendedDisc::full(std::conj(m), radius));
    }
    upper.discs.push_back(ExtendedDisc::axis_x(0.0, 2.0));
    lower.discs.push_back(ExtendedDisc::axis_x(0.0, 2.0));
    return {std::move(upper), std::move(lower)};
}

namespace {

// Closed quadrant {sx * Re z >= 0, sy * Im z >= 0}.
struct Quadrant {
    int sx;
    int sy;
};

// False only when the disc is provably disjoint from the closed quadrant.
bool may_meet(const ExtendedDisc& d, Quadrant q)
{
    const double a = q.sx * d.center().real();
    const double b = q.sy * d.center().imag();
    const double r = d.radius();
    switch (d.kind()) {
    case DiscKind::AxisX:
        return add_up(a, r) >= 0.0;
    case DiscKind::AxisY:
        return add_up(b, r) >= 0.0;
    case DiscKind::Full:
        break;
    }
    double dist = 0.0;
    if (a < 0.0 && b < 0.0)
        dist = hypot_down(a, b);
    else if (a < 0.0)
        dist = -a;
    else if (b < 0.0)
        dist = -b;
    return dist <= r;
}

// Intersect a collapsed disc with the closed quadrant's half axis.
ExtendedDisc clip(const ExtendedDisc& d, Quadrant q)
{
    if (d.kind() == DiscKind::Full) return d;
    const bool on_x = d.kind() == DiscKind::AxisX;
    const double m = on_x ? d.center().real() : d.center().imag();
    const int s = on_x ? q.sx : q.sy;
    double lo = sub_down(m, d.radius());
    double hi = add_up(m, d.radius());
    if (s > 0 && lo >= 0.0) return d;
    if (s < 0 && hi <= 0.0) return d;
    if (s > 0)
        lo = 0.0;
    else
        hi = 0.0;
    const double c = lo + 0.5 * (hi - lo);
    const double r = std::max({sub_up(hi, c), sub_up(c, lo), 0.0});
    return on_x ? ExtendedDisc::axis_x(c, r) : ExtendedDisc::axis_y(c, r);
}

// Endpoints of a collapsed disc, rounded outward along its axis.
std::pair<std::complex<double>, std::complex<double>> endpoints(const ExtendedDisc& d)
{
    if (d.kind() == DiscKind::AxisX) {
        const double m = d.center().real();
        return {{sub_down(m, d.radius()), 0.0}, {add_up(m, d.radius()), 0.0}};
    }
    const double m = d.center().imag();
    return {{0.0, sub_down(m, d.radius())}, {0.0, add_up(m, d.radius())}};
}

// Validated membership of a point in a Full disc.
bool point_in(std::complex<double> p, const ExtendedDisc& d)
{
    const double rx = std::max(std::fabs(sub_up(p.real(), d.center().real())),
                               std::fabs(sub_down(p.real(), d.center().real())));
    const double ry = std::max(std::fabs(sub_up(p.imag(), d.center().imag())),
                               std::fabs(sub_down(p.imag(), d.center().imag())));
    return hypot_up(rx, ry) <= d.radius();
}

// Conservative subset test; only collapsed discs are ever reported as
// contained.
bool contained_in(const ExtendedDisc& a, const ExtendedDisc& b)
{
    if (a.kind() == DiscKind::Full) return false;
    const auto [p, q] = endpoints(a);
    if (b.kind() == DiscKind::AxisX || b.kind() == DiscKind::AxisY) {
        // Segments are convex, so both ends inside suffices.
        auto inside = [&](std::complex<double> z) {
            const auto [u, v] = endpoints(b);
            if (b.kind() == DiscKind::AxisX) return z.imag() == 0.0 && u.real() <= z.real() && z.real() <= v.real();
            return z.real() == 0.0 && u.imag() <= z.imag() && z.imag() <= v.imag();
        };
        return inside(p) && inside(q);
    }
    return point_in(p, b) && point_in(q, b);
}

void push_candidates(std::vector<ExtendedDisc>& cand, Quadrant quad, double split_tol,
                     std::vector<ExtendedDisc>& out)
{
    // Keep every branch that can reach the target quadrant, clipped to it.
    std::size_t kept = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (may_meet(cand[i], quad)) cand[kept++] = clip(cand[i], quad);
    cand.resize(kept);

    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < cand.size() && !redundant; ++j)
            if (j != i && contained_in(cand[i], cand[j]) && !(j > i && contained_in(cand[j], cand[i])))
                redundant = true;
        if (redundant) continue;
        if (cand[i].kind() == DiscKind::AxisY && cand[i].radius() >= split_tol) {
            for (const auto& piece : split_axis_y(cand[i], split_tol)) out.push_back(piece);
        } else {
            out.push_back(cand[i]);
        }
    }
}

} // namespace

void refine_into(const TileCover& cover, bool upper_branch, double split_tol, TileCover& out)
{
    const TileCode code = cover.code.child(upper_branch);
    const Quadrant quad{upper_branch == cover.code.upper() ? 1 : -1, upper_branch ? 1 : -1};

    out.code = code;
    out.param = cover.param;
    out.discs.clear();

    std::vector<ExtendedDisc> cand;
    cand.reserve(4);
    for (const auto& d : cover.discs) {
        const ExtendedDisc w = disc_sub_param(d, cover.param);
        cand.clear();
        if (w.kind() == DiscKind::AxisX) {
            for (const auto& root : axisx_sqrt(w)) {
                cand.push_back(root);
                cand.push_back(root.negated());
            }
        } else {
            try {
                const auto [a, b] = disc_sqrt(w);
                cand.push_back(a);
                cand.push_back(b);
            } catch (const std::domain_error&) {
                // The disc reaches the critical value; the origin-centred
                // hull holds both branches and is sharp for max |z|.
                cand.push_back(disc_sqrt_hull(w));
            }
        }
        push_candidates(cand, quad, split_tol, out.discs);
    }
}

TileCover refine(const TileCover& cover, bool upper_branch, double split_tol)
{
    TileCover out;
    refine_into(cover, upper_branch, split_tol, out);
    return out;
}

DistanceBounds distance_bounds(const TileCover& cover)
{
    if (cover.discs.empty()) throw std::invalid_argument("distance bounds of an empty cover");
    DistanceBounds b{0.0, 0.0};
    for (const auto& d : cover.discs) {
        const Interval a = abs_bounds(d);
        b.lo_s = std::max(b.lo_s, a.lo());
        b.hi_s = std::max(b.hi_s, a.hi());
    }
    return b;
}

std::uint64_t quarter_count(int level)
{
    if (level < 2) throw std::invalid_argument("quarter tiles need level >= 2");
    return std::uint64_t{1} << (level - 2);
}

std::uint64_t quarter_representative(int level, std::uint64_t index)
{
    const std::uint64_t mask = (std::uint64_t{1} << level) - 1;
    const std::uint64_t top = std::uint64_t{1} << (level - 1);
    const std::uint64_t second = std::uint64_t{1} << (level - 2);
    if (index & second) index = ~index & mask; // z -> conj(z)
    return index & ~top;                       // z -> -z
}

namespace {

// Whether bit j may be 1 when walking towards `level`.
bool branch_free(int j, int level, bool quarter_only)
{
    return !quarter_only || j < level - 2;
}

void descend(std::vector<TileCover>& stack, int depth, int level, double split_tol, bool quarter_only,
             const std::function<void(const TileCover&)>& visitor)
{
    const TileCover& node = stack[depth];
    if (node.code.level == level) {
        visitor(node);
        return;
    }
    const int j = node.code.level; // index of the bit chosen next
    for (int b = 0; b <= (branch_free(j, level, quarter_only) ? 1 : 0); ++b) {
        refine_into(node, b == 1, split_tol, stack[depth + 1]);
        descend(stack, depth + 1, level, split_tol, quarter_only, visitor);
    }
}

} // namespace

void for_each_tile(int level, const ParamEnclosure& param, const TileConfig& cfg, bool quarter_only,
                   const std::function<void(const TileCover&)>& visitor)
{
    if (level < 1) throw std::invalid_argument("tile level must be >= 1");
    if (quarter_only && level < 2) throw std::invalid_argument("quarter tiles need level >= 2");

    auto [upper, lower] = initial_covers(cfg.n_discs, param);
    std::vector<TileCover> frontier;
    if (!quarter_only || branch_free(0, level, quarter_only)) frontier.push_back(std::move(upper));
    frontier.push_back(std::move(lower));
    std::sort(frontier.begin(), frontier.end(),
              [](const TileCover& a, const TileCover& b) { return a.code.index < b.code.index; });

    // Expand breadth-first until there is enough independent work, then
    // finish every subtree depth-first on its own stack.
    const int threads = std::max(1, cfg.threads);
    const std::size_t target = threads == 1 ? 1 : static_cast<std::size_t>(threads) * 16;
    while (frontier.size() < target && frontier.front().code.level < level) {
        std::vector<TileCover> next;
        for (const auto& node : frontier) {
            const int j = node.code.level;
            for (int b = 0; b <= (branch_free(j, level, quarter_only) ? 1 : 0); ++b)
                next.push_back(refine(node, b == 1, cfg.split_tol));
        }
        frontier = std::move(next);
    }

    const auto count = static_cast<std::int64_t>(frontier.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            const int depth_left = level - frontier[t].code.level;
            std::vector<TileCover> stack(static_cast<std::size_t>(depth_left) + 1);
            stack[0] = frontier[t];
            descend(stack, 0, level, cfg.split_tol, quarter_only, visitor);
        } catch (...) {
#pragma omp critical(hypdim_tiles_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<DistanceBounds> quarter_tiles(int level, const ParamEnclosure& param, const TileConfig& cfg)
{
    std::vector<DistanceBounds> out(quarter_count(level));
    for_each_tile(level, param, cfg, true, [&](const TileCover& cover) {
        try {
            out[cover.code.index] = distance_bounds(cover);
        } catch (const std::exception& e) {
            throw std::runtime_error("tile " + cover.code.bits() + ": " + e.what());
        }
    });
    return out;
}

DistanceBounds mirrored_bounds(const std::vector<DistanceBounds>& quarter, int level, std::uint64_t index)
{
    return quarter.at(quarter_representative(level, index));
}

namespace {

void append_double(std::string& s, double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    s.append(buf, res.ptr);
}

} // namespace

std::string format_disc_record(const TileCode& code, const ExtendedDisc& d)
{
    std::string s = code.bits();
    switch (d.kind()) {
    case DiscKind::Full:
        s += ",full,";
        break;
    case DiscKind::AxisX:
        s += ",x,";
        break;
    case DiscKind::AxisY:
        s += ",y,";
        break;
    }
    append_double(s, d.center().real());
    s += ',';
    append_double(s, d.center().imag());
    s += ',';
    append_double(s, d.radius());
    return s;
}

} // namespace hypdim
