#include "hypdim/mcmullen.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypdim {

using namespace rounding;

McMullenMatrix::McMullenMatrix(int level, std::vector<Interval> g) : level_(level), g_(std::move(g))
{
    if (level < 2) throw std::invalid_argument("McMullen matrix needs level >= 2");
    if (g_.size() != (std::size_t{1} << (level - 1)))
        throw std::invalid_argument("McMullen matrix needs 2^(k-1) generator entries");
    for (const auto& e : g_) {
        if (!e.positive()) throw std::invalid_argument("McMullen matrix entries must be positive");
        max_diam_ = std::max(max_diam_, e.width());
    }
}

std::vector<MatrixEntry> McMullenMatrix::entries() const
{
    const std::uint64_t n = dim();
    std::vector<MatrixEntry> out;
    out.reserve(2 * n);
    for (std::uint64_t l = 0; l < 2 * n; ++l) out.push_back({l >> 1, l & (n - 1), entry(l)});
    return out;
}

McMullenMatrix from_quarter_bounds(int k, const std::vector<DistanceBounds>& quarter)
{
    if (quarter.size() != quarter_count(k + 1)) throw std::invalid_argument("quarter table has the wrong size");
    std::vector<Interval> g;
    g.reserve(quarter.size());
    for (std::size_t l = 0; l < quarter.size(); ++l) {
        const auto& b = quarter[l];
        if (!(b.lo_s > 0.0))
            throw std::runtime_error("tile touches origin (level " + std::to_string(k + 1) + ", index "
                                     + std::to_string(l) + ")");
        g.emplace_back(div_down(1.0, mul_up(2.0, b.hi_s)), div_up(1.0, mul_down(2.0, b.lo_s)));
    }
    return {k, std::move(g)};
}

McMullenMatrix build(int k, const ParamEnclosure& param, const TileConfig& cfg, BuildStats* stats)
{
    if (k < 2) throw std::invalid_argument("McMullen matrix needs level >= 2");
    if (param.center - param.radius < -2.0 || param.center + param.radius > 2.0)
        throw std::invalid_argument("parameter enclosure must lie in [-2, 2]");
    const auto t0 = std::chrono::steady_clock::now();
    auto m = from_quarter_bounds(k, quarter_tiles(k + 1, param, cfg));
    if (stats) {
        stats->tiles_at_depth = quarter_count(k);
        stats->tiles_computed = quarter_count(k + 1);
        stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return m;
}

McMullenMatrix pow_entries(const McMullenMatrix& m, double t)
{
    std::vector<Interval> g;
    g.reserve(m.g().size());
    for (const auto& e : m.g()) g.push_back(pow(e, t));
    return {m.level(), std::move(g)};
}

PointMatrix lo_matrix(const McMullenMatrix& m)
{
    PointMatrix p{m.level(), {}};
    p.g.reserve(m.g().size());
    for (const auto& e : m.g()) p.g.push_back(e.lo());
    return p;
}

PointMatrix hi_matrix(const McMullenMatrix& m)
{
    PointMatrix p{m.level(), {}};
    p.g.reserve(m.g().size());
    for (const auto& e : m.g()) p.g.push_back(e.hi());
    return p;
}

PointMatrix lo_matrix_pow(const McMullenMatrix& m, double t)
{
    PointMatrix p{m.level(), {}};
    p.g.reserve(m.g().size());
    for (const auto& e : m.g()) p.g.push_back(std::pow(e.lo(), t));
    return p;
}

namespace {

void check_dims(std::size_t n, std::size_t v, std::size_t out)
{
    if (v != n || out != n) throw std::invalid_argument("matvec dimension mismatch");
}

} // namespace

void matvec(const PointMatrix& a, std::span<const double> v, std::span<double> out, int threads)
{
    const std::uint64_t n = a.dim();
    check_dims(n, v.size(), out.size());
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(std::max(1, threads)) if (n >= 4096)
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::uint64_t l = 2 * static_cast<std::uint64_t>(i);
        out[i] = a.entry(l) * v[l & (n - 1)] + a.entry(l + 1) * v[(l + 1) & (n - 1)];
    }
}

void matvec(const McMullenMatrix& a, std::span<const double> v, std::span<Interval> out, int threads)
{
    const std::uint64_t n = a.dim();
    check_dims(n, v.size(), out.size());
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(std::max(1, threads)) if (n >= 4096)
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::uint64_t l = 2 * static_cast<std::uint64_t>(i);
        const Interval& e0 = a.entry(l);
        const Interval& e1 = a.entry(l + 1);
        const double v0 = v[l & (n - 1)];
        const double v1 = v[(l + 1) & (n - 1)];
        // Entries and v are positive, so the endpoints pair up directly.
        out[i] = Interval(add_down(mul_down(e0.lo(), v0), mul_down(e1.lo(), v1)),
                          add_up(mul_up(e0.hi(), v0), mul_up(e1.hi(), v1)));
    }
}

} // namespace hypdim
