#include "hypdim/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace hypdim {

namespace {

const char* const kRule = "------------------------------------------------------------";

class Stopwatch {
public:
    Stopwatch() : wall_(std::chrono::steady_clock::now()), cpu_(std::clock()) {}
    StageTime elapsed() const
    {
        return {std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_).count(),
                static_cast<double>(std::clock() - cpu_) / CLOCKS_PER_SEC};
    }

private:
    std::chrono::steady_clock::time_point wall_;
    std::clock_t cpu_;
};

std::string printf_string(const char* fmt, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

std::string duration_text(double s)
{
    if (s < 3600.0) return printf_string("%.4f seconds.", s);
    const auto total = static_cast<long>(s);
    std::ostringstream os;
    os << total / 3600 << " hours, " << (total / 60) % 60 << " minutes, and " << total % 60 << " seconds.";
    return os.str();
}

void log_times(std::ostream& log, const StageTime& t)
{
    log << "Wall time: " << duration_text(t.wall_s) << '\n' << "CPU time : " << duration_text(t.cpu_s) << '\n';
}

std::string now_text()
{
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    localtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%a %b %e %H:%M:%S %Y");
    return os.str();
}

std::string host_name()
{
    char buf[256] = {};
    if (gethostname(buf, sizeof buf - 1) != 0) return "unknown";
    return buf;
}

ParamEnclosure piece_param(double lo, double hi)
{
    const double m = lo + 0.5 * (hi - lo);
    return {m, std::max({rounding::sub_up(hi, m), rounding::sub_up(m, lo), 0.0})};
}

std::ostream& null_stream()
{
    thread_local std::ostringstream sink;
    sink.str({});
    return sink;
}

} // namespace

void RunConfig::check() const
{
    if (depth < 3) throw std::invalid_argument("depth must be >= 3");
    if (depth > 40) throw std::invalid_argument("depth must be <= 40");
    if (n_discs < 3) throw std::invalid_argument("need at least 3 discs per half circle");
    if (!(split_tol > 0.0)) throw std::invalid_argument("split tolerance must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (!(radius >= 0.0) || !std::isfinite(center)) throw std::invalid_argument("bad parameter enclosure");
    if (center - radius < -2.0 || center + radius > 2.0) throw std::invalid_argument("parameter enclosure must lie in [-2, 2]");
    if (!(0.0 < t_lo && t_lo < t_hi)) throw std::invalid_argument("need 0 < t_lo < t_hi");
}

std::string format_enclosure(const ParamEnclosure& p)
{
    return "{" + format_double(p.center) + ",0;" + format_double(p.radius) + "}";
}

void run_spectral_stages(const McMullenMatrix& m, const RunConfig& cfg, BoundReport& rep, std::ostream* log_ptr)
{
    std::ostream& log = log_ptr ? *log_ptr : null_stream();
    BisectOptions opt;
    opt.eps = cfg.eps;
    opt.t_lo = cfg.t_lo;
    opt.t_hi = cfg.t_hi;
    opt.threads = cfg.threads;

    log << "Non-rigorous lower bound:\n" << "tol = " << printf_string("%.1e", cfg.eps) << '\n';
    {
        Stopwatch sw;
        try {
            rep.bisect = bisect_delta(m, opt);
        } catch (const BracketError& e) {
            throw StageError("bracket", e.what());
        } catch (const std::exception& e) {
            throw StageError("bisect", e.what());
        }
        rep.estimate = sw.elapsed();
    }
    log << "hd_lo = " << printf_string("%.17e", rep.bisect.delta_star) << '\n';
    log_times(log, rep.estimate);
    log << kRule << '\n';

    log << "Confirm lower bound:\n";
    {
        Stopwatch sw;
        try {
            rep.result = validate(m, rep.bisect.delta_star, &rep.bisect.vector, opt);
        } catch (const std::exception& e) {
            throw StageError("confirm", e.what());
        }
        rep.result.epsilon_achieved = rep.bisect.width;
        rep.confirm = sw.elapsed();
    }
    const std::string hd = printf_string("%.17f", rep.bisect.delta_star);
    if (rep.result.certified)
        log << "Confirmed that HD >= " << hd << '\n';
    else
        log << "Could not confirm that HD >= " << hd << '\n';
    log << "Certified rho(M(hd_lo)) >= " << printf_string("%.17g", rep.result.certified_lower) << '\n'
        << "Test vector: " << rep.result.test_vector << '\n';
    log_times(log, rep.confirm);
    log << kRule << '\n';
}

BoundReport run_bound(const RunConfig& cfg, std::ostream& log)
{
    try {
        cfg.check();
    } catch (const std::exception& e) {
        throw StageError("config", e.what());
    }
    BoundReport rep;
    rep.cfg = cfg;
    const ParamEnclosure param(cfg.center, cfg.radius);
    const int k = cfg.matrix_level();

    log << kRule << '\n'
        << "-------------------------- hypdim --------------------------\n"
        << "Specifications:\n"
        << "Running on host '" << host_name() << "' with " << std::thread::hardware_concurrency() << " CPUs and "
        << cfg.threads << " threads.\n"
        << "Started computations: " << now_text() << '\n'
        << kRule << '\n'
        << "Tile computations:\n"
        << "Covering the half circles with " << cfg.n_discs << " discs each.\n"
        << "Covering the x-axis with 1 collapsed discs.\n"
        << "Splitting the y-axis with tol: " << format_double(cfg.split_tol) << '\n'
        << "c = " << format_enclosure(param) << '\n'
        << "Computing " << quarter_count(cfg.depth) << " tiles to depth " << cfg.depth << '\n'
        << "(fourth quadrant of the " << (std::uint64_t{1} << cfg.depth) << " level-" << cfg.depth
        << " tiles; matrix level " << k << ")\n";

    McMullenMatrix m;
    {
        Stopwatch sw;
        try {
            BuildStats stats;
            m = build(k, param, cfg.tile_config(), &stats);
            rep.tiles_computed = stats.tiles_computed;
        } catch (const std::exception& e) {
            throw StageError("tiles", e.what());
        }
        rep.tiles = sw.elapsed();
    }
    rep.max_diam = m.max_diam();
    log << "Matrix M^(" << k << "): " << m.dim() << " rows, " << 2 * m.dim() << " non-zeros\n"
        << "maxDiam(MM) = " << printf_string("%.17g", rep.max_diam) << '\n';
    log_times(log, rep.tiles);
    log << kRule << '\n';

    run_spectral_stages(m, cfg, rep, &log);
    log << "Ended computations: " << now_text() << '\n' << kRule << '\n';
    return rep;
}

namespace {

StairRecord run_piece(double lo, double hi, RunConfig cfg)
{
    const ParamEnclosure p = piece_param(lo, hi);
    cfg.center = p.center;
    cfg.radius = p.radius;
    cfg.threads = 1;

    StairRecord rec;
    rec.c_lo = lo;
    rec.c_hi = hi;
    rec.depth = cfg.depth;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::ostringstream sink;
        const BoundReport rep = run_bound(cfg, sink);
        rec.bound = rep.bisect.delta_star;
        rec.certified = rep.result.certified;
        rec.max_diam = rep.max_diam;
    } catch (const StageError& e) {
        rec.bound = std::numeric_limits<double>::quiet_NaN();
        rec.max_diam = std::numeric_limits<double>::quiet_NaN();
        rec.error = e.stage() + ": " + e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<StairRecord> run_pieces(const std::vector<std::pair<double, double>>& pieces, const RunConfig& cfg)
{
    std::vector<StairRecord> out(pieces.size());
    const auto n = static_cast<std::int64_t>(pieces.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
    for (std::int64_t i = 0; i < n; ++i) out[i] = run_piece(pieces[i].first, pieces[i].second, cfg);
    return out;
}

} // namespace

std::vector<StairRecord> run_sweep(const SweepPlan& plan, const RunConfig& cfg, std::ostream* log)
{
    if (!(plan.c_lo <= plan.c_hi)) throw std::invalid_argument("sweep domain needs c_lo <= c_hi");
    if (plan.c_lo < -2.0 || plan.c_hi > 2.0) throw std::invalid_argument("sweep domain must lie in [-2, 2]");
    if (plan.pieces < 1) throw std::invalid_argument("sweep needs at least one piece");
    cfg.check();

    std::vector<std::pair<double, double>> pieces;
    const double w = (plan.c_hi - plan.c_lo) / plan.pieces;
    for (int j = 0; j < plan.pieces; ++j) {
        const double lo = plan.c_lo + j * w;
        const double hi = j + 1 == plan.pieces ? plan.c_hi : plan.c_lo + (j + 1) * w;
        pieces.emplace_back(lo, hi);
    }
    std::vector<StairRecord> records = run_pieces(pieces, cfg);

    for (int round = 0; round < plan.adaptive_rounds; ++round) {
        std::vector<bool> split(records.size(), false);
        for (std::size_t i = 0; i + 1 < records.size(); ++i)
            if (std::fabs(records[i].bound - records[i + 1].bound) > plan.adaptive_gap) split[i] = split[i + 1] = true;
        std::vector<std::pair<double, double>> halves;
        for (std::size_t i = 0; i < records.size(); ++i)
            if (split[i]) {
                const double mid = records[i].c_lo + 0.5 * (records[i].c_hi - records[i].c_lo);
                halves.emplace_back(records[i].c_lo, mid);
                halves.emplace_back(mid, records[i].c_hi);
            }
        if (halves.empty()) break;
        if (log) *log << "Refining " << halves.size() / 2 << " pieces (round " << round + 1 << ")\n";
        const auto fresh = run_pieces(halves, cfg);
        std::vector<StairRecord> merged;
        std::size_t h = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (!split[i]) {
                merged.push_back(records[i]);
            } else {
                merged.push_back(fresh[h++]);
                merged.push_back(fresh[h++]);
            }
        }
        records = std::move(merged);
    }

    if (log)
        for (const auto& r : records) {
            *log << "[" << format_double(r.c_lo) << ", " << format_double(r.c_hi) << "] ";
            if (r.error.empty())
                *log << (r.certified ? "HD >= " : "unconfirmed ") << printf_string("%.17f", r.bound);
            else
                *log << "error " << r.error;
            *log << " (" << printf_string("%.0f", r.wall_ms) << " ms)\n";
        }
    return records;
}

std::vector<TileCover> all_tiles(int level, const RunConfig& cfg)
{
    if (level < 1 || level > 20) throw std::invalid_argument("tile dumps support levels 1..20");
    std::vector<TileCover> covers(std::size_t{1} << level);
    for_each_tile(level, ParamEnclosure(cfg.center, cfg.radius), cfg.tile_config(), false,
                  [&](const TileCover& c) { covers[c.code.index] = c; });
    return covers;
}

void write_tile_records(std::ostream& os, const std::vector<TileCover>& covers)
{
    os << "code,kind,re,im,r\n";
    for (const auto& c : covers)
        for (const auto& d : c.discs) os << format_disc_record(c.code, d) << '\n';
}

void write_matrix_records(std::ostream& os, const McMullenMatrix& m)
{
    os << "row,col,lo,hi\n";
    for (const auto& e : m.entries())
        os << e.row << ',' << e.col << ',' << format_double(e.value.lo()) << ',' << format_double(e.value.hi()) << '\n';
}

void log_feig(std::ostream& os, const UnimodalPermutation& perm, const FeigResult& r)
{
    os << "Permutation: [";
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? ", " : "") << perm[i];
    os << "]\n"
       << "Superattracting parameter: " << format_enclosure(r.root) << '\n'
       << "Kneading prefix: ";
    for (int s : r.kneading.prefix) os << (s > 0 ? '+' : s < 0 ? '-' : '0');
    os << '\n'
       << "Halving steps: " << r.steps << ", midpoint perturbations: " << r.perturbations
       << ", max symbols: " << r.max_symbols << ", max precision: " << r.max_precision << " bits\n"
       << "c = " << format_enclosure(r.param) << '\n'
       << "c in [" << printf_string("%.13f", r.param.center - r.param.radius) << ", "
       << printf_string("%.13f", r.param.center + r.param.radius) << "]\n";
}

} // namespace hypdim
