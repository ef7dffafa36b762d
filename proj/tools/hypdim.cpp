// hypdim: rigorous lower bounds on the hyperbolic dimension of real quadratic
// Julia sets.
//
//   hypdim bound  --depth 18 --center -1.25 --radius 1e-5
//   hypdim sweep  --lo -1.402 --hi -1.350 --pieces 26 --depth 17 --out i2.csv
//   hypdim feig   --perm 1,0,2
//   hypdim tiles  --level 4 --center -1.4011551890 --out tiles.csv --svg tiles.svg
//
// Exit codes: 0 success (every requested bound certified), 1 a bound could not
// be certified, 2 a stage failed.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "hypdim/driver.hpp"
#include "hypdim/svg.hpp"

using namespace hypdim;

namespace {

void add_run_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--depth", cfg.depth, "tile depth d (matrix M^(d-1))")->envname("HYPDIM_DEPTH");
    cmd->add_option("--discs", cfg.n_discs, "discs per half circle")->envname("HYPDIM_DISCS");
    cmd->add_option("--split-tol", cfg.split_tol, "split imaginary-axis discs below this radius")
        ->envname("HYPDIM_SPLIT_TOL");
    cmd->add_option("--eps", cfg.eps, "bisection tolerance")->envname("HYPDIM_EPS");
    cmd->add_option("--threads", cfg.threads, "worker threads")->envname("HYPDIM_THREADS");
    cmd->add_option("--center", cfg.center, "parameter centre")->envname("HYPDIM_CENTER");
    cmd->add_option("--radius", cfg.radius, "parameter radius")->envname("HYPDIM_RADIUS");
    cmd->add_option("--t-lo", cfg.t_lo, "left end of the bisection bracket");
    cmd->add_option("--t-hi", cfg.t_hi, "right end of the bisection bracket");
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    return f;
}

int fail(const std::string& stage, const std::string& what)
{
    std::cerr << "error [" << stage << "]: " << what << '\n';
    return 2;
}

void write_records(const std::vector<StairRecord>& recs, const std::string& format, std::ostream& os)
{
    if (format == "json")
        write_json(os, recs);
    else if (format == "svg")
        write_staircase_svg(os, recs, 4.0 / 3.0);
    else
        write_csv(os, recs);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigorous lower bounds on the hyperbolic dimension of real quadratic Julia sets"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out, format = "csv", matrix_out;

    auto* bound = app.add_subcommand("bound", "certify a lower bound for one parameter interval");
    add_run_options(bound, cfg);
    bound->add_option("--out", out, "write the result record here");
    bound->add_option("--format", format, "record format")->check(CLI::IsMember({"csv", "json", "svg"}));
    bound->add_option("--matrix-out", matrix_out, "dump the interval matrix (depth <= 9)");

    SweepPlan plan;
    auto* sweep = app.add_subcommand("sweep", "staircase of bounds over a parameter domain");
    add_run_options(sweep, cfg);
    sweep->add_option("--lo", plan.c_lo, "left end of the domain");
    sweep->add_option("--hi", plan.c_hi, "right end of the domain");
    sweep->add_option("--pieces", plan.pieces, "number of equal pieces");
    sweep->add_option("--adaptive-rounds", plan.adaptive_rounds, "halving rounds where neighbours differ");
    sweep->add_option("--adaptive-gap", plan.adaptive_gap, "bound jump that triggers halving");
    sweep->add_option("--out", out, "output file (default: stdout)");
    sweep->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));

    std::vector<int> perm;
    double tol = 1e-10;
    auto* feig = app.add_subcommand("feig", "enclose the Feigenbaum parameter of a unimodal permutation");
    feig->add_option("--perm", perm, "permutation, e.g. 1,0,2")->delimiter(',')->required();
    feig->add_option("--tol", tol, "enclosure width");

    int level = 4;
    std::string svg_out;
    auto* tiles = app.add_subcommand("tiles", "dump the disc covers of all tiles at one level");
    add_run_options(tiles, cfg);
    tiles->add_option("--level", level, "tile level");
    tiles->add_option("--out", out, "disc records (default: stdout)");
    tiles->add_option("--svg", svg_out, "SVG picture (level <= 16)");

    CLI11_PARSE(app, argc, argv);
    omp_set_num_threads(cfg.threads);

    try {
        if (*bound) {
            BoundReport rep;
            try {
                rep = run_bound(cfg, std::cout);
            } catch (const StageError& e) {
                return fail(e.stage(), e.what());
            }
            if (!matrix_out.empty()) {
                if (cfg.matrix_level() > 8) return fail("config", "matrix dumps are limited to depth <= 9");
                auto f = open_out(matrix_out);
                write_matrix_records(f, build(cfg.matrix_level(), ParamEnclosure(cfg.center, cfg.radius),
                                              cfg.tile_config()));
            }
            if (!out.empty()) {
                const ParamEnclosure p(cfg.center, cfg.radius);
                const Interval c = p.interval();
                StairRecord rec{c.lo(), c.hi(), cfg.depth, rep.bisect.delta_star, rep.result.certified, rep.max_diam,
                                1e3 * (rep.tiles.wall_s + rep.estimate.wall_s + rep.confirm.wall_s), {}};
                auto f = open_out(out);
                write_records({rec}, format, f);
            }
            return rep.result.certified ? 0 : 1;
        }

        if (*sweep) {
            std::vector<StairRecord> recs;
            try {
                recs = run_sweep(plan, cfg, &std::cerr);
            } catch (const std::exception& e) {
                return fail("config", e.what());
            }
            if (out.empty()) {
                write_records(recs, format, std::cout);
            } else {
                auto f = open_out(out);
                write_records(recs, format, f);
            }
            bool all = true;
            for (const auto& r : recs) all = all && r.certified;
            return all ? 0 : 1;
        }

        if (*feig) {
            FeigResult r;
            try {
                r = locate_feig_param(perm, tol);
            } catch (const std::exception& e) {
                return fail("kneading", e.what());
            }
            log_feig(std::cout, perm, r);
            return 0;
        }

        if (*tiles) {
            if (!svg_out.empty() && level > 16) return fail("config", "SVG output is limited to level <= 16");
            std::vector<TileCover> covers;
            try {
                cfg.check();
                covers = all_tiles(level, cfg);
            } catch (const std::exception& e) {
                return fail("tiles", e.what());
            }
            if (out.empty()) {
                write_tile_records(std::cout, covers);
            } else {
                auto f = open_out(out);
                write_tile_records(f, covers);
            }
            if (!svg_out.empty()) {
                auto f = open_out(svg_out);
                write_tiles_svg(f, covers);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        return fail("io", e.what());
    }
    return 0;
}
