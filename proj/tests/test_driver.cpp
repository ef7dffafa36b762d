#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "hypdim/driver.hpp"
#include "hypdim/svg.hpp"
#include "oracles.hpp"

using namespace hypdim;

namespace {

std::filesystem::path scratch_dir()
{
    auto p = std::filesystem::temp_directory_path() / "hypdim_test_driver";
    std::filesystem::create_directories(p);
    return p;
}

int run_cli(const std::string& args, std::string* output = nullptr)
{
    const auto out = scratch_dir() / "cli_output.txt";
    const std::string cmd = std::string(HYPDIM_CLI) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream f(out);
        std::stringstream ss;
        ss << f.rdbuf();
        *output = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("shortest round-trip decimals")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-1.25) == "-1.25");
    CHECK(format_double(std::nan("")) == "nan");
    const double x = 1.3374573250854169;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("record round trips")
{
    std::vector<StairRecord> recs = {
        {-1.402, -1.4, 17, 1.3393, true, 0.02, 1234.5, {}},
        {-1.4, -1.398, 17, 1.0 / 3.0, false, 0.1 + 0.2, 0.0, {}},
        {-1.398, -1.396, 17, std::nan(""), false, std::nan(""), 3.0, "bracket: invalid bracket"},
    };
    std::stringstream csv;
    write_csv(csv, recs);
    CHECK(csv.str().rfind("c_lo,c_hi,depth,bound,certified,max_diam,wall_ms\n", 0) == 0);
    const auto back = read_csv(csv);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == recs[0]);
    CHECK(back[1] == recs[1]);
    CHECK(std::isnan(back[2].bound));
    CHECK(!back[2].error.empty());

    std::stringstream js;
    write_json(js, recs);
    const auto jb = read_json(js);
    REQUIRE(jb.size() == 3);
    CHECK(jb[0] == recs[0]);
    CHECK(jb[1] == recs[1]);
    CHECK(std::isnan(jb[2].bound));
    CHECK(jb[2].error == recs[2].error);
}

TEST_CASE("bound at a small depth agrees with the dense oracle")
{
    RunConfig cfg;
    cfg.depth = 4;
    cfg.center = 0.0;
    cfg.radius = 0.0;
    std::ostringstream log;
    const auto rep = run_bound(cfg, log);
    CHECK(rep.result.certified);
    CHECK(rep.bisect.delta_star > 0.0);
    CHECK(rep.bisect.delta_star < 2.0);
    const auto ref = oracle::dense_delta(3, oracle::all_bounds(4, {0.0, 0.0}));
    CHECK(std::fabs(rep.bisect.delta_star - ref) < 1e-9L);
    // Closed form for c = 0 with exact tiles would be 1/(1 + 2^-k); the
    // cover overestimates |z| so the bound stays below it.
    CHECK(rep.bisect.delta_star < 1.0 / (1.0 + 1.0 / 8.0));

    const std::string s = log.str();
    CHECK(s.find("Computing 4 tiles to depth 4") != std::string::npos);
    CHECK(s.find("Matrix M^(3): 8 rows, 16 non-zeros") != std::string::npos);
    CHECK(s.find("maxDiam(MM) = ") != std::string::npos);
    CHECK(s.find("tol = 1.0e-10") != std::string::npos);
    CHECK(s.find("hd_lo = ") != std::string::npos);
    CHECK(s.find("Confirmed that HD >= ") != std::string::npos);
    CHECK(s.find("Test vector: ") != std::string::npos);
}

TEST_CASE("stage errors")
{
    RunConfig cfg;
    cfg.depth = 6;
    cfg.t_lo = 1.9;
    std::ostringstream log;
    try {
        run_bound(cfg, log);
        FAIL("expected a bracket failure");
    } catch (const StageError& e) {
        CHECK(e.stage() == "bracket");
    }
    cfg = {};
    cfg.depth = 2;
    try {
        run_bound(cfg, log);
        FAIL("expected a config failure");
    } catch (const StageError& e) {
        CHECK(e.stage() == "config");
    }
}

TEST_CASE("sweep records and refinement")
{
    RunConfig cfg;
    cfg.depth = 9;
    SweepPlan plan{-1.402, -1.350, 5, 0, 0.02};
    const auto recs = run_sweep(plan, cfg, nullptr);
    REQUIRE(recs.size() == 5);
    CHECK(recs.front().c_lo == -1.402);
    CHECK(recs.back().c_hi == -1.350);
    cfg.depth = 10;
    const auto finer = run_sweep(plan, cfg, nullptr);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].certified);
        CHECK(recs[i].c_hi == doctest::Approx(i + 1 < recs.size() ? recs[i + 1].c_lo : -1.350));
        CHECK(recs[i].bound < 2.0);
        CHECK(recs[i].bound <= finer[i].bound);
    }

    // A degenerate piece at c = 0 (a circle) reports a value in (0, 1].
    const auto zero = run_sweep({0.0, 0.0, 1, 0, 0.02}, cfg, nullptr);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].bound > 0.0);
    CHECK(zero[0].bound <= 1.0);

    // Failures are recorded per piece.
    RunConfig bad = cfg;
    bad.t_hi = 0.2;
    const auto failed = run_sweep({-1.3, -1.2, 2, 0, 0.02}, bad, nullptr);
    REQUIRE(failed.size() == 2);
    for (const auto& r : failed) {
        CHECK(std::isnan(r.bound));
        CHECK(r.error.rfind("bracket: ", 0) == 0);
    }

    // Adaptive halving around a jump.
    const auto adaptive = run_sweep({-1.80, -1.70, 2, 1, 1e-6}, cfg, nullptr);
    CHECK(adaptive.size() == 4);

    CHECK_THROWS_AS(run_sweep({-2.5, 0.0, 2, 0, 0.02}, cfg, nullptr), std::invalid_argument);
}

TEST_CASE("svg emitters")
{
    std::ostringstream os;
    write_staircase_svg(os, {{-1.4, -1.39, 10, 1.3, true, 0.1, 1, {}}, {-1.39, -1.38, 10, 1.31, false, 0.1, 1, {}}},
                        4.0 / 3.0);
    const auto s = os.str();
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("stroke-dasharray") != std::string::npos);
    CHECK(s.find("orange") != std::string::npos);

    RunConfig cfg;
    cfg.center = -1.4011551890;
    cfg.radius = 1e-10;
    const auto covers = all_tiles(4, cfg);
    CHECK(covers.size() == 16);
    std::ostringstream t;
    write_tiles_svg(t, covers);
    CHECK(t.str().find("blue") != std::string::npos);
    CHECK(t.str().find("red") != std::string::npos);
}

TEST_CASE("cli exit codes and outputs")
{
    const auto dir = scratch_dir();
    std::string out;
    CHECK(run_cli("bound --depth 8 --center -1.25 --radius 1e-5 --out " + (dir / "b.csv").string(), &out) == 0);
    CHECK(out.find("Confirmed that HD >= ") != std::string::npos);
    const auto rec = slurp(dir / "b.csv");
    CHECK(rec.rfind("c_lo,c_hi,depth,bound,certified,max_diam,wall_ms\n", 0) == 0);

    CHECK(run_cli("bound --depth 6 --t-lo 1.9", &out) == 2);
    CHECK(out.find("error [bracket]") != std::string::npos);
    CHECK(run_cli("bound --depth 1", &out) == 2);
    CHECK(out.find("error [config]") != std::string::npos);

    // Sweeps exit 0 only when every piece is certified.
    CHECK(run_cli("sweep --lo -1.3 --hi -1.2 --pieces 2 --depth 8 --format json --out " + (dir / "s.json").string())
          == 0);
    CHECK(slurp(dir / "s.json").find("\"certified\"") != std::string::npos);
    CHECK(run_cli("sweep --lo -1.3 --hi -1.2 --pieces 1 --depth 8 --t-hi 0.2") == 1);

    CHECK(run_cli("feig --perm 2,0,5,3,1,4", &out) == 0);
    CHECK(out.find("-1.78121680") != std::string::npos);
    CHECK(run_cli("feig --perm 0,1", &out) == 2);

    CHECK(run_cli("tiles --level 2 --center -1.25 --radius 0 --out " + (dir / "t.csv").string() + " --svg "
                  + (dir / "t.svg").string())
          == 0);
    std::istringstream lines(slurp(dir / "t.csv"));
    std::string line;
    std::getline(lines, line);
    CHECK(line == "code,kind,re,im,r");
    std::set<std::string> codes;
    while (std::getline(lines, line)) codes.insert(line.substr(0, line.find(',')));
    CHECK(codes == std::set<std::string>{"00", "01", "10", "11"});
    CHECK(slurp(dir / "t.svg").rfind("<svg", 0) == 0);

    CHECK(run_cli("tiles --level 17 --svg " + (dir / "big.svg").string()) == 2);

    // Environment overrides.
    CHECK(run_cli("bound --depth 1 --center 5") == 2);
    CHECK(std::system(("HYPDIM_DEPTH=5 " + std::string(HYPDIM_CLI) + " bound > /dev/null").c_str()) == 0);
}

TEST_CASE("bounds are bitwise identical across worker counts")
{
    RunConfig cfg;
    cfg.depth = 14;
    cfg.center = -1.4011551890;
    cfg.radius = 1e-10;
    std::ostringstream log;
    cfg.threads = 1;
    const auto one = run_bound(cfg, log);
    for (int threads : {4, 8}) {
        cfg.threads = threads;
        const auto rep = run_bound(cfg, log);
        CHECK(rep.bisect.delta_star == one.bisect.delta_star);
        CHECK(rep.result.certified_lower == one.result.certified_lower);
        CHECK(rep.max_diam == one.max_diam);
        CHECK(rep.bisect.vector == one.bisect.vector);
    }
}
