#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypdim/kneading.hpp"
#include "hypdim/mcmullen.hpp"
#include "hypdim/records.hpp"
#include "hypdim/spectral.hpp"

namespace hypdim {

struct RunConfig {
    // Tile depth d: the matrix is M^(d-1), whose entries come from the 2^d
    // tiles of level d (of which 2^(d-2) are computed).
    int depth = 18;
    int n_discs = 39;
    double split_tol = 0.01;
    double eps = 1e-10;
    int threads = 1;
    double center = -1.25;
    double radius = 1e-5;
    double t_lo = 0.1;
    double t_hi = 2.0;

    int matrix_level() const { return depth - 1; }
    TileConfig tile_config() const { return {n_discs, split_tol, threads}; }
    // Throws std::invalid_argument on out-of-range fields.
    void check() const;
};

// A failure inside one stage of a run; stage is one of "config", "tiles",
// "bracket", "bisect", "confirm".
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct StageTime {
    double wall_s = 0.0;
    double cpu_s = 0.0;
};

struct BoundReport {
    RunConfig cfg;
    std::uint64_t tiles_computed = 0;
    double max_diam = 0.0;
    BisectResult bisect;
    BoundResult result;
    StageTime tiles, estimate, confirm;
};

// Build the matrix, bisect for delta_star and certify it, writing a stage log
// to `log`. Throws StageError.
BoundReport run_bound(const RunConfig& cfg, std::ostream& log);

// Same pipeline on a prebuilt matrix (stages "bracket", "bisect", "confirm").
void run_spectral_stages(const McMullenMatrix& m, const RunConfig& cfg, BoundReport& rep, std::ostream* log);

struct SweepPlan {
    double c_lo = -1.402;
    double c_hi = -1.350;
    int pieces = 26;
    // Halve pieces whose certified bound differs from a neighbour's by more
    // than adaptive_gap, for up to adaptive_rounds rounds (0 disables).
    int adaptive_rounds = 0;
    double adaptive_gap = 0.02;
};

// One record per piece; failures are recorded, not thrown. Pieces run
// concurrently on cfg.threads workers, each single-threaded.
std::vector<StairRecord> run_sweep(const SweepPlan& plan, const RunConfig& cfg, std::ostream* log);

// Tile covers of every tile at `level`, ordered by index.
std::vector<TileCover> all_tiles(int level, const RunConfig& cfg);
void write_tile_records(std::ostream& os, const std::vector<TileCover>& covers);
void write_matrix_records(std::ostream& os, const McMullenMatrix& m);

std::string format_enclosure(const ParamEnclosure& p);
void log_feig(std::ostream& os, const UnimodalPermutation& perm, const FeigResult& r);

} // namespace hypdim
