#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hypdim/cdisc.hpp"

namespace hypdim {

// Tile P_index at the given level. Bit j of the index selects the half plane
// of the j-th inverse image: bit 0 picks the starting half-disc (1 = upper),
// bit j >= 1 the branch taken by the j-th application of p_c^{-1}
// (1 = upper half plane). The most recent inverse step is the top bit.
struct TileCode {
    int level = 1;
    std::uint64_t index = 0;

    TileCode() = default;
    TileCode(int level, std::uint64_t index);

    bool bit(int j) const { return ((index >> j) & 1u) != 0; }
    // Half plane of the tile itself (top bit).
    bool upper() const { return bit(level - 1); }
    // "b_{k-1} ... b_0".
    std::string bits() const;

    // The tile at level+1 reached by one more inverse step.
    TileCode child(bool upper_branch) const;
    // The level-(k-1) tile that p_c maps this tile onto (drop the newest bit).
    TileCode image() const;
    // The level-(k-1) tile containing this tile (drop the oldest bit).
    TileCode parent() const;

    friend bool operator==(const TileCode&, const TileCode&) = default;
};

struct TileCover {
    TileCode code;
    std::vector<ExtendedDisc> discs;
    ParamEnclosure param;
};

// lo_s <= max{|z| : z in tile} <= hi_s.
struct DistanceBounds {
    double lo_s = 0.0;
    double hi_s = 0.0;

    friend bool operator==(const DistanceBounds&, const DistanceBounds&) = default;
};

struct TileConfig {
    int n_discs = 39;
    double split_tol = 0.01;
    int threads = 1;
};

// Level-1 covers of the upper (code 1) and lower (code 0) components of
// D_2(0) minus [-2, 2]: n_discs Full discs along the half circle plus the
// collapsed disc <0, 2>_x. Returned as (upper, lower).
std::pair<TileCover, TileCover> initial_covers(int n_discs, const ParamEnclosure& param);

// One inverse step: cover of the child tile cover.code.child(upper_branch).
TileCover refine(const TileCover& cover, bool upper_branch, double split_tol);
// Allocation-reusing form of refine used by the tree traversal.
void refine_into(const TileCover& cover, bool upper_branch, double split_tol, TileCover& out);

// Throws std::invalid_argument on an empty cover.
DistanceBounds distance_bounds(const TileCover& cover);

// Number of tiles in the fourth quadrant at a level: 2^(level-2).
std::uint64_t quarter_count(int level);

// Map any tile index at a level onto its fourth-quadrant representative using
// the reflections z -> conj(z) and z -> -z.
std::uint64_t quarter_representative(int level, std::uint64_t index);

// Walk the inverse-iteration tree to `level` and hand every leaf cover to the
// visitor. With quarter_only, only the fourth-quadrant tiles
// (index < 2^(level-2)) are produced. The visitor is called concurrently from
// worker threads, each time with a distinct code.
void for_each_tile(int level, const ParamEnclosure& param, const TileConfig& cfg, bool quarter_only,
                   const std::function<void(const TileCover&)>& visitor);

// Distance bounds of all fourth-quadrant tiles at `level`, indexed by tile
// index. Requires level >= 2.
std::vector<DistanceBounds> quarter_tiles(int level, const ParamEnclosure& param, const TileConfig& cfg);

// Bounds of any tile at `level` from the quarter table.
DistanceBounds mirrored_bounds(const std::vector<DistanceBounds>& quarter, int level, std::uint64_t index);

// One text record per disc: "code,kind,re,im,r" with shortest round-trip
// decimals; kind is one of full, x, y.
std::string format_disc_record(const TileCode& code, const ExtendedDisc& d);

} // namespace hypdim
