#pragma once

#include <iosfwd>
#include <vector>

#include "hypdim/records.hpp"
#include "hypdim/tiles.hpp"

namespace hypdim {

// Piecewise constant plot of the certified bounds over c, with a dashed
// reference line at `reference` (skipped when NaN). Failed pieces are left out.
void write_staircase_svg(std::ostream& os, const std::vector<StairRecord>& records, double reference);

// Tile covers as circles (Full) and segments (AxisX / AxisY) in the square
// [-2.1, 2.1]^2: blue for tiles in the upper half plane, red for the lower.
void write_tiles_svg(std::ostream& os, const std::vector<TileCover>& covers);

} // namespace hypdim
