#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypdim/interval.hpp"
#include "hypdim/tiles.hpp"

namespace hypdim {

// One non-zero of the full 2^k x 2^k matrix.
struct MatrixEntry {
    std::uint64_t row;
    std::uint64_t col;
    Interval value;
};

// McMullen matrix at level k. The level-(k+1) tile l = 2i + b sits inside
// tile i and maps onto tile l mod 2^k, so row i has exactly two non-zeros, in
// columns 2i mod 2^k and (2i+1) mod 2^k. Only the 2^(k-1) entries of the
// fourth-quadrant rows are stored; every other entry is a reflection.
class McMullenMatrix {
public:
    McMullenMatrix() = default;
    McMullenMatrix(int level, std::vector<Interval> g);

    int level() const { return level_; }
    std::size_t dim() const { return std::size_t{1} << level_; }
    const std::vector<Interval>& g() const { return g_; }
    double max_diam() const { return max_diam_; }

    // Value of the entry contributed by level-(k+1) tile l.
    const Interval& entry(std::uint64_t l) const { return g_[quarter_representative(level_ + 1, l)]; }
    std::vector<MatrixEntry> entries() const;

private:
    int level_ = 0;
    std::vector<Interval> g_;
    double max_diam_ = 0.0;
};

// Point-valued matrix with the same pattern and storage scheme.
struct PointMatrix {
    int level = 0;
    std::vector<double> g;

    std::size_t dim() const { return std::size_t{1} << level; }
    double entry(std::uint64_t l) const { return g[quarter_representative(level + 1, l)]; }
};

struct BuildStats {
    std::uint64_t tiles_at_depth = 0; // 2^(k-2): quarter of level k
    std::uint64_t tiles_computed = 0; // 2^(k-1): quarter of level k+1
    double seconds = 0.0;
};

// Entries [1/(2 hi_s), 1/(2 lo_s)] from the fourth-quadrant tiles of level
// k+1. Throws std::runtime_error("tile touches origin") when some lo_s is 0.
McMullenMatrix build(int k, const ParamEnclosure& param, const TileConfig& cfg, BuildStats* stats = nullptr);
McMullenMatrix from_quarter_bounds(int k, const std::vector<DistanceBounds>& quarter);

// Entrywise power m^t with outward rounding.
McMullenMatrix pow_entries(const McMullenMatrix& m, double t);

PointMatrix lo_matrix(const McMullenMatrix& m);
PointMatrix hi_matrix(const McMullenMatrix& m);
// Entrywise lo^t in round-to-nearest; for non-rigorous iteration only.
PointMatrix lo_matrix_pow(const McMullenMatrix& m, double t);

// out = A v. Each component is the two-term sum in column order, so results
// do not depend on the thread count.
void matvec(const PointMatrix& a, std::span<const double> v, std::span<double> out, int threads = 1);
// Interval product with outward rounding.
void matvec(const McMullenMatrix& a, std::span<const double> v, std::span<Interval> out, int threads = 1);

} // namespace hypdim
