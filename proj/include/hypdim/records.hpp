#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypdim {

// One piece of a parameter sweep: a certified lower bound valid for every
// c in [c_lo, c_hi]. A failed piece has bound = NaN and a non-empty error.
struct StairRecord {
    double c_lo = 0.0;
    double c_hi = 0.0;
    int depth = 0;
    double bound = 0.0;
    bool certified = false;
    double max_diam = 0.0;
    double wall_ms = 0.0;
    std::string error;

    friend bool operator==(const StairRecord&, const StairRecord&) = default;
};

// Shortest decimal that reads back to the same double ("nan" for NaN).
std::string format_double(double x);

// CSV with header c_lo,c_hi,depth,bound,certified,max_diam,wall_ms. The error
// text is not part of the CSV schema; a failed row is recognizable by bound=nan.
void write_csv(std::ostream& os, const std::vector<StairRecord>& records);
std::vector<StairRecord> read_csv(std::istream& is);

// JSON array of objects with the CSV fields plus "error" (null on success).
void write_json(std::ostream& os, const std::vector<StairRecord>& records);
std::vector<StairRecord> read_json(std::istream& is);

} // namespace hypdim
