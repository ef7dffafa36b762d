#include "hypdim/records.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypdim {

namespace {

constexpr const char* kHeader = "c_lo,c_hi,depth,bound,certified,max_diam,wall_ms";

double parse_double(const std::string& s)
{
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

// NaN compares unequal to itself; JSON has no NaN, so map it to null.
nlohmann::json number_or_null(double x)
{
    if (std::isnan(x)) return nullptr;
    return x;
}

double from_json_number(const nlohmann::json& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

} // namespace

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

void write_csv(std::ostream& os, const std::vector<StairRecord>& records)
{
    os << kHeader << '\n';
    for (const auto& r : records)
        os << format_double(r.c_lo) << ',' << format_double(r.c_hi) << ',' << r.depth << ','
           << format_double(r.bound) << ',' << (r.certified ? 1 : 0) << ',' << format_double(r.max_diam) << ','
           << format_double(r.wall_ms) << '\n';
}

std::vector<StairRecord> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != kHeader) throw std::runtime_error("missing or unexpected CSV header");
    std::vector<StairRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 7) throw std::runtime_error("CSV row needs 7 fields: " + line);
        StairRecord r;
        r.c_lo = parse_double(f[0]);
        r.c_hi = parse_double(f[1]);
        r.depth = std::stoi(f[2]);
        r.bound = parse_double(f[3]);
        r.certified = f[4] == "1";
        r.max_diam = parse_double(f[5]);
        r.wall_ms = parse_double(f[6]);
        if (std::isnan(r.bound)) r.error = "failed";
        out.push_back(r);
    }
    return out;
}

void write_json(std::ostream& os, const std::vector<StairRecord>& records)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"c_lo", r.c_lo},
                       {"c_hi", r.c_hi},
                       {"depth", r.depth},
                       {"bound", number_or_null(r.bound)},
                       {"certified", r.certified},
                       {"max_diam", number_or_null(r.max_diam)},
                       {"wall_ms", r.wall_ms},
                       {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)}});
    }
    os << arr.dump(2) << '\n';
}

std::vector<StairRecord> read_json(std::istream& is)
{
    const auto arr = nlohmann::json::parse(is);
    std::vector<StairRecord> out;
    for (const auto& j : arr) {
        StairRecord r;
        r.c_lo = j.at("c_lo").get<double>();
        r.c_hi = j.at("c_hi").get<double>();
        r.depth = j.at("depth").get<int>();
        r.bound = from_json_number(j.at("bound"));
        r.certified = j.at("certified").get<bool>();
        r.max_diam = from_json_number(j.at("max_diam"));
        r.wall_ms = j.at("wall_ms").get<double>();
        if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
        out.push_back(r);
    }
    return out;
}

} // namespace hypdim
