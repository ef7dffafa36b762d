#include "hypdim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hypdim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMargin = 50.0;

void header(std::ostream& os, double w, double h)
{
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

} // namespace

void write_staircase_svg(std::ostream& os, const std::vector<StairRecord>& records, double reference)
{
    std::vector<StairRecord> ok;
    for (const auto& r : records)
        if (!std::isnan(r.bound)) ok.push_back(r);
    std::sort(ok.begin(), ok.end(), [](const auto& a, const auto& b) { return a.c_lo < b.c_lo; });

    header(os, kWidth, kHeight);
    if (ok.empty()) {
        os << "</svg>\n";
        return;
    }

    double x0 = ok.front().c_lo, x1 = ok.back().c_hi;
    double y0 = ok.front().bound, y1 = y0;
    for (const auto& r : ok) {
        x0 = std::min(x0, r.c_lo);
        x1 = std::max(x1, r.c_hi);
        y0 = std::min(y0, r.bound);
        y1 = std::max(y1, r.bound);
    }
    if (!std::isnan(reference)) {
        y0 = std::min(y0, reference);
        y1 = std::max(y1, reference);
    }
    if (x1 - x0 <= 0.0) {
        x0 -= 1e-6;
        x1 += 1e-6;
    }
    const double pad = std::max(1e-3, 0.05 * (y1 - y0));
    y0 -= pad;
    y1 += pad;

    auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
    auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

    os << "<g stroke=\"black\" fill=\"none\">\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
       << kHeight - kMargin << "\"/>\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
       << "\"/>\n</g>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 15 << "\">c = " << x0 << "</text>\n"
       << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"end\">c = " << x1
       << "</text>\n"
       << "<text x=\"5\" y=\"" << kMargin - 10 << "\">" << y1 << "</text>\n"
       << "<text x=\"5\" y=\"" << kHeight - kMargin + 15 << "\">" << y0 << "</text>\n</g>\n";

    if (!std::isnan(reference))
        os << "<line x1=\"" << kMargin << "\" y1=\"" << sy(reference) << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
           << sy(reference) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

    os << "<g stroke=\"blue\" stroke-width=\"2\">\n";
    for (const auto& r : ok)
        os << "<line x1=\"" << sx(r.c_lo) << "\" y1=\"" << sy(r.bound) << "\" x2=\"" << sx(r.c_hi) << "\" y2=\""
           << sy(r.bound) << "\"" << (r.certified ? "" : " stroke=\"orange\"") << "/>\n";
    os << "</g>\n</svg>\n";
}

void write_tiles_svg(std::ostream& os, const std::vector<TileCover>& covers)
{
    constexpr double size = 800.0;
    constexpr double extent = 2.1;
    auto sx = [](double x) { return (x + extent) / (2 * extent) * size; };
    auto sy = [](double y) { return (extent - y) / (2 * extent) * size; };
    const double scale = size / (2 * extent);

    header(os, size, size);
    os << "<g fill=\"none\" stroke-width=\"0.5\">\n";
    for (const auto& cover : covers) {
        const char* color = cover.code.upper() ? "blue" : "red";
        for (const auto& d : cover.discs) {
            const auto m = d.center();
            switch (d.kind()) {
            case DiscKind::Full:
                os << "<circle cx=\"" << sx(m.real()) << "\" cy=\"" << sy(m.imag()) << "\" r=\"" << d.radius() * scale
                   << "\" stroke=\"" << color << "\"/>\n";
                break;
            case DiscKind::AxisX:
                os << "<line x1=\"" << sx(m.real() - d.radius()) << "\" y1=\"" << sy(0) << "\" x2=\""
                   << sx(m.real() + d.radius()) << "\" y2=\"" << sy(0) << "\" stroke=\"" << color << "\"/>\n";
                break;
            case DiscKind::AxisY:
                os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(m.imag() - d.radius()) << "\" x2=\"" << sx(0)
                   << "\" y2=\"" << sy(m.imag() + d.radius()) << "\" stroke=\"" << color << "\"/>\n";
                break;
            }
        }
    }
    os << "</g>\n</svg>\n";
}

} // namespace hypdim
