#ifndef LSC_SVG_HPP
#define LSC_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "lsc/core.hpp"

namespace lsc {

struct SvgOptions {
    int width = 960;
    int height = 560;
    int margin = 64;
    std::string title;
    std::string x_label = "feature index";
    std::string y_label = "value";
};

namespace detail {

// Okabe-Ito palette, cycled per cluster.
inline const std::vector<std::string>& svg_palette() {
    static const std::vector<std::string> colors = {
        "#0072B2", "#D55E00", "#009E73", "#CC79A7",
        "#E69F00", "#56B4E9", "#F0E442", "#999999",
    };
    return colors;
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Round step for roughly `target` axis ticks over a span.
inline double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0}) {
        if (raw <= mult * mag) return mult * mag;
    }
    return 10.0 * mag;
}

struct Axis {
    double lo, hi;
    double a, b;  // pixel = a * value + b
    double map(double v) const { return a * v + b; }
};

inline Axis make_axis(double lo, double hi, double pix_lo, double pix_hi) {
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double a = (pix_hi - pix_lo) / (hi - lo);
    return {lo, hi, a, pix_lo - a * lo};
}

inline void draw_frame(std::ostringstream& svg, const SvgOptions& opt, const Axis& x,
                       const Axis& y) {
    const int w = opt.width, h = opt.height, mg = opt.margin;
    svg << "<rect x='0' y='0' width='" << w << "' height='" << h << "' fill='white'/>\n";
    svg << "<line x1='" << mg << "' y1='" << h - mg << "' x2='" << w - mg << "' y2='" << h - mg
        << "' stroke='black'/>\n";
    svg << "<line x1='" << mg << "' y1='" << mg << "' x2='" << mg << "' y2='" << h - mg
        << "' stroke='black'/>\n";

    const double xstep = nice_step(x.hi - x.lo, 6);
    for (double t = std::ceil(x.lo / xstep) * xstep; t <= x.hi + 1e-9; t += xstep) {
        const double px = x.map(t);
        svg << "<line x1='" << svg_num(px) << "' y1='" << h - mg << "' x2='" << svg_num(px)
            << "' y2='" << h - mg + 5 << "' stroke='black'/>\n";
        svg << "<text x='" << svg_num(px) << "' y='" << h - mg + 20
            << "' font-size='12' text-anchor='middle'>" << svg_num(t) << "</text>\n";
    }
    const double ystep = nice_step(y.hi - y.lo, 6);
    for (double t = std::ceil(y.lo / ystep) * ystep; t <= y.hi + 1e-9; t += ystep) {
        const double py = y.map(t);
        svg << "<line x1='" << mg - 5 << "' y1='" << svg_num(py) << "' x2='" << mg << "' y2='"
            << svg_num(py) << "' stroke='black'/>\n";
        svg << "<text x='" << mg - 8 << "' y='" << svg_num(py + 4)
            << "' font-size='12' text-anchor='end'>" << svg_num(t) << "</text>\n";
    }

    svg << "<text x='" << (w / 2) << "' y='" << h - mg / 4
        << "' font-size='14' text-anchor='middle'>" << opt.x_label << "</text>\n";
    svg << "<text x='" << mg / 4 << "' y='" << (h / 2)
        << "' font-size='14' text-anchor='middle' transform='rotate(-90 " << mg / 4 << " "
        << h / 2 << ")'>" << opt.y_label << "</text>\n";
    if (!opt.title.empty())
        svg << "<text x='" << (w / 2) << "' y='" << mg / 2
            << "' font-size='16' text-anchor='middle'>" << opt.title << "</text>\n";
}

}  // namespace detail

/// Line-space view: one polyline per sample over feature indices, colored by
/// cluster when labels are given. Output is deterministic for fixed input.
inline std::string line_space_svg(const std::vector<LineSeries>& lines,
                                  const LabelVector* labels, const SvgOptions& opt = {}) {
    std::ostringstream svg;
    const int w = opt.width, h = opt.height, mg = opt.margin;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "'>\n";

    double lo = 0.0, hi = 1.0;
    std::size_t d = 1;
    if (!lines.empty()) {
        lo = hi = lines.front().value(0);
        for (const auto& line : lines) {
            d = std::max(d, line.size());
            for (std::size_t p = 0; p < line.size(); ++p) {
                lo = std::min(lo, line.value(p));
                hi = std::max(hi, line.value(p));
            }
        }
    }
    const auto x = detail::make_axis(1.0, static_cast<double>(d), mg, w - mg);
    const auto y = detail::make_axis(lo, hi, h - mg, mg);
    detail::draw_frame(svg, opt, x, y);

    const auto& palette = detail::svg_palette();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& color =
            labels ? palette[static_cast<std::size_t>((*labels)[i]) % palette.size()]
                   : palette.front();
        svg << "<polyline fill='none' stroke='" << color << "' stroke-opacity='0.6' points='";
        for (std::size_t p = 0; p < lines[i].size(); ++p) {
            if (p) svg << ' ';
            svg << detail::svg_num(x.map(static_cast<double>(lines[i].feature_index(p)))) << ','
                << detail::svg_num(y.map(lines[i].value(p)));
        }
        svg << "'/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

/// Scatter of (x, y) measurements plus a fitted line, for the timing scan.
inline std::string scaling_plot_svg(const std::vector<std::pair<double, double>>& points,
                                    double slope, double intercept, const SvgOptions& opt = {}) {
    std::ostringstream svg;
    const int w = opt.width, h = opt.height, mg = opt.margin;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "'>\n";
    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    if (!points.empty()) {
        xlo = xhi = points.front().first;
        ylo = yhi = points.front().second;
        for (const auto& [px, py] : points) {
            xlo = std::min(xlo, px);
            xhi = std::max(xhi, px);
            ylo = std::min(ylo, py);
            yhi = std::max(yhi, py);
        }
        ylo = std::min(ylo, 0.0);
    }
    const auto x = detail::make_axis(xlo, xhi, mg, w - mg);
    const auto y = detail::make_axis(ylo, yhi, h - mg, mg);
    detail::draw_frame(svg, opt, x, y);

    svg << "<line x1='" << detail::svg_num(x.map(x.lo)) << "' y1='"
        << detail::svg_num(y.map(slope * x.lo + intercept)) << "' x2='"
        << detail::svg_num(x.map(x.hi)) << "' y2='"
        << detail::svg_num(y.map(slope * x.hi + intercept))
        << "' stroke='#D55E00' stroke-dasharray='6,4'/>\n";
    for (const auto& [px, py] : points)
        svg << "<circle cx='" << detail::svg_num(x.map(px)) << "' cy='"
            << detail::svg_num(y.map(py)) << "' r='4' fill='#0072B2'/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace lsc

#endif  // LSC_SVG_HPP
