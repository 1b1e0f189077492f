#include "doco/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "doco/errors.hpp"

namespace doco {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

// round a soft tick spacing to the usual 1-2-5 ladder
double nice_step(double span, int target_ticks) {
    double raw = span / std::max(1, target_ticks);
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double frac = raw / mag;
    double step = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
    return step * mag;
}

std::string fmt(double v) {
    char buf[64];
    if (v == 0.0) return "0";
    double a = std::abs(v);
    if (a >= 1e5 || a < 1e-3) std::snprintf(buf, sizeof buf, "%.2e", v);
    else std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

void write_svg_chart(const std::string& path, const std::vector<PlotSeries>& series,
                     const PlotOptions& options) {
    if (series.empty()) throw ConfigError("write_svg_chart: no series to plot");
    for (const PlotSeries& s : series) {
        if (s.x.empty() || s.x.size() != s.y.size())
            throw ConfigError("write_svg_chart: series '" + s.label + "' empty or x/y mismatch");
    }

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const PlotSeries& s : series) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const int W = options.width, H = options.height;
    const int ml = 80, mr = 24, mt = 40, mb = 56;
    const double pw = W - ml - mr, ph = H - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << ' ' << H << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='16' "
        << "font-family='sans-serif'>" << options.title << "</text>\n";

    // axes + ticks
    out << "<g font-size='11' font-family='sans-serif' fill='#333'>\n";
    double xstep = nice_step(xmax - xmin, 8);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep; x += xstep) {
        double X = px(x);
        out << "<line x1='" << X << "' y1='" << mt << "' x2='" << X << "' y2='" << mt + ph
            << "' stroke='#ddd'/>\n"
            << "<text x='" << X << "' y='" << mt + ph + 16 << "' text-anchor='middle'>" << fmt(x)
            << "</text>\n";
    }
    double ystep = nice_step(ymax - ymin, 6);
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep; y += ystep) {
        double Y = py(y);
        out << "<line x1='" << ml << "' y1='" << Y << "' x2='" << ml + pw << "' y2='" << Y
            << "' stroke='#ddd'/>\n"
            << "<text x='" << ml - 6 << "' y='" << Y + 4 << "' text-anchor='end'>" << fmt(y)
            << "</text>\n";
    }
    out << "</g>\n"
        << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
        << "' fill='none' stroke='#333'/>\n"
        << "<text x='" << ml + pw / 2 << "' y='" << H - 12
        << "' text-anchor='middle' font-size='13' font-family='sans-serif'>" << options.x_label
        << "</text>\n"
        << "<text x='16' y='" << mt + ph / 2
        << "' text-anchor='middle' font-size='13' font-family='sans-serif' transform='rotate(-90 16 "
        << mt + ph / 2 << ")'>" << options.y_label << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.6' points='";
        // thin long series so the file stays small
        std::size_t stride = std::max<std::size_t>(1, s.x.size() / 2000);
        for (std::size_t i = 0; i < s.x.size(); i += stride)
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        if ((s.x.size() - 1) % stride != 0)
            out << px(s.x.back()) << ',' << py(s.y.back());
        out << "'/>\n";
        double ly = mt + 18 + 18.0 * si;
        out << "<line x1='" << ml + 12 << "' y1='" << ly - 4 << "' x2='" << ml + 40 << "' y2='"
            << ly - 4 << "' stroke='" << color << "' stroke-width='2'/>\n"
            << "<text x='" << ml + 46 << "' y='" << ly
            << "' font-size='12' font-family='sans-serif'>" << s.label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace doco
