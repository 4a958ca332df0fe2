#include "chordarea/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "chordarea/error.hpp"
#include "chordarea/io.hpp"

namespace chordarea {

namespace {

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    /// Grows by `frac` of the larger side on every edge.
    void pad(double frac) {
        const double m = frac * std::max({x1 - x0, y1 - y0, 1e-12});
        x0 -= m;
        y0 -= m;
        x1 += m;
        y1 += m;
    }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

/// SVG y grows downward; data coordinates are flipped inside a group.
std::string open_svg(const Box& b, double pixels = 800.0) {
    const double aspect = b.height() / b.width();
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(pixels) + "\" height=\"" +
         fixed(pixels * aspect) + "\" viewBox=\"" + fixed(b.x0) + " " + fixed(-b.y1) + " " + fixed(b.width()) + " " +
         fixed(b.height()) + "\">\n";
    s += "<g transform=\"scale(1,-1)\">\n";
    return s;
}

std::string close_svg() { return "</g>\n</svg>\n"; }

std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style, bool closed) {
    std::string s = closed ? "<polygon points=\"" : "<polyline points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0) {
            s += ' ';
        }
        s += fixed(pts[k].first) + "," + fixed(pts[k].second);
    }
    s += "\" " + style + "/>\n";
    return s;
}

std::string line(double x0, double y0, double x1, double y1, const std::string& style) {
    return "<line x1=\"" + fixed(x0) + "\" y1=\"" + fixed(y0) + "\" x2=\"" + fixed(x1) + "\" y2=\"" + fixed(y1) +
           "\" " + style + "/>\n";
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
    if (name == "curve_with_chords") {
        return PlotKind::curve_with_chords;
    }
    if (name == "ratio_vs_n") {
        return PlotKind::ratio_vs_n;
    }
    if (name == "margin_bars") {
        return PlotKind::margin_bars;
    }
    throw GeometryError(ErrorCode::InvalidSpec, "unknown plot kind '" + std::string(name) + "'");
}

std::string svg_curve_with_chords(const ClosedCurve& curve, std::size_t stride) {
    if (stride == 0) {
        throw GeometryError(ErrorCode::InvalidSpec, "chord stride must be >= 1");
    }
    Box box;
    for (const auto& p : curve.points()) {
        box.add(p.x, p.y);
    }
    box.pad(0.05);
    const double stroke = 0.002 * std::max(box.width(), box.height());
    std::string s = open_svg(box);
    for (std::size_t i = 0; i < curve.size(); i += stride) {
        const Vec3& a = curve[i];
        const Vec3& b = curve[curve.antipode(i)];
        s += line(a.x, a.y, b.x, b.y, "stroke=\"#c0392b\" stroke-width=\"" + fixed(0.5 * stroke) + "\"");
    }
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : curve.points()) {
        pts.emplace_back(p.x, p.y);
    }
    s += polyline(pts, "fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"" + fixed(stroke) + "\"", true);
    return s + close_svg();
}

std::string svg_ratio_vs_n(const std::vector<SweepRow>& rows) {
    if (rows.empty()) {
        throw GeometryError(ErrorCode::InvalidSpec, "sweep table has no rows");
    }
    // log2(n) on the x axis.
    Box box;
    int nmin = rows.front().n, nmax = rows.front().n;
    for (const auto& r : rows) {
        nmin = std::min(nmin, r.n);
        nmax = std::max(nmax, r.n);
        box.add(std::log2(r.n), r.ratio);
        box.add(std::log2(r.n), r.bound);
    }
    box.add(box.x0, 2.0);
    box.pad(0.05);
    const double stroke = 0.004 * std::max(box.width(), box.height());
    std::string s = open_svg(box);
    s += line(box.x0, 2.0, box.x1, 2.0, "stroke=\"#888888\" stroke-dasharray=\"" + fixed(4 * stroke) +
                                            "\" stroke-width=\"" + fixed(stroke) + "\"");
    std::vector<std::pair<double, double>> bound;
    const int steps = 200;
    const double lo = std::log2(nmin), hi = std::log2(std::max(nmax, nmin + 1));
    for (int k = 0; k <= steps; ++k) {
        const double x = lo + (hi - lo) * k / steps;
        bound.emplace_back(x, 2.0 + 47.0 / std::exp2(x));
    }
    s += polyline(bound, "fill=\"none\" stroke=\"#7f8c8d\" stroke-width=\"" + fixed(stroke) + "\"", false);
    std::vector<std::pair<double, double>> ratio;
    for (const auto& r : rows) {
        ratio.emplace_back(std::log2(r.n), r.ratio);
    }
    s += polyline(ratio, "fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"" + fixed(stroke) + "\"", false);
    for (const auto& [x, y] : ratio) {
        s += "<circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(y) + "\" r=\"" + fixed(3 * stroke) +
             "\" fill=\"#1f3a93\"/>\n";
    }
    return s + close_svg();
}

std::string svg_margin_bars(const std::vector<MarginBar>& bars) {
    if (bars.empty()) {
        throw GeometryError(ErrorCode::InvalidSpec, "no applicable verdicts to plot");
    }
    double extent = 0.0;
    for (const auto& b : bars) {
        extent = std::max(extent, std::abs(b.margin));
    }
    if (!(extent > 0.0)) {
        extent = 1.0;
    }
    const double rows = static_cast<double>(bars.size());
    Box box;
    box.add(-1.0, 0.0);
    box.add(1.0, rows);
    box.pad(0.05);
    std::string s = open_svg(box, 600.0);
    for (std::size_t k = 0; k < bars.size(); ++k) {
        const double w = bars[k].margin / extent;
        const double y = rows - static_cast<double>(k) - 0.85;
        s += "<rect x=\"" + fixed(std::min(0.0, w)) + "\" y=\"" + fixed(y) + "\" width=\"" + fixed(std::abs(w)) +
             "\" height=\"0.7\" fill=\"" + (bars[k].holds ? "#27ae60" : "#c0392b") + "\"><title>" + bars[k].name +
             " " + format_number(bars[k].margin) + "</title></rect>\n";
    }
    s += line(0.0, 0.0, 0.0, rows, "stroke=\"#000000\" stroke-width=\"0.005\"");
    return s + close_svg();
}

void render_svg(const PlotSpec& spec) {
    if (spec.inputs.empty() || spec.output.empty()) {
        throw GeometryError(ErrorCode::InvalidSpec, "plot needs an input and an output path");
    }
    const auto& input = spec.inputs.front();
    if (!std::filesystem::exists(input)) {
        throw GeometryError(ErrorCode::InvalidSpec, "missing input " + input.string());
    }
    std::string svg;
    switch (spec.kind) {
        case PlotKind::curve_with_chords: {
            const CurveFile file = read_curve_file(input);
            const ClosedCurve curve = load_curve(input, file.points.size() % 2 == 0 && file.points.size() >= 8
                                                            ? file.points.size()
                                                            : 4096);
            svg = svg_curve_with_chords(curve, spec.chord_stride);
            break;
        }
        case PlotKind::ratio_vs_n:
            svg = svg_ratio_vs_n(read_sweep_csv(input));
            break;
        case PlotKind::margin_bars: {
            std::vector<MarginBar> bars;
            try {
                const auto doc = nlohmann::json::parse(read_text(input));
                for (const auto& [name, v] : doc.at("verdicts").items()) {
                    if (v.at("applicable").get<bool>()) {
                        bars.push_back({name, v.at("margin").get<double>(), v.at("holds").get<bool>()});
                    }
                }
            } catch (const nlohmann::json::exception& e) {
                throw GeometryError(ErrorCode::ParseError, input.string() + ": " + e.what());
            }
            svg = svg_margin_bars(bars);
            break;
        }
    }
    write_text(spec.output, svg);
}

}  // namespace chordarea
