#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chordarea/curve.hpp"
#include "chordarea/report.hpp"

namespace chordarea {

enum class PlotKind { curve_with_chords, ratio_vs_n, margin_bars };

/// Throws InvalidSpec on an unknown name.
PlotKind parse_plot_kind(std::string_view name);

/// curve_with_chords reads a curve file, ratio_vs_n a sweep CSV and
/// margin_bars a metrics JSON document.
struct PlotSpec {
    PlotKind kind = PlotKind::curve_with_chords;
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path output;
    std::size_t chord_stride = 64;
};

/// Polyline plus the antipodal chord of every stride-th vertex.
std::string svg_curve_with_chords(const ClosedCurve& curve, std::size_t stride);
/// Sweep ratios as points, with the bound 2 + 47/n drawn as a curve.
std::string svg_ratio_vs_n(const std::vector<SweepRow>& rows);
struct MarginBar {
    std::string name;
    double margin = 0.0;
    bool holds = true;
};

/// One horizontal bar per verdict, drawn from a shared zero line.
std::string svg_margin_bars(const std::vector<MarginBar>& bars);

/// Reads the inputs and writes spec.output. Throws InvalidSpec or ParseError.
void render_svg(const PlotSpec& spec);

}  // namespace chordarea
