#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chordarea/curve.hpp"
#include "chordarea/mesh.hpp"

namespace chordarea {

enum class FamilyKind {
    circle,
    ellipse,
    fourier_random,
    support_convex,
    horseshoe,
    trefoil,
    doubled_segment,
    figure_eight,
    sphere_mesh,
    symmetric_mesh,
};

std::string_view to_string(FamilyKind kind);
/// Throws InvalidSpec on an unknown name.
FamilyKind parse_family_kind(std::string_view name);
bool is_mesh_kind(FamilyKind kind);

/// Parameters per kind (defaults in brackets):
///   circle          radius [1]
///   ellipse         a [2], b [1]
///   fourier_random  modes [5], amplitude [0.6], odd_only [0]
///   support_convex  modes [4]
///   horseshoe       n [4]
///   trefoil         scale [1]
///   doubled_segment length [1]        (n_samples must be a multiple of 4)
///   figure_eight    scale [1]
///   sphere_mesh     radius [1], subdiv [4]
///   symmetric_mesh  a [1], b [0.8], c [0.6], amp [0], subdiv [3]
/// seed only affects fourier_random, support_convex and symmetric_mesh (amp > 0).
struct FamilySpec {
    FamilyKind kind = FamilyKind::circle;
    std::map<std::string, double> params;
    std::size_t n_samples = 4096;
    std::uint64_t seed = 0;

    double param(const std::string& name, double fallback) const;
};

/// "k=v;k=v" with keys in sorted order and shortest round-trip numbers.
std::string format_params(const std::map<std::string, double>& params);
/// Inverse of format_params. Whitespace around tokens is ignored. Throws ParseError.
std::map<std::string, double> parse_params(std::string_view text);

using Shape = std::variant<ClosedCurve, SurfaceMesh>;

/// Throws InvalidSpec on bad parameters and AntipodeMismatch if the horseshoe
/// corner pairing fails.
Shape generate(const FamilySpec& spec);
ClosedCurve generate_curve(const FamilySpec& spec);
SurfaceMesh generate_mesh(const FamilySpec& spec);

/// Closed-form dimensions of the horseshoe curve with bars of length 1 and
/// height 1/n, separated by 1/n^2, joined on the right by concentric
/// semicircles of radii R (outer) and r (inner).
struct HorseshoeGeometry {
    int n = 0;
    double outer_radius = 0.0;
    double inner_radius = 0.0;
    double length = 0.0;
    /// 2/n, the area of the two bars.
    double lower_bound_area = 0.0;
    /// Bars plus the half annulus between r and R.
    double area = 0.0;
    /// Antipodal chord length along the bars: 1/n + 1/n^2.
    double bar_chord = 0.0;
};

/// Throws InvalidSpec unless n >= 2.
HorseshoeGeometry horseshoe_geometry(int n);

/// Outline of the horseshoe as exact vertices (bar corners) and densely
/// sampled arcs, starting at the top-left corner and running clockwise.
/// Throws AntipodeMismatch if any corner pair is not half a length apart.
std::vector<Vec3> horseshoe_outline(int n, std::size_t arc_samples = 20000);

/// 100 fourier_random, 50 support_convex and 50 odd-harmonic fourier_random
/// specs with seeds 0, 1, ...
std::vector<FamilySpec> standard_corpus(std::size_t n_samples = 4096);

}  // namespace chordarea
