#pragma once

#include <cstdint>
#include <string_view>

#include "chordarea/curve.hpp"
#include "chordarea/mesh.hpp"

namespace chordarea {

enum class AreaMethod { grid, monte_carlo, crofton_lines, shoelace, divergence };

std::string_view to_string(AreaMethod method);

/// Area (planar curves), line-measure area (space curves) or volume (meshes).
/// std_error is zero exactly for the deterministic methods.
struct AreaEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples_used = 0;
    AreaMethod method = AreaMethod::monte_carlo;
};

/// Converts the line sampler's density into the invariant line measure:
/// measure(S) = constant_c * (mean hits per line) * (area of the sampling disk).
struct CroftonCalibration {
    double constant_c = 0.0;
    double reference_area = 0.0;
    std::uint64_t samples = 0;

    /// Relative standard error of constant_c. The calibration disk is always
    /// sampled with the fixed padding kCroftonPadding, which pins the hit rate.
    double relative_std_error() const;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
/// Radius padding of every line-sampling disk.
inline constexpr double kCroftonPadding = 1.05;
/// Samples per Monte-Carlo shard; each shard draws from its own substream.
inline constexpr std::uint64_t kShardSize = 4096;
/// Lines drawn per sampled direction in area_space_curve.
inline constexpr std::uint64_t kLinesPerDirection = 64;

/// Measure of the odd-winding region, sampled uniformly in the bounding box
/// (inflated by 1e-6 * L). Points on the curve are redrawn. Throws
/// InsufficientSamples when budget is 0.
AreaEstimate area_planar(const ClosedCurve& curve, std::uint64_t budget, std::uint64_t seed);

/// |shoelace| / 2. Only meaningful for simple curves.
AreaEstimate area_planar_exact_simple(const ClosedCurve& curve);

/// Calibrates against a flat disk of the given radius in the z = 0 plane.
CroftonCalibration calibrate_crofton(std::uint64_t budget, std::uint64_t seed, double disk_radius = 1.0);

/// Line-measure integral of linking_mod2 over lines meeting the padded
/// circumscribing ball. Directions are uniform on the sphere; each direction
/// carries kLinesPerDirection base points uniform in the orthogonal disk, so
/// samples_used is budget rounded up to a multiple of kLinesPerDirection.
/// std_error combines the between-direction spread with the calibration error.
AreaEstimate area_space_curve(const ClosedCurve& curve, const CroftonCalibration& calib, std::uint64_t budget,
                              std::uint64_t seed);

/// |sum of det(v0, v1, v2)| / 6 over a closed, consistently oriented mesh.
AreaEstimate volume_mesh_divergence(const SurfaceMesh& mesh);

/// Measure of the odd ray-parity region, sampled in the inflated bounding box.
AreaEstimate volume_mesh_parity(const SurfaceMesh& mesh, std::uint64_t budget, std::uint64_t seed);

}  // namespace chordarea
