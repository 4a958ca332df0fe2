#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chordarea/vec.hpp"

namespace chordarea {

/// Relative tolerance on consecutive-gap equality for uniform curves.
inline constexpr double kUniformTolerance = 1e-9;

/// Closed polyline with N (even, >= 8) vertices and no duplicated endpoint.
///
/// A uniform curve is equilateral: every gap ||p[i+1] - p[i]|| equals L/N, so
/// vertex i sits at arc length i*L/N of its own polygon and the half-length
/// shift t -> t + L/2 is exactly the index shift i -> i + N/2.
class ClosedCurve {
public:
    /// Validates N and finiteness. `uniform` is recomputed from the data, and
    /// L is taken as the polygon perimeter.
    ClosedCurve(int dim, std::vector<Vec3> points);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    double length() const { return length_; }
    bool uniform() const { return uniform_; }
    /// L / N.
    double step() const { return length_ / static_cast<double>(points_.size()); }

    std::span<const Vec3> points() const { return points_; }
    const Vec3& operator[](std::size_t i) const { return points_[i % points_.size()]; }

    std::size_t wrap(std::ptrdiff_t i) const {
        const auto n = static_cast<std::ptrdiff_t>(points_.size());
        return static_cast<std::size_t>(((i % n) + n) % n);
    }
    std::size_t antipode(std::size_t i) const { return (i + points_.size() / 2) % points_.size(); }

private:
    int dim_;
    std::vector<Vec3> points_;
    double length_ = 0.0;
    bool uniform_ = false;
};

struct ShapeClass {
    bool convex = false;
    bool centrally_symmetric = false;
    std::optional<Vec3> symmetry_center;
    double tolerance_used = 0.0;
};

struct AntipodalChord {
    Vec3 p;
    Vec3 p_star;
    double chord_len = 0.0;
};

/// Equilateral resampling along the closed polyline through raw_points.
///
/// Vertices lie on the input polyline, vertex 0 is raw_points[0], and every
/// gap equals L/N where L is the perimeter of the result. Each vertex is the
/// first point further along the input at chord distance L/N from its
/// predecessor; L is found by bisection so that the walk closes.
/// Throws DegenerateInput on zero length, non-finite input or < 3 distinct points.
ClosedCurve resample_arclength(std::span<const Vec3> raw_points, std::size_t n, int dim = 2);

AntipodalChord antipodal_chord(const ClosedCurve& curve, std::size_t i);

/// Default absolute tolerance for classify(): 1e-6 * L.
double default_shape_tolerance(const ClosedCurve& curve);

/// Convexity (planar, or 3-space curves lying in a plane) and central symmetry.
/// `tol` is an absolute length; the collinearity band for convexity is tol / L.
ShapeClass classify(const ClosedCurve& curve, double tol);
inline ShapeClass classify(const ClosedCurve& curve) { return classify(curve, default_shape_tolerance(curve)); }

/// Returns a copy with every vertex mapped by x -> rotation * x + translation
/// (rotation given as its three rows).
ClosedCurve rigid_transform(const ClosedCurve& curve, const Vec3 rotation[3], const Vec3& translation);

/// Same vertices, order reversed starting from vertex 0.
ClosedCurve reversed(const ClosedCurve& curve);

/// Embeds a planar curve in R^3 (z = 0).
ClosedCurve as_space_curve(const ClosedCurve& curve);

}  // namespace chordarea
