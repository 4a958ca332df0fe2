#pragma once

#include <cstddef>
#include <optional>

#include "chordarea/curve.hpp"

namespace chordarea {

/// A point of the chord sweep F(i, s) = (1 - s) p[i] + s p[i + N/2].
struct SweepSample {
    std::size_t t_index = 0;
    double s = 0.0;
    Vec3 point;
    /// |F_1 ^ fbar| with F_1 from centered differences.
    double jacobian = 0.0;
    double chord_len = 0.0;
};

struct ChordWitness {
    std::size_t index = 0;
    double s = 0.0;
    double distance = 0.0;
};

/// (L/N) * sum over i of |p[i + N/2] - p[i]|. Every chord is counted twice.
double total_diameter(const ClosedCurve& curve);

/// Exact total diameter of the polygon itself: the antipodal vector is affine
/// between samples, so each step integrates |a + t (b - a)| in closed form.
/// Never exceeds total_diameter() (the integrand is convex).
double total_diameter_polygon(const ClosedCurve& curve);

/// Largest distance between two samples. Uses rotating calipers on convex
/// planar curves and the all-pairs scan otherwise.
double diameter(const ClosedCurve& curve);
double diameter_brute_force(const ClosedCurve& curve);
/// Rotating calipers; requires a convex polygon in the plane (dim 2).
double diameter_convex(const ClosedCurve& curve);

/// Centered-difference tangent (p[i+1] - p[i-1]) / (2 L/N); not renormalized.
Vec3 discrete_tangent(const ClosedCurve& curve, std::size_t i);

SweepSample sweep_jacobian(const ClosedCurve& curve, std::size_t i, double s);

/// Chord closest to q among all N antipodal chords, if it passes within eps.
/// Meaningful for points of odd winding (which every antipodal chord family
/// must cover); the scan itself accepts any q. Throws PointOnCurve.
std::optional<ChordWitness> chord_cover_witness(const ClosedCurve& curve, const Vec3& q, double eps);

/// Max over i of the positive part of
/// (T[i] ^ fbar[i]) * (T[i + N/2] ^ fbar[i]) / |fbar[i]|^2.
/// Throws NotConvex unless classify(curve).convex.
double convex_sign_check(const ClosedCurve& curve);
/// Same quantity without the convexity precondition.
double convex_sign_violation(const ClosedCurve& curve);

/// Integral over [0, 1] of |(1 - s) a - s b| = (a^2 + b^2) / (2 (a + b)).
/// Throws NonPositiveInput unless a, b > 0.
double ab_integral(double a, double b);

}  // namespace chordarea
