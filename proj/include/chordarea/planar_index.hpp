#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chordarea/vec.hpp"

namespace chordarea {

/// Golden-angle rotated-ray winding number of a closed planar polygon (x, y
/// used) about q. Returns nullopt when q lies within on_tol of the polygon.
/// The first ray is +x; a ray passing within on_tol of a vertex is rotated by
/// the golden angle and retried (up to 64 times, then RayDegenerate).
std::optional<long> ray_winding(std::span<const Vec3> polygon, const Vec3& q, double on_tol);

/// Horizontal-slab index over a closed planar polygon for many winding
/// queries. Results agree with ray_winding(); queries whose +x ray grazes a
/// vertex are delegated to it.
class PlanarWindingIndex {
public:
    /// on_tol < 0 selects 1e-12 * perimeter.
    explicit PlanarWindingIndex(std::vector<Vec3> polygon, double on_tol = -1.0);

    /// Winding number of (x, y), or nullopt when the point is on the polygon.
    std::optional<long> winding(double x, double y) const;

    double on_tolerance() const { return on_tol_; }
    double perimeter() const { return perimeter_; }
    Vec3 lower() const { return lo_; }
    Vec3 upper() const { return hi_; }

private:
    std::vector<Vec3> pts_;
    std::vector<std::uint32_t> slab_offsets_;
    std::vector<std::uint32_t> slab_edges_;
    Vec3 lo_{};
    Vec3 hi_{};
    double on_tol_ = 0.0;
    double perimeter_ = 0.0;
    double slab_height_ = 1.0;
    std::size_t slabs_ = 1;
};

}  // namespace chordarea
