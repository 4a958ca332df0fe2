#pragma once

#include "chordarea/curve.hpp"
#include "chordarea/mesh.hpp"
#include "chordarea/vec.hpp"

namespace chordarea {

/// Affine line in R^3: unit direction and the base point lying in the plane
/// through the origin orthogonal to the direction.
struct LineSample {
    Vec3 direction;
    Vec3 base;

    /// Line through `point` with the given (not necessarily unit) direction.
    static LineSample through(const Vec3& direction, const Vec3& point);
};

/// Signed number of turns of a planar curve about q. Throws PointOnCurve when
/// q is within 1e-12 * L of the polyline.
long winding_number(const ClosedCurve& curve, const Vec3& q);

/// Winding number mod 2.
int w2_point(const ClosedCurve& curve, const Vec3& q);

/// Mod-2 linking number of a space curve with a line, computed as the planar
/// winding parity of the curve projected along the line about the line's
/// footprint. Throws LineHitsCurve when the line passes within 1e-12 * L.
int linking_mod2(const ClosedCurve& curve, const LineSample& line);

/// Parity of ray-triangle crossings from q. Rays that graze an edge or vertex
/// are re-drawn from a fixed direction sequence (up to 64 attempts, then
/// RayDegenerate). Throws PointOnSurface when q is within 1e-12 * scale.
int w2_surface(const SurfaceMesh& mesh, const Vec3& q);

}  // namespace chordarea
