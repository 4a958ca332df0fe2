#include "chordarea/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "chordarea/error.hpp"
#include "chordarea/planar_index.hpp"

namespace chordarea {

LineSample LineSample::through(const Vec3& direction, const Vec3& point) {
    const Vec3 d = normalized(direction);
    return {d, point - dot(point, d) * d};
}

long winding_number(const ClosedCurve& curve, const Vec3& q) {
    const auto w = ray_winding(curve.points(), q, 1e-12 * curve.length());
    if (!w) {
        throw GeometryError(ErrorCode::PointOnCurve, "query point lies on the curve");
    }
    return *w;
}

int w2_point(const ClosedCurve& curve, const Vec3& q) {
    return static_cast<int>(std::abs(winding_number(curve, q)) % 2);
}

int linking_mod2(const ClosedCurve& curve, const LineSample& line) {
    Vec3 e1, e2;
    orthonormal_frame(line.direction, e1, e2);
    std::vector<Vec3> projected;
    projected.reserve(curve.size());
    for (const auto& p : curve.points()) {
        projected.push_back({dot(p, e1), dot(p, e2), 0.0});
    }
    const Vec3 o{dot(line.base, e1), dot(line.base, e2), 0.0};
    const auto w = ray_winding(projected, o, 1e-12 * curve.length());
    if (!w) {
        throw GeometryError(ErrorCode::LineHitsCurve, "line passes through the curve");
    }
    return static_cast<int>(std::abs(*w) % 2);
}

namespace {

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 n = cross(b - a, c - a);
    const double nn = norm2(n);
    if (nn > 0.0) {
        const double t = dot(p - a, n) / nn;
        const Vec3 proj = p - t * n;
        const double d0 = dot(cross(b - a, proj - a), n);
        const double d1 = dot(cross(c - b, proj - b), n);
        const double d2 = dot(cross(a - c, proj - c), n);
        if ((d0 >= 0 && d1 >= 0 && d2 >= 0) || (d0 <= 0 && d1 <= 0 && d2 <= 0)) {
            return std::abs(t) * std::sqrt(nn);
        }
    }
    return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                     point_segment_distance(p, c, a)});
}

/// Deterministic ray directions: a spherical Fibonacci sequence, skewed off the axes.
Vec3 ray_direction(int k) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double z = 1.0 - (2.0 * k + 1.0) / 129.0;
    const double rho = std::sqrt(1.0 - z * z);
    const double phi = 0.3819660112501051 + golden * k;
    return normalized(Vec3{0.8 + rho * std::cos(phi), 0.37 + rho * std::sin(phi), 0.21 + z});
}

}  // namespace

int w2_surface(const SurfaceMesh& mesh, const Vec3& q) {
    const auto v = mesh.vertices();
    const double tol = 1e-12 * mesh.scale();
    for (const auto& t : mesh.triangles()) {
        if (point_triangle_distance(q, v[t[0]], v[t[1]], v[t[2]]) <= tol) {
            throw GeometryError(ErrorCode::PointOnSurface, "query point lies on the surface");
        }
    }
    // Barycentric margin below which a hit counts as grazing an edge or vertex.
    constexpr double kGraze = 1e-10;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Vec3 d = ray_direction(attempt);
        int count = 0;
        bool grazing = false;
        for (const auto& t : mesh.triangles()) {
            // Moller-Trumbore.
            const Vec3 e1 = v[t[1]] - v[t[0]];
            const Vec3 e2 = v[t[2]] - v[t[0]];
            const Vec3 pv = cross(d, e2);
            const double det = dot(e1, pv);
            const double scale = norm(e1) * norm(e2);
            if (std::abs(det) <= 1e-14 * scale) {
                continue;  // ray parallel to the triangle plane
            }
            const double inv = 1.0 / det;
            const Vec3 tv = q - v[t[0]];
            const double bu = dot(tv, pv) * inv;
            const Vec3 qv = cross(tv, e1);
            const double bv = dot(d, qv) * inv;
            const double bw = 1.0 - bu - bv;
            const double dist = dot(e2, qv) * inv;
            if (dist <= 0.0) {
                continue;
            }
            if (bu < -kGraze || bv < -kGraze || bw < -kGraze) {
                continue;
            }
            if (bu <= kGraze || bv <= kGraze || bw <= kGraze) {
                grazing = true;
                break;
            }
            ++count;
        }
        if (!grazing) {
            return count % 2;
        }
    }
    throw GeometryError(ErrorCode::RayDegenerate, "no non-grazing ray found");
}

}  // namespace chordarea
