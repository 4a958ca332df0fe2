#include "chordarea/chords.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chordarea/error.hpp"

namespace chordarea {

double total_diameter(const ClosedCurve& curve) {
    double sum = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        sum += distance(curve[i], curve[curve.antipode(i)]);
    }
    return curve.step() * sum;
}

namespace {

/// Integral over t in [0, 1] of |a + t d|.
double affine_norm_integral(const Vec3& a, const Vec3& d) {
    const double m = norm(d);
    const double na = norm(a);
    const double nb = norm(a + d);
    if (m <= 1e-12 * (na + nb) || m == 0.0) {
        return 0.5 * (na + nb);
    }
    const double u0 = dot(a, d) / m;
    const double u1 = u0 + m;
    const double rho = norm(cross(a, d)) / m;
    auto antiderivative = [rho](double u) {
        if (rho == 0.0) {
            return 0.5 * u * std::abs(u);
        }
        return 0.5 * (u * std::hypot(u, rho) + rho * rho * std::asinh(u / rho));
    };
    return (antiderivative(u1) - antiderivative(u0)) / m;
}

}  // namespace

double total_diameter_polygon(const ClosedCurve& curve) {
    const std::size_t n = curve.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 a = curve[curve.antipode(i)] - curve[i];
        const std::size_t j = (i + 1) % n;
        const Vec3 b = curve[curve.antipode(j)] - curve[j];
        sum += affine_norm_integral(a, b - a);
    }
    return curve.step() * sum;
}

double diameter_brute_force(const ClosedCurve& curve) {
    const auto pts = curve.points();
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            best = std::max(best, norm2(pts[j] - pts[i]));
        }
    }
    return std::sqrt(best);
}

double diameter_convex(const ClosedCurve& curve) {
    std::vector<Vec3> pts(curve.points().begin(), curve.points().end());
    double twice_area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        twice_area += cross2(pts[i], pts[(i + 1) % pts.size()]);
    }
    if (twice_area < 0.0) {
        std::reverse(pts.begin(), pts.end());
    }
    const std::size_t n = pts.size();
    auto area = [&](std::size_t a, std::size_t b, std::size_t c) {
        return cross2(pts[b % n] - pts[a % n], pts[c % n] - pts[a % n]);
    };
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        // Advance the caliper to the vertex farthest from edge (i, i+1).
        while (area(i, i + 1, j + 1) > area(i, i + 1, j)) {
            ++j;
        }
        best = std::max({best, norm2(pts[j % n] - pts[i]), norm2(pts[j % n] - pts[(i + 1) % n])});
    }
    return std::sqrt(best);
}

double diameter(const ClosedCurve& curve) {
    if (curve.dim() == 2 && classify(curve).convex) {
        return diameter_convex(curve);
    }
    return diameter_brute_force(curve);
}

Vec3 discrete_tangent(const ClosedCurve& curve, std::size_t i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    return (curve[curve.wrap(k + 1)] - curve[curve.wrap(k - 1)]) / (2.0 * curve.step());
}

SweepSample sweep_jacobian(const ClosedCurve& curve, std::size_t i, double s) {
    const std::size_t k = curve.wrap(static_cast<std::ptrdiff_t>(i));
    const std::size_t ks = curve.antipode(k);
    const Vec3 fbar = curve[ks] - curve[k];
    const Vec3 f1 = (1.0 - s) * discrete_tangent(curve, k) + s * discrete_tangent(curve, ks);
    SweepSample out;
    out.t_index = k;
    out.s = s;
    out.point = (1.0 - s) * curve[k] + s * curve[ks];
    out.jacobian = norm(cross(f1, fbar));
    out.chord_len = norm(fbar);
    return out;
}

std::optional<ChordWitness> chord_cover_witness(const ClosedCurve& curve, const Vec3& q, double eps) {
    const double on_tol = 1e-12 * curve.length();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (point_segment_distance(q, curve[i], curve[(i + 1) % curve.size()]) <= on_tol) {
            throw GeometryError(ErrorCode::PointOnCurve, "query point lies on the curve");
        }
    }
    ChordWitness best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Vec3& a = curve[i];
        const Vec3 d = curve[curve.antipode(i)] - a;
        const double len2 = norm2(d);
        const double s = len2 > 0.0 ? std::clamp(dot(q - a, d) / len2, 0.0, 1.0) : 0.0;
        const double dist = distance(q, a + s * d);
        if (dist < best.distance) {
            best = {i, s, dist};
        }
    }
    if (best.distance <= eps) {
        return best;
    }
    return std::nullopt;
}

double convex_sign_violation(const ClosedCurve& curve) {
    double worst = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const std::size_t is = curve.antipode(i);
        const Vec3 fbar = curve[is] - curve[i];
        const double nb2 = norm2(fbar);
        if (nb2 == 0.0) {
            continue;
        }
        const double product = dot(cross(discrete_tangent(curve, i), fbar), cross(discrete_tangent(curve, is), fbar));
        worst = std::max(worst, product / nb2);
    }
    return worst;
}

double convex_sign_check(const ClosedCurve& curve) {
    if (!classify(curve).convex) {
        throw GeometryError(ErrorCode::NotConvex, "curve is not convex");
    }
    return convex_sign_violation(curve);
}

double ab_integral(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw GeometryError(ErrorCode::NonPositiveInput, "a and b must be positive and finite");
    }
    return (a * a + b * b) / (2.0 * (a + b));
}

}  // namespace chordarea
