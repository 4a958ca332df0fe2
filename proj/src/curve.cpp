#include "chordarea/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>

#include "chordarea/error.hpp"

namespace chordarea {

ClosedCurve::ClosedCurve(int dim, std::vector<Vec3> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ != 2 && dim_ != 3) {
        throw GeometryError(ErrorCode::InvalidSpec, "curve dimension must be 2 or 3");
    }
    const std::size_t n = points_.size();
    if (n < 8 || n % 2 != 0) {
        throw GeometryError(ErrorCode::InvalidSpec,
                            "curve needs an even number of samples >= 8, got " + std::to_string(n));
    }
    for (auto& p : points_) {
        if (!is_finite(p)) {
            throw GeometryError(ErrorCode::DegenerateInput, "non-finite coordinate");
        }
        if (dim_ == 2) {
            p.z = 0.0;
        }
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gap = distance(points_[i], points_[(i + 1) % n]);
        length_ += gap;
        lo = std::min(lo, gap);
        hi = std::max(hi, gap);
    }
    if (!(length_ > 0.0)) {
        throw GeometryError(ErrorCode::DegenerateInput, "curve has zero length");
    }
    const double h = length_ / static_cast<double>(n);
    uniform_ = (hi - lo) <= kUniformTolerance * h;
}

namespace {

/// Extended-precision point for the resampling walk. Near corners the exit
/// point is very sensitive to the current position, and in double precision
/// the accumulated noise over thousands of steps exceeds the 1e-9 gap tolerance.
struct XVec {
    long double x = 0, y = 0, z = 0;

    friend XVec operator+(const XVec& a, const XVec& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend XVec operator-(const XVec& a, const XVec& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend XVec operator*(long double s, const XVec& a) { return {s * a.x, s * a.y, s * a.z}; }
};

long double xdot(const XVec& a, const XVec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Closed polyline walked by the equal-chord resampler.
struct Polyline {
    std::vector<XVec> pts;
    std::vector<long double> seg_len;
    long double total = 0;

    std::size_t size() const { return pts.size(); }
    const XVec& start(std::size_t k) const { return pts[k]; }
    const XVec& end(std::size_t k) const { return pts[(k + 1) % pts.size()]; }
};

/// Largest u in [u0, 1] with |s + u d - c| = h, clamped. The quadratic is
/// written about the entry point s + u0 d, which lies within h of c, so every
/// term is of order h rather than of the segment length.
long double exit_parameter(const XVec& s, const XVec& d, const XVec& c, long double h, long double u0) {
    const long double a = xdot(d, d);
    const XVec ec = (s + u0 * d) - c;
    const long double b = 2 * xdot(d, ec);
    const long double cc = xdot(ec, ec) - h * h;
    const long double root = std::sqrt(std::max<long double>(0, b * b - 4 * a * cc));
    const long double t = b <= 0 ? (-b + root) / (2 * a) : (2 * cc) / (-b - root);
    return std::clamp(u0 + t, u0, static_cast<long double>(1));
}

/// Walks n equal chords of length h from vertex 0 and reports whether the
/// n-th chord ends past vertex 0 again (or some ball is never exited).
/// Position is tracked as (segment, parameter), so the test is exact.
/// A polyline vertex within relative `snap` of the sphere becomes the next point.
bool walk_overshoots(const Polyline& poly, long double h, std::size_t n, long double snap, std::vector<Vec3>* out) {
    const std::size_t m = poly.size();
    std::size_t k = 0;
    long double u = 0;
    XVec center = poly.pts[0];
    auto emit = [&] {
        out->push_back({static_cast<double>(center.x), static_cast<double>(center.y), static_cast<double>(center.z)});
    };
    if (out != nullptr) {
        out->clear();
        emit();
    }
    const long double h2 = h * h;
    for (std::size_t step = 0; step < n; ++step) {
        long double travelled = 0;
        while (true) {
            const long double len = poly.seg_len[k % m];
            if (len > 0) {
                const XVec& s = poly.start(k % m);
                const XVec& e = poly.end(k % m);
                const XVec ec = e - center;
                const long double e2 = xdot(ec, ec);
                if (std::abs(e2 - h2) <= snap * h2) {
                    center = e;
                    ++k;
                    u = 0;
                    break;
                }
                if (e2 > h2) {
                    u = exit_parameter(s, e - s, center, h, u);
                    center = s + u * (e - s);
                    break;
                }
                travelled += (1 - u) * len;
            }
            ++k;
            u = 0;
            if (travelled > poly.total) {
                return true;
            }
        }
        if (out != nullptr && step + 1 < n) {
            emit();
        }
    }
    return k > m || (k == m && u > 0);
}

/// Bisection on the chord length h for a walk that closes after n steps.
ClosedCurve equal_chord_walk(const Polyline& poly, std::size_t n, long double snap, int dim) {
    // Chords never exceed arcs, so the walk with h = total/n reaches at least total.
    long double hi = poly.total / static_cast<long double>(n);
    long double lo = hi / 2;
    int shrink = 0;
    while (walk_overshoots(poly, lo, n, snap, nullptr)) {
        hi = lo;
        lo /= 2;
        if (++shrink > 40) {
            throw GeometryError(ErrorCode::DegenerateInput, "equal-chord resampling does not close");
        }
    }
    for (int iter = 0; iter < 200; ++iter) {
        const long double mid = (lo + hi) / 2;
        if (!(mid > lo && mid < hi)) {
            break;
        }
        if (walk_overshoots(poly, mid, n, snap, nullptr)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    std::vector<Vec3> out;
    out.reserve(n);
    walk_overshoots(poly, hi, n, snap, &out);
    return ClosedCurve(dim, std::move(out));
}

double gap_spread(const ClosedCurve& c) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double g = distance(c[i], c[i + 1]);
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    return hi - lo;
}

}  // namespace

ClosedCurve resample_arclength(std::span<const Vec3> raw_points, std::size_t n, int dim) {
    if (n < 8 || n % 2 != 0) {
        throw GeometryError(ErrorCode::InvalidSpec, "sample count must be even and >= 8");
    }
    std::vector<Vec3> input(raw_points.begin(), raw_points.end());
    for (auto& p : input) {
        if (!is_finite(p)) {
            throw GeometryError(ErrorCode::DegenerateInput, "non-finite input coordinate");
        }
        if (dim == 2) {
            p.z = 0.0;
        }
    }
    while (input.size() > 1 && input.back() == input.front()) {
        input.pop_back();
    }
    {
        std::vector<Vec3> distinct = input;
        std::sort(distinct.begin(), distinct.end(), [](const Vec3& a, const Vec3& b) {
            return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
        });
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 3) {
            throw GeometryError(ErrorCode::DegenerateInput, "need at least 3 distinct points");
        }
    }
    Polyline poly;
    for (const auto& p : input) {
        poly.pts.push_back({p.x, p.y, p.z});
    }
    const std::size_t m = poly.pts.size();
    poly.seg_len.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const XVec d = poly.end(k) - poly.start(k);
        poly.seg_len[k] = std::sqrt(xdot(d, d));
        poly.total += poly.seg_len[k];
    }
    if (!(poly.total > 0)) {
        throw GeometryError(ErrorCode::DegenerateInput, "input polyline has zero length");
    }

    // Exact coincidences (a sample landing on a corner) make the closure
    // jump under rounding; snapping fixes those and plain bisection the rest.
    ClosedCurve best = equal_chord_walk(poly, n, 1e-12L, dim);
    if (!best.uniform()) {
        ClosedCurve plain = equal_chord_walk(poly, n, 0, dim);
        if (gap_spread(plain) < gap_spread(best)) {
            best = std::move(plain);
        }
    }
    return best;
}

AntipodalChord antipodal_chord(const ClosedCurve& curve, std::size_t i) {
    const std::size_t k = curve.wrap(static_cast<std::ptrdiff_t>(i));
    const Vec3& p = curve[k];
    const Vec3& q = curve[curve.antipode(k)];
    return {p, q, distance(p, q)};
}

double default_shape_tolerance(const ClosedCurve& curve) { return 1e-6 * curve.length(); }

namespace {

/// Planar coordinates of the curve if it lies in a plane within tol, else empty.
std::vector<Vec3> planar_coordinates(const ClosedCurve& curve, double tol) {
    const auto pts = curve.points();
    if (curve.dim() == 2) {
        return {pts.begin(), pts.end()};
    }
    // Newell normal of the closed polygon.
    Vec3 normal{};
    Vec3 centroid{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        normal += cross(pts[i], pts[(i + 1) % pts.size()]);
        centroid += pts[i];
    }
    centroid = centroid / static_cast<double>(pts.size());
    const double nn = norm(normal);
    if (!(nn > 0.0)) {
        return {};
    }
    normal = normal / nn;
    for (const auto& p : pts) {
        if (std::abs(dot(p - centroid, normal)) > tol) {
            return {};
        }
    }
    Vec3 e1, e2;
    orthonormal_frame(normal, e1, e2);
    std::vector<Vec3> flat;
    flat.reserve(pts.size());
    for (const auto& p : pts) {
        flat.push_back({dot(p - centroid, e1), dot(p - centroid, e2), 0.0});
    }
    return flat;
}

bool is_convex_polygon(const std::vector<Vec3>& pts, double band) {
    const std::size_t n = pts.size();
    int sign = 0;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 e0 = pts[i] - pts[(i + n - 1) % n];
        const Vec3 e1 = pts[(i + 1) % n] - pts[i];
        const double c = cross2(e0, e1);
        const double d = dot(e0, e1);
        const double scale = norm(e0) * norm(e1);
        if (!(scale > 0.0)) {
            return false;
        }
        if (std::abs(c) < band * scale) {
            if (d < 0.0) {
                return false;  // reversal
            }
            continue;
        }
        const int s = c > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign) {
            return false;
        }
        sign = s;
        turning += std::atan2(c, d);
    }
    return sign != 0 && std::abs(std::abs(turning) - 2.0 * std::numbers::pi) <= 1e-6;
}

}  // namespace

ShapeClass classify(const ClosedCurve& curve, double tol) {
    ShapeClass out;
    out.tolerance_used = tol;
    const std::size_t n = curve.size();

    Vec3 center{};
    for (std::size_t i = 0; i < n; ++i) {
        center += 0.5 * (curve[i] + curve[curve.antipode(i)]);
    }
    center = center / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, norm(curve[i] + curve[curve.antipode(i)] - 2.0 * center));
    }
    if (worst <= tol) {
        out.centrally_symmetric = true;
        out.symmetry_center = center;
    }

    const auto flat = planar_coordinates(curve, tol);
    if (!flat.empty()) {
        out.convex = is_convex_polygon(flat, tol / curve.length());
    }
    return out;
}

ClosedCurve rigid_transform(const ClosedCurve& curve, const Vec3 rotation[3], const Vec3& translation) {
    std::vector<Vec3> pts;
    pts.reserve(curve.size());
    for (const auto& p : curve.points()) {
        pts.push_back(Vec3{dot(rotation[0], p), dot(rotation[1], p), dot(rotation[2], p)} + translation);
    }
    return ClosedCurve(curve.dim(), std::move(pts));
}

ClosedCurve reversed(const ClosedCurve& curve) {
    std::vector<Vec3> pts;
    pts.reserve(curve.size());
    pts.push_back(curve[0]);
    for (std::size_t i = curve.size() - 1; i > 0; --i) {
        pts.push_back(curve[i]);
    }
    return ClosedCurve(curve.dim(), std::move(pts));
}

ClosedCurve as_space_curve(const ClosedCurve& curve) {
    return ClosedCurve(3, {curve.points().begin(), curve.points().end()});
}

}  // namespace chordarea
