#pragma once

#include <cmath>

namespace chordarea {

/// Position or displacement in R^3. Planar data lives in the z = 0 plane.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// z-component of the cross product; the signed area form for planar vectors.
constexpr double cross2(const Vec3& a, const Vec3& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr double norm2(const Vec3& a) { return dot(a, a); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(b - a); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

/// Distance from q to the segment [a, b].
inline double point_segment_distance(const Vec3& q, const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a;
    const double len2 = norm2(d);
    double s = 0.0;
    if (len2 > 0.0) {
        s = dot(q - a, d) / len2;
        s = s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
    }
    return distance(q, a + s * d);
}

/// Orthonormal pair (e1, e2) completing the unit vector n to a right-handed frame.
/// The seed axis is the coordinate axis along n's smallest component.
inline void orthonormal_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    Vec3 seed{0.0, 0.0, 1.0};
    if (ax <= ay && ax <= az) {
        seed = {1.0, 0.0, 0.0};
    } else if (ay <= az) {
        seed = {0.0, 1.0, 0.0};
    }
    e1 = normalized(cross(n, seed));
    e2 = cross(n, e1);
}

}  // namespace chordarea
