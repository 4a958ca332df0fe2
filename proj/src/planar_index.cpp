#include "chordarea/planar_index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chordarea/error.hpp"

namespace chordarea {

namespace {

constexpr int kMaxRayAttempts = 64;
const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));

// Signed-crossing count for a ray along +u from the origin, in (u, v) coordinates.
inline long crossing(double au, double av, double bu, double bv) {
    const double is_left = (bu - au) * (-av) - (bv - av) * (-au);
    if (av <= 0.0) {
        if (bv > 0.0 && is_left > 0.0) {
            return 1;
        }
    } else if (bv <= 0.0 && is_left < 0.0) {
        return -1;
    }
    return 0;
}

}  // namespace

std::optional<long> ray_winding(std::span<const Vec3> polygon, const Vec3& q, double on_tol) {
    const std::size_t n = polygon.size();
    const Vec3 q2{q.x, q.y, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 a{polygon[i].x, polygon[i].y, 0.0};
        const Vec3 b{polygon[(i + 1) % n].x, polygon[(i + 1) % n].y, 0.0};
        if (point_segment_distance(q2, a, b) <= on_tol) {
            return std::nullopt;
        }
    }
    std::vector<double> us(n), vs(n);
    for (int attempt = 0; attempt < kMaxRayAttempts; ++attempt) {
        const double theta = kGoldenAngle * attempt;
        const double c = std::cos(theta), s = std::sin(theta);
        bool grazing = false;
        for (std::size_t i = 0; i < n && !grazing; ++i) {
            const double dx = polygon[i].x - q.x;
            const double dy = polygon[i].y - q.y;
            us[i] = dx * c + dy * s;
            vs[i] = -dx * s + dy * c;
            grazing = std::abs(vs[i]) <= on_tol && us[i] >= -on_tol;
        }
        if (grazing) {
            continue;
        }
        long w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            w += crossing(us[i], vs[i], us[j], vs[j]);
        }
        return w;
    }
    throw GeometryError(ErrorCode::RayDegenerate, "no non-grazing ray found");
}

PlanarWindingIndex::PlanarWindingIndex(std::vector<Vec3> polygon, double on_tol) : pts_(std::move(polygon)) {
    const std::size_t n = pts_.size();
    if (n < 3) {
        throw GeometryError(ErrorCode::DegenerateInput, "polygon needs at least 3 vertices");
    }
    lo_ = hi_ = Vec3{pts_[0].x, pts_[0].y, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        auto& p = pts_[i];
        p.z = 0.0;
        lo_.x = std::min(lo_.x, p.x);
        lo_.y = std::min(lo_.y, p.y);
        hi_.x = std::max(hi_.x, p.x);
        hi_.y = std::max(hi_.y, p.y);
    }
    for (std::size_t i = 0; i < n; ++i) {
        perimeter_ += distance(pts_[i], pts_[(i + 1) % n]);
    }
    on_tol_ = on_tol >= 0.0 ? on_tol : 1e-12 * perimeter_;

    slabs_ = std::max<std::size_t>(16, n);
    const double span = hi_.y - lo_.y;
    slab_height_ = span > 0.0 ? span / static_cast<double>(slabs_) : 1.0;
    auto slab_of = [&](double y) {
        const double t = std::floor((y - lo_.y) / slab_height_);
        return static_cast<std::size_t>(std::clamp(t, 0.0, static_cast<double>(slabs_ - 1)));
    };

    std::vector<std::uint32_t> counts(slabs_ + 1, 0);
    auto for_each_slab = [&](std::size_t e, auto&& fn) {
        const double y0 = std::min(pts_[e].y, pts_[(e + 1) % n].y) - on_tol_;
        const double y1 = std::max(pts_[e].y, pts_[(e + 1) % n].y) + on_tol_;
        for (std::size_t k = slab_of(y0), k1 = slab_of(y1); k <= k1; ++k) {
            fn(k);
        }
    };
    for (std::size_t e = 0; e < n; ++e) {
        for_each_slab(e, [&](std::size_t k) { ++counts[k + 1]; });
    }
    for (std::size_t k = 0; k < slabs_; ++k) {
        counts[k + 1] += counts[k];
    }
    slab_offsets_ = counts;
    slab_edges_.resize(counts[slabs_]);
    std::vector<std::uint32_t> fill(counts.begin(), counts.end() - 1);
    for (std::size_t e = 0; e < n; ++e) {
        for_each_slab(e, [&](std::size_t k) { slab_edges_[fill[k]++] = static_cast<std::uint32_t>(e); });
    }
}

std::optional<long> PlanarWindingIndex::winding(double x, double y) const {
    if (y < lo_.y - on_tol_ || y > hi_.y + on_tol_ || x > hi_.x + on_tol_) {
        return 0L;
    }
    const double t = std::floor((y - lo_.y) / slab_height_);
    const auto k = static_cast<std::size_t>(std::clamp(t, 0.0, static_cast<double>(slabs_ - 1)));
    const std::size_t n = pts_.size();
    const Vec3 q{x, y, 0.0};
    long w = 0;
    for (std::uint32_t idx = slab_offsets_[k]; idx < slab_offsets_[k + 1]; ++idx) {
        const std::uint32_t e = slab_edges_[idx];
        const Vec3& a = pts_[e];
        const Vec3& b = pts_[(e + 1) % n];
        if (std::max(a.x, b.x) < x - on_tol_) {
            continue;
        }
        const double ymin = std::min(a.y, b.y), ymax = std::max(a.y, b.y);
        if (y < ymin - on_tol_ || y > ymax + on_tol_) {
            continue;
        }
        if (point_segment_distance(q, a, b) <= on_tol_) {
            return std::nullopt;
        }
        if ((std::abs(a.y - y) <= on_tol_ && a.x >= x - on_tol_) ||
            (std::abs(b.y - y) <= on_tol_ && b.x >= x - on_tol_)) {
            return ray_winding(pts_, q, on_tol_);
        }
        w += crossing(a.x - x, a.y - y, b.x - x, b.y - y);
    }
    return w;
}

}  // namespace chordarea
