#include "chordarea/surface_index.hpp"

#include <algorithm>
#include <cmath>

#include "chordarea/error.hpp"
#include "chordarea/winding.hpp"

namespace chordarea {

SurfaceParityIndex::SurfaceParityIndex(const SurfaceMesh& mesh) : mesh_(&mesh) {
    const auto v = mesh.vertices();
    const auto tris = mesh.triangles();
    lo_ = hi_ = v[0];
    for (const auto& p : v) {
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y), std::max(hi_.z, p.z)};
    }
    on_tol_ = 1e-12 * mesh.scale();
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(tris.size()))));
    ny_ = nz_ = std::max<std::size_t>(1, side);
    cell_y_ = hi_.y > lo_.y ? (hi_.y - lo_.y) / static_cast<double>(ny_) : 1.0;
    cell_z_ = hi_.z > lo_.z ? (hi_.z - lo_.z) / static_cast<double>(nz_) : 1.0;

    auto cell_range = [&](double lo, double hi, double base, double size, std::size_t count) {
        auto clampi = [&](double t) {
            return static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, static_cast<double>(count - 1)));
        };
        return std::pair{clampi((lo - base) / size), clampi((hi - base) / size)};
    };
    auto visit = [&](std::size_t t, auto&& fn) {
        const auto& tri = tris[t];
        double y0 = v[tri[0]].y, y1 = y0, z0 = v[tri[0]].z, z1 = z0;
        for (int k = 1; k < 3; ++k) {
            y0 = std::min(y0, v[tri[k]].y);
            y1 = std::max(y1, v[tri[k]].y);
            z0 = std::min(z0, v[tri[k]].z);
            z1 = std::max(z1, v[tri[k]].z);
        }
        const auto [iy0, iy1] = cell_range(y0 - on_tol_, y1 + on_tol_, lo_.y, cell_y_, ny_);
        const auto [iz0, iz1] = cell_range(z0 - on_tol_, z1 + on_tol_, lo_.z, cell_z_, nz_);
        for (std::size_t iy = iy0; iy <= iy1; ++iy) {
            for (std::size_t iz = iz0; iz <= iz1; ++iz) {
                fn(iy * nz_ + iz);
            }
        }
    };
    std::vector<std::uint32_t> counts(ny_ * nz_ + 1, 0);
    for (std::size_t t = 0; t < tris.size(); ++t) {
        visit(t, [&](std::size_t c) { ++counts[c + 1]; });
    }
    for (std::size_t c = 0; c < ny_ * nz_; ++c) {
        counts[c + 1] += counts[c];
    }
    cell_offsets_ = counts;
    cell_tris_.resize(counts.back());
    std::vector<std::uint32_t> fill(counts.begin(), counts.end() - 1);
    for (std::size_t t = 0; t < tris.size(); ++t) {
        visit(t, [&](std::size_t c) { cell_tris_[fill[c]++] = static_cast<std::uint32_t>(t); });
    }
}

std::optional<int> SurfaceParityIndex::parity(const Vec3& q) const {
    if (q.y < lo_.y - on_tol_ || q.y > hi_.y + on_tol_ || q.z < lo_.z - on_tol_ || q.z > hi_.z + on_tol_ ||
        q.x > hi_.x + on_tol_) {
        return 0;
    }
    auto clampi = [](double t, std::size_t count) {
        return static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, static_cast<double>(count - 1)));
    };
    const std::size_t cell = clampi((q.y - lo_.y) / cell_y_, ny_) * nz_ + clampi((q.z - lo_.z) / cell_z_, nz_);
    const auto v = mesh_->vertices();
    const auto tris = mesh_->triangles();
    constexpr double kGraze = 1e-10;
    int count = 0;
    auto fallback = [&]() -> std::optional<int> {
        try {
            return w2_surface(*mesh_, q);
        } catch (const GeometryError& e) {
            if (e.code() == ErrorCode::PointOnSurface) {
                return std::nullopt;
            }
            throw;
        }
    };
    for (std::uint32_t idx = cell_offsets_[cell]; idx < cell_offsets_[cell + 1]; ++idx) {
        const auto& tri = tris[cell_tris_[idx]];
        const Vec3& a = v[tri[0]];
        const Vec3& b = v[tri[1]];
        const Vec3& c = v[tri[2]];
        if (std::max({a.x, b.x, c.x}) < q.x - on_tol_) {
            continue;
        }
        // Barycentric coordinates of (q.y, q.z) in the projected triangle.
        const double det = (b.y - a.y) * (c.z - a.z) - (c.y - a.y) * (b.z - a.z);
        const double scale = norm(b - a) * norm(c - a);
        if (std::abs(det) <= 1e-14 * scale) {
            const double y0 = std::min({a.y, b.y, c.y}), y1 = std::max({a.y, b.y, c.y});
            const double z0 = std::min({a.z, b.z, c.z}), z1 = std::max({a.z, b.z, c.z});
            if (q.y >= y0 - on_tol_ && q.y <= y1 + on_tol_ && q.z >= z0 - on_tol_ && q.z <= z1 + on_tol_) {
                return fallback();
            }
            continue;
        }
        const double l1 = ((q.y - a.y) * (c.z - a.z) - (c.y - a.y) * (q.z - a.z)) / det;
        const double l2 = ((b.y - a.y) * (q.z - a.z) - (q.y - a.y) * (b.z - a.z)) / det;
        const double l0 = 1.0 - l1 - l2;
        if (l0 < -kGraze || l1 < -kGraze || l2 < -kGraze) {
            continue;
        }
        if (l0 <= kGraze || l1 <= kGraze || l2 <= kGraze) {
            return fallback();
        }
        const double x = l0 * a.x + l1 * b.x + l2 * c.x;
        if (std::abs(x - q.x) <= on_tol_) {
            return std::nullopt;
        }
        if (x > q.x) {
            ++count;
        }
    }
    return count % 2;
}

}  // namespace chordarea
