#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chordarea/mesh.hpp"

namespace chordarea {

/// Uniform (y, z) grid over a triangle mesh for many +x ray-parity queries.
/// Agrees with w2_surface(); grazing queries are delegated to it.
class SurfaceParityIndex {
public:
    explicit SurfaceParityIndex(const SurfaceMesh& mesh);

    /// Crossing parity of q, or nullopt when q lies on the surface.
    std::optional<int> parity(const Vec3& q) const;

private:
    const SurfaceMesh* mesh_;
    std::vector<std::uint32_t> cell_offsets_;
    std::vector<std::uint32_t> cell_tris_;
    Vec3 lo_{};
    Vec3 hi_{};
    double cell_y_ = 1.0;
    double cell_z_ = 1.0;
    std::size_t ny_ = 1;
    std::size_t nz_ = 1;
    double on_tol_ = 0.0;
};

}  // namespace chordarea
