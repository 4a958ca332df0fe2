#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chordarea/vec.hpp"

namespace chordarea {

using TriangleIndices = std::array<std::size_t, 3>;

/// Triangulated surface in R^3 with an optional vertex-level antipodal involution.
///
/// Construction validates indices and, when given, the involution: it must be
/// fixed-point free, satisfy a(a(i)) = i, and preserve the length of every mesh
/// edge within 1e-6 * (bounding-box diagonal). Closedness is not required here;
/// operations that need it call require_closed().
class SurfaceMesh {
public:
    SurfaceMesh(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles,
                std::optional<std::vector<std::size_t>> antipode = std::nullopt);

    std::span<const Vec3> vertices() const { return vertices_; }
    std::span<const TriangleIndices> triangles() const { return triangles_; }
    const std::optional<std::vector<std::size_t>>& antipode() const { return antipode_; }
    /// Barycentric lumping: a third of every incident triangle's area.
    std::span<const double> vertex_area() const { return vertex_area_; }
    double total_area() const { return total_area_; }
    /// Bounding-box diagonal.
    double scale() const { return scale_; }

    /// Every undirected edge is used by exactly two triangles, once in each direction.
    bool is_closed() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<TriangleIndices> triangles_;
    std::optional<std::vector<std::size_t>> antipode_;
    std::vector<double> vertex_area_;
    double total_area_ = 0.0;
    double scale_ = 0.0;
};

/// Throws OpenMesh unless mesh.is_closed().
void require_closed(const SurfaceMesh& mesh);

/// Sum of vertex_area[i] * |v[a(i)] - v[i]|. Throws NoAntipode.
double total_diameter_surface(const SurfaceMesh& mesh);

/// Subdivided icosahedron projected to the sphere of the given radius, with
/// antipode v -> -v. The vertex set is exactly symmetric under negation.
SurfaceMesh icosphere(int subdivisions, double radius = 1.0, const Vec3& center = {});

using RadialFunction = std::function<double(const Vec3&)>;

/// Star-shaped mesh with vertices r(u) * u over the icosphere directions u and
/// antipode v -> -v. Throws AsymmetricRadial when |r(u) - r(-u)| exceeds
/// 1e-9 * max r at any vertex direction, InvalidSpec when r is not positive.
SurfaceMesh make_symmetric_mesh(const RadialFunction& radius, int subdivisions);

/// Axis-aligned cube [0, side]^3 as 12 outward-oriented triangles.
SurfaceMesh cube_mesh(double side = 1.0);

/// Applies x -> rotation * x + translation (rotation given as rows); the antipode map is kept.
SurfaceMesh rigid_transform(const SurfaceMesh& mesh, const Vec3 rotation[3], const Vec3& translation);

/// Disjoint union with independent vertex indices. The antipode map is kept
/// only if both inputs carry one.
SurfaceMesh merge(const SurfaceMesh& a, const SurfaceMesh& b);

/// Inverts every triangle's orientation.
SurfaceMesh flipped(const SurfaceMesh& mesh);

}  // namespace chordarea
