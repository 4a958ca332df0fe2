#include "chordarea/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "chordarea/error.hpp"

namespace chordarea {

SurfaceMesh::SurfaceMesh(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles,
                         std::optional<std::vector<std::size_t>> antipode)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), antipode_(std::move(antipode)) {
    const std::size_t nv = vertices_.size();
    if (nv == 0 || triangles_.empty()) {
        throw GeometryError(ErrorCode::DegenerateInput, "empty mesh");
    }
    Vec3 lo = vertices_[0], hi = vertices_[0];
    for (const auto& v : vertices_) {
        if (!is_finite(v)) {
            throw GeometryError(ErrorCode::DegenerateInput, "non-finite vertex");
        }
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    scale_ = distance(lo, hi);

    vertex_area_.assign(nv, 0.0);
    for (const auto& t : triangles_) {
        for (auto idx : t) {
            if (idx >= nv) {
                throw GeometryError(ErrorCode::InvalidSpec, "triangle index out of range");
            }
        }
        const double area = 0.5 * norm(cross(vertices_[t[1]] - vertices_[t[0]], vertices_[t[2]] - vertices_[t[0]]));
        total_area_ += area;
        for (auto idx : t) {
            vertex_area_[idx] += area / 3.0;
        }
    }

    if (antipode_) {
        const auto& a = *antipode_;
        if (a.size() != nv) {
            throw GeometryError(ErrorCode::AntipodeMismatch, "antipode map has wrong length");
        }
        for (std::size_t i = 0; i < nv; ++i) {
            if (a[i] >= nv || a[i] == i || a[a[i]] != i) {
                throw GeometryError(ErrorCode::AntipodeMismatch,
                                    "antipode is not a fixed-point-free involution at vertex " + std::to_string(i));
            }
        }
        const double tol = 1e-6 * std::max(scale_, 1e-300);
        for (const auto& t : triangles_) {
            for (int e = 0; e < 3; ++e) {
                const std::size_t i = t[e], j = t[(e + 1) % 3];
                const double len = distance(vertices_[i], vertices_[j]);
                const double img = distance(vertices_[a[i]], vertices_[a[j]]);
                if (std::abs(len - img) > tol) {
                    throw GeometryError(ErrorCode::AntipodeMismatch, "antipode does not preserve edge lengths");
                }
            }
        }
    }
}

bool SurfaceMesh::is_closed() const {
    // Directed edge counts; a closed oriented surface uses each directed edge once
    // and its reverse once.
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (const auto& t : triangles_) {
        for (int e = 0; e < 3; ++e) {
            ++directed[{t[e], t[(e + 1) % 3]}];
        }
    }
    for (const auto& [edge, count] : directed) {
        if (count != 1) {
            return false;
        }
        auto it = directed.find({edge.second, edge.first});
        if (it == directed.end() || it->second != 1) {
            return false;
        }
    }
    return true;
}

void require_closed(const SurfaceMesh& mesh) {
    if (!mesh.is_closed()) {
        throw GeometryError(ErrorCode::OpenMesh, "every edge must be shared by exactly two oppositely oriented triangles");
    }
}

double total_diameter_surface(const SurfaceMesh& mesh) {
    if (!mesh.antipode()) {
        throw GeometryError(ErrorCode::NoAntipode, "mesh has no antipodal map");
    }
    const auto& a = *mesh.antipode();
    const auto v = mesh.vertices();
    const auto w = mesh.vertex_area();
    double td = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        td += w[i] * distance(v[a[i]], v[i]);
    }
    return td;
}

namespace {

struct UnitIcosphere {
    std::vector<Vec3> dirs;
    std::vector<TriangleIndices> tris;
    std::vector<std::size_t> antipode;
};

UnitIcosphere unit_icosphere(int subdivisions) {
    if (subdivisions < 0 || subdivisions > 8) {
        throw GeometryError(ErrorCode::InvalidSpec, "icosphere subdivisions must be in [0, 8]");
    }
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    UnitIcosphere s;
    s.dirs = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0}, {0, -1, phi}, {0, 1, phi},
              {0, -1, -phi}, {0, 1, -phi}, {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& d : s.dirs) {
        d = normalized(d);
    }
    s.tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
              {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
              {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
        auto mid = [&](std::size_t a, std::size_t b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) {
                return it->second;
            }
            // IEEE addition is sign-symmetric, so antipodal edges get exactly negated midpoints.
            s.dirs.push_back(normalized(s.dirs[key.first] + s.dirs[key.second]));
            const std::size_t idx = s.dirs.size() - 1;
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<TriangleIndices> next;
        next.reserve(s.tris.size() * 4);
        for (const auto& t : s.tris) {
            const std::size_t ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        s.tris = std::move(next);
    }

    // Antipodes by exact coordinate lookup; normalization commutes with negation.
    std::map<std::tuple<double, double, double>, std::size_t> where;
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        where.emplace(std::make_tuple(s.dirs[i].x, s.dirs[i].y, s.dirs[i].z), i);
    }
    s.antipode.resize(s.dirs.size());
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        const Vec3 m = -s.dirs[i];
        auto it = where.find(std::make_tuple(m.x, m.y, m.z));
        if (it == where.end()) {
            throw GeometryError(ErrorCode::AntipodeMismatch, "icosphere vertex set is not symmetric");
        }
        s.antipode[i] = it->second;
    }
    return s;
}

}  // namespace

SurfaceMesh icosphere(int subdivisions, double radius, const Vec3& center) {
    if (!(radius > 0.0)) {
        throw GeometryError(ErrorCode::InvalidSpec, "sphere radius must be positive");
    }
    auto s = unit_icosphere(subdivisions);
    for (auto& d : s.dirs) {
        d = center + radius * d;
    }
    return SurfaceMesh(std::move(s.dirs), std::move(s.tris), std::move(s.antipode));
}

SurfaceMesh make_symmetric_mesh(const RadialFunction& radius, int subdivisions) {
    auto s = unit_icosphere(subdivisions);
    std::vector<double> r(s.dirs.size());
    double rmax = 0.0;
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        r[i] = radius(s.dirs[i]);
        if (!(r[i] > 0.0) || !std::isfinite(r[i])) {
            throw GeometryError(ErrorCode::InvalidSpec, "radial function must be positive and finite");
        }
        rmax = std::max(rmax, r[i]);
    }
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        if (std::abs(r[i] - r[s.antipode[i]]) > 1e-9 * rmax) {
            throw GeometryError(ErrorCode::AsymmetricRadial, "radial function is not even");
        }
    }
    // Use one value per antipodal pair so the vertex set is exactly symmetric.
    std::vector<Vec3> verts(s.dirs.size());
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        const std::size_t j = s.antipode[i];
        const double ri = i < j ? r[i] : r[j];
        verts[i] = ri * s.dirs[i];
    }
    return SurfaceMesh(std::move(verts), std::move(s.tris), std::move(s.antipode));
}

SurfaceMesh cube_mesh(double side) {
    std::vector<Vec3> v;
    for (int i = 0; i < 8; ++i) {
        v.push_back({(i & 1) ? side : 0.0, (i & 2) ? side : 0.0, (i & 4) ? side : 0.0});
    }
    std::vector<TriangleIndices> t = {{0, 2, 3}, {0, 3, 1}, {4, 5, 7}, {4, 7, 6}, {0, 1, 5}, {0, 5, 4},
                                      {2, 6, 7}, {2, 7, 3}, {0, 4, 6}, {0, 6, 2}, {1, 3, 7}, {1, 7, 5}};
    // Antipode: reflection through the cube center, vertex i -> 7 - i.
    std::vector<std::size_t> a(8);
    for (std::size_t i = 0; i < 8; ++i) {
        a[i] = 7 - i;
    }
    return SurfaceMesh(std::move(v), std::move(t), std::move(a));
}

SurfaceMesh rigid_transform(const SurfaceMesh& mesh, const Vec3 rotation[3], const Vec3& translation) {
    std::vector<Vec3> v;
    v.reserve(mesh.vertices().size());
    for (const auto& p : mesh.vertices()) {
        v.push_back(Vec3{dot(rotation[0], p), dot(rotation[1], p), dot(rotation[2], p)} + translation);
    }
    return SurfaceMesh(std::move(v), {mesh.triangles().begin(), mesh.triangles().end()}, mesh.antipode());
}

SurfaceMesh merge(const SurfaceMesh& a, const SurfaceMesh& b) {
    std::vector<Vec3> v(a.vertices().begin(), a.vertices().end());
    v.insert(v.end(), b.vertices().begin(), b.vertices().end());
    const std::size_t off = a.vertices().size();
    std::vector<TriangleIndices> t(a.triangles().begin(), a.triangles().end());
    for (const auto& tri : b.triangles()) {
        t.push_back({tri[0] + off, tri[1] + off, tri[2] + off});
    }
    std::optional<std::vector<std::size_t>> anti;
    if (a.antipode() && b.antipode()) {
        anti = *a.antipode();
        for (auto j : *b.antipode()) {
            anti->push_back(j + off);
        }
    }
    return SurfaceMesh(std::move(v), std::move(t), std::move(anti));
}

SurfaceMesh flipped(const SurfaceMesh& mesh) {
    std::vector<TriangleIndices> t;
    t.reserve(mesh.triangles().size());
    for (const auto& tri : mesh.triangles()) {
        t.push_back({tri[0], tri[2], tri[1]});
    }
    return SurfaceMesh({mesh.vertices().begin(), mesh.vertices().end()}, std::move(t), mesh.antipode());
}

}  // namespace chordarea
