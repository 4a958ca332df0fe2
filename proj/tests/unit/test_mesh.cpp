#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordarea/error.hpp"
#include "chordarea/mesh.hpp"
#include "oracles.hpp"

using namespace chordarea;

namespace {

constexpr double kPi = oracle::kPi;

double signed_volume(const SurfaceMesh& m) {
    double six = 0.0;
    const auto v = m.vertices();
    for (const auto& t : m.triangles()) {
        six += dot(v[t[0]], cross(v[t[1]], v[t[2]]));
    }
    return six / 6.0;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no GeometryError thrown";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(Icosphere, CountsClosureAndOrientation) {
    for (int k = 0; k <= 4; ++k) {
        const SurfaceMesh s = icosphere(k);
        const std::size_t faces = 20u << (2 * k);
        EXPECT_EQ(s.triangles().size(), faces);
        EXPECT_EQ(s.vertices().size(), faces / 2 + 2);
        EXPECT_TRUE(s.is_closed());
        EXPECT_GT(signed_volume(s), 0.0);
        ASSERT_TRUE(s.antipode().has_value());
        const auto& a = *s.antipode();
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(s.vertices()[a[i]], -s.vertices()[i]);
        }
    }
    EXPECT_GT(signed_volume(cube_mesh()), 0.0);
    EXPECT_TRUE(cube_mesh().is_closed());
}

TEST(Icosphere, AreaAndTotalDiameter) {
    const SurfaceMesh s = icosphere(4);
    EXPECT_NEAR(s.total_area() / (4.0 * kPi), 1.0, 0.01);
    double lumped = 0.0;
    for (double a : s.vertex_area()) {
        lumped += a;
    }
    EXPECT_NEAR(lumped, s.total_area(), 1e-12 * s.total_area());
    // Every antipodal chord of the unit sphere has length 2.
    EXPECT_NEAR(total_diameter_surface(s), 2.0 * s.total_area(), 1e-12 * s.total_area());
    EXPECT_NEAR(total_diameter_surface(s) / (8.0 * kPi), 1.0, 0.01);
}

TEST(Mesh, AntipodeValidation) {
    const SurfaceMesh s = icosphere(1);
    std::vector<Vec3> v(s.vertices().begin(), s.vertices().end());
    std::vector<TriangleIndices> t(s.triangles().begin(), s.triangles().end());
    std::vector<std::size_t> a = *s.antipode();

    auto identity = a;
    for (std::size_t i = 0; i < identity.size(); ++i) {
        identity[i] = i;
    }
    EXPECT_EQ(code_of([&] { SurfaceMesh(v, t, identity); }), ErrorCode::AntipodeMismatch);

    auto not_involution = a;
    std::swap(not_involution[0], not_involution[1]);
    EXPECT_EQ(code_of([&] { SurfaceMesh(v, t, not_involution); }), ErrorCode::AntipodeMismatch);

    auto short_map = a;
    short_map.pop_back();
    EXPECT_EQ(code_of([&] { SurfaceMesh(v, t, short_map); }), ErrorCode::AntipodeMismatch);

    // A vertex pairing that does not preserve edge lengths.
    auto stretched = v;
    stretched[0] = 1.3 * stretched[0];
    EXPECT_EQ(code_of([&] { SurfaceMesh(stretched, t, a); }), ErrorCode::AntipodeMismatch);

    auto bad_tri = t;
    bad_tri[0][1] = v.size() + 5;
    EXPECT_THROW(SurfaceMesh(v, bad_tri), GeometryError);

    EXPECT_EQ(code_of([&] { total_diameter_surface(SurfaceMesh(v, t)); }), ErrorCode::NoAntipode);
}

TEST(Mesh, OpenMeshIsDetected) {
    const SurfaceMesh s = icosphere(1);
    std::vector<TriangleIndices> t(s.triangles().begin() + 1, s.triangles().end());
    const SurfaceMesh open({s.vertices().begin(), s.vertices().end()}, t);
    EXPECT_FALSE(open.is_closed());
    EXPECT_EQ(code_of([&] { require_closed(open); }), ErrorCode::OpenMesh);
}

TEST(SymmetricMesh, RadialFunctionChecks) {
    EXPECT_EQ(code_of([] { make_symmetric_mesh([](const Vec3& u) { return 1.0 + 0.1 * u.x; }, 2); }),
              ErrorCode::AsymmetricRadial);
    EXPECT_EQ(code_of([] { make_symmetric_mesh([](const Vec3&) { return -1.0; }, 2); }), ErrorCode::InvalidSpec);
    const SurfaceMesh e = make_symmetric_mesh(
        [](const Vec3& u) { return 1.0 / std::sqrt(u.x * u.x + u.y * u.y / 0.25 + u.z * u.z / 0.09); }, 4);
    EXPECT_TRUE(e.is_closed());
    EXPECT_GT(signed_volume(e), 0.0);
    EXPECT_NEAR(signed_volume(e) / (4.0 * kPi / 3.0 * 1.0 * 0.5 * 0.3), 1.0, 0.01);
}

TEST(Mesh, RigidMotionKeepsMeasures) {
    const SurfaceMesh s = icosphere(3);
    std::mt19937_64 rng(9);
    Vec3 rot[3];
    oracle::random_rotation(rng, rot);
    const SurfaceMesh m = rigid_transform(s, rot, {1.0, -2.0, 0.5});
    EXPECT_NEAR(m.total_area(), s.total_area(), 1e-12 * s.total_area());
    EXPECT_NEAR(total_diameter_surface(m), total_diameter_surface(s), 1e-10);
    EXPECT_NEAR(signed_volume(m), signed_volume(s), 1e-10);
}
