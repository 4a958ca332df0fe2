#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordarea/error.hpp"
#include "chordarea/families.hpp"
#include "chordarea/planar_index.hpp"
#include "chordarea/surface_index.hpp"
#include "chordarea/winding.hpp"
#include "oracles.hpp"

using namespace chordarea;

namespace {

ClosedCurve circle(std::size_t n = 1024) { return generate_curve({FamilyKind::circle, {}, n, 0}); }

}  // namespace

TEST(Winding, CircleOrientationAndOutside) {
    const ClosedCurve c = circle();
    EXPECT_EQ(winding_number(c, {0.0, 0.0, 0.0}), 1);
    EXPECT_EQ(winding_number(reversed(c), {0.0, 0.0, 0.0}), -1);
    EXPECT_EQ(winding_number(c, {0.3, -0.5, 0.0}), 1);
    EXPECT_EQ(winding_number(c, {1.5, 0.0, 0.0}), 0);
    EXPECT_EQ(w2_point(c, {1.5, 0.0, 0.0}), 0);
    EXPECT_EQ(w2_point(reversed(c), {0.1, 0.1, 0.0}), 1);
}

TEST(Winding, PointOnCurveThrows) {
    const ClosedCurve c = circle();
    const Vec3 mid = 0.5 * (c[5] + c[6]);
    for (const Vec3& q : {c[0], c[17], mid}) {
        try {
            winding_number(c, q);
            ADD_FAILURE() << "expected PointOnCurve";
        } catch (const GeometryError& e) {
            EXPECT_EQ(e.code(), ErrorCode::PointOnCurve);
        }
    }
}

TEST(Winding, FigureEightAgainstAngleSummationOfTheSmoothCurve) {
    const ClosedCurve eight = generate_curve({FamilyKind::figure_eight, {}, 4096, 0});
    // Dense sampling of the smooth parametrization, 1e6 steps.
    std::vector<Vec3> dense(1'000'000);
    for (std::size_t j = 0; j < dense.size(); ++j) {
        const double t = 2.0 * oracle::kPi * static_cast<double>(j) / static_cast<double>(dense.size());
        dense[j] = {std::sin(t), std::sin(t) * std::cos(t), 0.0};
    }
    const Vec3 left{-0.5, 0.05, 0.0}, right{0.5, 0.05, 0.0};
    const long wl = winding_number(eight, left);
    const long wr = winding_number(eight, right);
    EXPECT_EQ(std::abs(wl), 1);
    EXPECT_EQ(wl, -wr);
    EXPECT_EQ(wl, std::lround(oracle::angle_sum_winding(dense, left.x, left.y)));
    EXPECT_EQ(wr, std::lround(oracle::angle_sum_winding(dense, right.x, right.y)));
    EXPECT_EQ(winding_number(eight, {0.0, 0.3, 0.0}), 0);
}

TEST(Winding, RandomPointsMatchAngleSummation) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {{"amplitude", 1.5}}, 512, seed});
        for (int k = 0; k < 200; ++k) {
            const Vec3 q{u(rng), u(rng), 0.0};
            const double ref = oracle::angle_sum_winding(c.points(), q.x, q.y);
            EXPECT_EQ(winding_number(c, q), std::lround(ref));
        }
    }
}

TEST(Winding, TrefoilProjectionWindsThreeTimes) {
    const ClosedCurve knot = generate_curve({FamilyKind::trefoil, {}, 2048, 0});
    std::vector<Vec3> shadow(knot.points().begin(), knot.points().end());
    for (auto& p : shadow) {
        p.z = 0.0;
    }
    const ClosedCurve flat(2, shadow);
    EXPECT_EQ(winding_number(flat, {0.0, 0.0, 0.0}), 3);
    EXPECT_EQ(std::lround(oracle::angle_sum_winding(shadow, 0.0, 0.0)), 3);
}

TEST(Linking, TrefoilAndAxis) {
    const ClosedCurve knot = generate_curve({FamilyKind::trefoil, {}, 2048, 0});
    EXPECT_EQ(linking_mod2(knot, LineSample::through({0, 0, 1}, {0, 0, 0})), 1);
    EXPECT_EQ(linking_mod2(knot, LineSample::through({0, 0, 1}, {10, 0, 0})), 0);
    try {
        linking_mod2(knot, LineSample::through({0.3, 0.2, 1.0}, knot[100]));
        ADD_FAILURE() << "expected LineHitsCurve";
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::LineHitsCurve);
    }
}

TEST(Linking, PlanarCircleMatchesPointWinding) {
    const ClosedCurve c = as_space_curve(circle());
    EXPECT_EQ(linking_mod2(c, LineSample::through({0.2, 0.1, 1.0}, {0.3, 0.3, 0.0})), 1);
    EXPECT_EQ(linking_mod2(c, LineSample::through({0.2, 0.1, 1.0}, {1.3, 0.3, 0.0})), 0);
    // A line in the curve's plane never links.
    EXPECT_EQ(linking_mod2(c, LineSample::through({1.0, 0.0, 0.0}, {0.0, 0.0, 0.5})), 0);
}

TEST(PlanarIndex, AgreesWithRayWindingAndRotatedRays) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-2.2, 2.2);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {{"amplitude", 1.5}}, 1024, seed});
        const std::vector<Vec3> pts(c.points().begin(), c.points().end());
        const PlanarWindingIndex index(pts);
        for (int k = 0; k < 2000; ++k) {
            const Vec3 q{u(rng), u(rng), 0.0};
            const auto a = index.winding(q.x, q.y);
            const auto b = ray_winding(pts, q, index.on_tolerance());
            ASSERT_EQ(a.has_value(), b.has_value());
            if (a) {
                EXPECT_EQ(*a, *b);
            }
        }
    }
}

TEST(PlanarIndex, VertexGrazingQueries) {
    // Queries level with vertices exercise the fallback.
    const ClosedCurve c = circle(64);
    const std::vector<Vec3> pts(c.points().begin(), c.points().end());
    const PlanarWindingIndex index(pts);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto inner = index.winding(0.5 * c[i].x, c[i].y);
        if (std::abs(c[i].x) < 1e-9) {
            EXPECT_FALSE(inner.has_value());
        } else {
            EXPECT_EQ(inner.value_or(99), 1) << i;
        }
        EXPECT_EQ(index.winding(-2.0, c[i].y).value_or(99), 0);
        EXPECT_FALSE(index.winding(c[i].x, c[i].y).has_value());
    }
}

TEST(SurfaceParity, SphereInsideOutside) {
    const SurfaceMesh s = icosphere(3);
    EXPECT_EQ(w2_surface(s, {0.0, 0.0, 0.0}), 1);
    EXPECT_EQ(w2_surface(s, {0.1, -0.2, 0.3}), 1);
    EXPECT_EQ(w2_surface(s, {1.5, 0.0, 0.0}), 0);
    // Axis-aligned rays from the center pass through vertices; the re-draw handles them.
    EXPECT_EQ(w2_surface(s, {0.0, 0.0, 0.0}), 1);
    try {
        w2_surface(s, s.vertices()[7]);
        ADD_FAILURE() << "expected PointOnSurface";
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::PointOnSurface);
    }
}

TEST(SurfaceParity, NestedAndDoubledSpheres) {
    const SurfaceMesh shell = merge(icosphere(3, 2.0), icosphere(3, 1.0));
    EXPECT_EQ(w2_surface(shell, {0.0, 0.0, 0.0}), 0);
    EXPECT_EQ(w2_surface(shell, {1.5, 0.1, 0.0}), 1);
    const SurfaceMesh doubled = merge(icosphere(2), icosphere(2));
    EXPECT_EQ(w2_surface(doubled, {0.1, 0.2, 0.0}), 0);
}

TEST(SurfaceParity, IndexAgreesWithDirectRays) {
    const SurfaceMesh m = generate_mesh({FamilyKind::symmetric_mesh, {{"amp", 0.1}, {"subdiv", 3}}, 0, 4});
    const SurfaceParityIndex index(m);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int k = 0; k < 3000; ++k) {
        const Vec3 q{u(rng), u(rng), u(rng)};
        const auto p = index.parity(q);
        ASSERT_TRUE(p.has_value());
        EXPECT_EQ(*p, w2_surface(m, q));
    }
}
