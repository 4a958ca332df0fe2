#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordarea/curve.hpp"
#include "chordarea/error.hpp"
#include "chordarea/families.hpp"
#include "oracles.hpp"

using namespace chordarea;

namespace {

std::vector<Vec3> regular_polygon(std::size_t n, double r = 1.0) {
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * oracle::kPi * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({r * std::cos(t), r * std::sin(t), 0.0});
    }
    return pts;
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

TEST(ClosedCurve, RejectsBadSampleCounts) {
    EXPECT_EQ(code_of([] { ClosedCurve(2, regular_polygon(7)); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { ClosedCurve(2, regular_polygon(6)); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { ClosedCurve(4, regular_polygon(8)); }), ErrorCode::InvalidSpec);
    auto pts = regular_polygon(8);
    pts[3].x = std::nan("");
    EXPECT_EQ(code_of([&] { ClosedCurve(2, pts); }), ErrorCode::DegenerateInput);
}

TEST(ClosedCurve, RegularPolygonIsUniformWithClosedFormPerimeter) {
    for (std::size_t n : {8u, 64u, 4096u}) {
        const ClosedCurve c(2, regular_polygon(n));
        EXPECT_TRUE(c.uniform());
        EXPECT_NEAR(c.length(), 2.0 * n * std::sin(oracle::kPi / n), 1e-12);
        EXPECT_EQ(c.antipode(0), n / 2);
        EXPECT_EQ(c.antipode(n / 2 + 1), 1u);
    }
}

TEST(ClosedCurve, CircleLength) {
    const ClosedCurve c = generate_curve({FamilyKind::circle, {{"radius", 1.0}}, 4096, 0});
    EXPECT_NEAR(c.length() / (2.0 * oracle::kPi), 1.0, 1e-4);
}

TEST(Resample, SquareBecomesEquilateralOnTheInput) {
    const std::vector<Vec3> square{{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0}};
    for (std::size_t n : {8u, 10u, 100u, 1000u}) {
        const ClosedCurve c = resample_arclength(square, n);
        EXPECT_TRUE(c.uniform()) << n;
        EXPECT_EQ(c[0], square[0]);
        for (const auto& p : c.points()) {
            double d = 1e9;
            for (std::size_t k = 0; k < 4; ++k) {
                d = std::min(d, point_segment_distance(p, square[k], square[(k + 1) % 4]));
            }
            EXPECT_LE(d, 1e-12);
        }
        // Corners are cut, so the length never exceeds the input and approaches it.
        EXPECT_LE(c.length(), 8.0 + 1e-12);
        EXPECT_GE(c.length(), 8.0 - 4.0 * (2.0 - std::sqrt(2.0)) * c.step());
    }
    // N divisible by 4 hits the corners exactly.
    EXPECT_NEAR(resample_arclength(square, 16).length(), 8.0, 1e-12);
}

TEST(Resample, IsIdempotent) {
    const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {{"modes", 5}}, 512, 11});
    const ClosedCurve again = resample_arclength(c.points(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_LE(distance(c[i], again[i]), 1e-9 * c.length());
    }
}

TEST(Resample, RejectsDegenerateInput) {
    const std::vector<Vec3> flat{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {1, 0, 0}};
    EXPECT_EQ(code_of([&] { resample_arclength(flat, 8); }), ErrorCode::DegenerateInput);
    const std::vector<Vec3> dot{{1, 1, 0}, {1, 1, 0}, {1, 1, 0}};
    EXPECT_EQ(code_of([&] { resample_arclength(dot, 8); }), ErrorCode::DegenerateInput);
    const std::vector<Vec3> bad{{0, 0, 0}, {1, 0, 0}, {0, INFINITY, 0}};
    EXPECT_EQ(code_of([&] { resample_arclength(bad, 8); }), ErrorCode::DegenerateInput);
    EXPECT_EQ(code_of([] { resample_arclength(regular_polygon(8), 9); }), ErrorCode::InvalidSpec);
}

TEST(Resample, ClosingDuplicateIsIgnored) {
    auto pts = regular_polygon(64);
    const ClosedCurve a = resample_arclength(pts, 64);
    pts.push_back(pts.front());
    const ClosedCurve b = resample_arclength(pts, 64);
    for (std::size_t i = 0; i < 64; ++i) {
        EXPECT_EQ(a[i], b[i]);
    }
}

TEST(Classify, KnownShapes) {
    const auto circle = classify(generate_curve({FamilyKind::circle, {}, 1024, 0}));
    EXPECT_TRUE(circle.convex);
    EXPECT_TRUE(circle.centrally_symmetric);
    ASSERT_TRUE(circle.symmetry_center.has_value());
    EXPECT_NEAR(norm(*circle.symmetry_center), 0.0, 1e-12);

    const auto ellipse = classify(generate_curve({FamilyKind::ellipse, {}, 1024, 0}));
    EXPECT_TRUE(ellipse.convex);
    EXPECT_TRUE(ellipse.centrally_symmetric);

    const auto horseshoe = classify(generate_curve({FamilyKind::horseshoe, {{"n", 4}}, 2048, 0}));
    EXPECT_FALSE(horseshoe.convex);
    EXPECT_FALSE(horseshoe.centrally_symmetric);

    const auto eight = classify(generate_curve({FamilyKind::figure_eight, {}, 1024, 0}));
    EXPECT_FALSE(eight.convex);

    const std::vector<Vec3> square{{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0}};
    const auto sq = classify(resample_arclength(square, 64));
    EXPECT_TRUE(sq.convex);
    EXPECT_TRUE(sq.centrally_symmetric);
}

TEST(Classify, OffCenterSymmetryAndTiltedPlane) {
    const ClosedCurve circle = generate_curve({FamilyKind::circle, {}, 256, 0});
    std::mt19937_64 rng(5);
    Vec3 rot[3];
    oracle::random_rotation(rng, rot);
    const ClosedCurve tilted = rigid_transform(as_space_curve(circle), rot, {3.0, -1.0, 2.0});
    const auto s = classify(tilted);
    EXPECT_TRUE(s.convex);
    EXPECT_TRUE(s.centrally_symmetric);
    EXPECT_NEAR(distance(*s.symmetry_center, {3.0, -1.0, 2.0}), 0.0, 1e-9);

    // The trefoil is not planar, so never convex.
    EXPECT_FALSE(classify(generate_curve({FamilyKind::trefoil, {}, 1024, 0})).convex);
}

TEST(Classify, NonConvexQuadrilateral) {
    const std::vector<Vec3> dart{{0, 0, 0}, {2, 1, 0}, {0, 2, 0}, {0.8, 1, 0}};
    EXPECT_FALSE(classify(resample_arclength(dart, 64)).convex);
}

TEST(CurveOps, RigidMotionAndReversal) {
    const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {}, 512, 3});
    Vec3 rot[3];
    oracle::planar_rotation(0.7, rot);
    const ClosedCurve moved = rigid_transform(c, rot, {1.0, 2.0, 0.0});
    EXPECT_NEAR(moved.length(), c.length(), 1e-12 * c.length());
    EXPECT_TRUE(moved.uniform());

    const ClosedCurve r = reversed(c);
    EXPECT_EQ(r[0], c[0]);
    EXPECT_EQ(r[1], c[c.size() - 1]);
    EXPECT_NEAR(r.length(), c.length(), 1e-12 * c.length());
    EXPECT_TRUE(r.uniform());

    const auto chord = antipodal_chord(c, 3);
    EXPECT_EQ(chord.p, c[3]);
    EXPECT_EQ(chord.p_star, c[3 + c.size() / 2]);
    EXPECT_DOUBLE_EQ(chord.chord_len, distance(c[3], c[3 + c.size() / 2]));
}
