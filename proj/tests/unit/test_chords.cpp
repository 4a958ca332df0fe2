#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordarea/chords.hpp"
#include "chordarea/error.hpp"
#include "chordarea/families.hpp"
#include "chordarea/winding.hpp"
#include "oracles.hpp"

using namespace chordarea;

namespace {

constexpr double kPi = oracle::kPi;

ClosedCurve circle(std::size_t n = 4096, double r = 1.0) {
    return generate_curve({FamilyKind::circle, {{"radius", r}}, n, 0});
}

}  // namespace

TEST(TotalDiameter, CircleIsTwiceRadiusTimesLength) {
    const ClosedCurve c = circle(4096, 1.5);
    EXPECT_NEAR(total_diameter(c), 3.0 * c.length(), 1e-12 * c.length());
    EXPECT_NEAR(total_diameter(c) / (4.0 * kPi * 1.5 * 1.5), 1.0, 1e-6);
}

TEST(TotalDiameter, PolygonFormMatchesQuadratureAndNeverExceedsTrapezoid) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {}, 128, seed});
        double ref = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Vec3 a = c[c.antipode(i)] - c[i];
            const Vec3 b = c[c.antipode(i + 1)] - c[i + 1];
            ref += oracle::simpson([&](double t) { return norm(a + t * (b - a)); }, 0.0, 1.0, 1e-13);
        }
        ref *= c.step();
        EXPECT_NEAR(total_diameter_polygon(c), ref, 1e-10 * ref);
        EXPECT_LE(total_diameter_polygon(c), total_diameter(c));
    }
    const ClosedCurve seg = generate_curve({FamilyKind::doubled_segment, {}, 64, 0});
    EXPECT_EQ(total_diameter(seg), 0.0);
    EXPECT_EQ(total_diameter_polygon(seg), 0.0);
}

TEST(Diameter, CalipersMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const ClosedCurve c = generate_curve({FamilyKind::support_convex, {}, 512, seed});
        EXPECT_DOUBLE_EQ(diameter_convex(c), diameter_brute_force(c)) << seed;
        EXPECT_DOUBLE_EQ(diameter_convex(reversed(c)), diameter_brute_force(c)) << seed;
    }
    EXPECT_DOUBLE_EQ(diameter(circle(1024)), 2.0);
    EXPECT_NEAR(diameter(generate_curve({FamilyKind::ellipse, {}, 1024, 0})), 4.0, 1e-12);
    const std::vector<Vec3> square{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    const ClosedCurve sq = resample_arclength(square, 64);
    EXPECT_NEAR(diameter_convex(sq), std::sqrt(2.0), 1e-12);
}

TEST(Sweep, CircleJacobianMatchesAnalyticSweep) {
    const ClosedCurve c = circle(4096);
    // F(t, s) = (1 - s) g(t) + s g(t + pi) with g the unit-speed unit circle.
    auto F = [](double t, double s) {
        return (1.0 - s) * Vec3{std::cos(t), std::sin(t), 0.0} + s * Vec3{std::cos(t + kPi), std::sin(t + kPi), 0.0};
    };
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const std::size_t i = rng() % c.size();
        const double s = us(rng);
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(c.size());
        const double dt = 1e-5;
        const Vec3 ft = (F(t + dt, s) - F(t - dt, s)) / (2.0 * dt);
        const Vec3 fbar = F(t, 1.0) - F(t, 0.0);
        const double analytic = norm(cross(ft, fbar));
        const SweepSample sample = sweep_jacobian(c, i, s);
        EXPECT_NEAR(sample.jacobian, analytic, 1e-6);
        EXPECT_NEAR(sample.jacobian, 2.0 * std::abs(1.0 - 2.0 * s), 1e-6);
        EXPECT_NEAR(sample.chord_len, 2.0, 1e-12);
        EXPECT_NEAR(distance(sample.point, F(t, s)), 0.0, 1e-12);
    }
}

TEST(Sweep, JacobianBoundedByChord) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {}, 1024, seed});
        for (std::size_t i = 0; i < c.size(); i += 7) {
            for (double s : {0.0, 0.25, 0.5, 0.9, 1.0}) {
                const SweepSample x = sweep_jacobian(c, i, s);
                EXPECT_LE(x.jacobian, x.chord_len + 1e-6 * c.length());
            }
        }
    }
}

TEST(ChordCover, InteriorPointsAreWitnessed) {
    const ClosedCurve c = generate_curve({FamilyKind::fourier_random, {}, 1024, 2});
    const double eps = 2.0 * c.length() / static_cast<double>(c.size());
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int checked = 0;
    while (checked < 100) {
        const Vec3 q{u(rng), u(rng), 0.0};
        if (w2_point(c, q) != 1) {
            continue;
        }
        const auto w = chord_cover_witness(c, q, eps);
        ASSERT_TRUE(w.has_value());
        EXPECT_LE(w->distance, eps);
        const Vec3 on = c[w->index] + w->s * (c[c.antipode(w->index)] - c[w->index]);
        EXPECT_NEAR(distance(on, q), w->distance, 1e-12);
        ++checked;
    }
    EXPECT_FALSE(chord_cover_witness(circle(256), {5.0, 5.0, 0.0}, 0.01).has_value());
    try {
        chord_cover_witness(c, c[10], eps);
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::PointOnCurve);
    }
}

TEST(ConvexSign, ConvexCurvesAndHorseshoe) {
    EXPECT_LE(convex_sign_check(circle(1024)), 1e-9);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_LE(convex_sign_check(generate_curve({FamilyKind::support_convex, {}, 1024, seed})), 1e-9);
    }
    const ClosedCurve h = generate_curve({FamilyKind::horseshoe, {{"n", 4}}, 4096, 0});
    EXPECT_GT(convex_sign_violation(h), 0.0);
    try {
        convex_sign_check(h);
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotConvex);
    }
}

TEST(AbIntegral, MatchesQuadratureAndBound) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1e-3, 10.0);
    for (int k = 0; k < 500; ++k) {
        const double a = u(rng), b = u(rng);
        const double kink = a / (a + b);
        auto f = [&](double s) { return std::abs((1.0 - s) * a - s * b); };
        const double ref = oracle::simpson(f, 0.0, kink, 1e-13) + oracle::simpson(f, kink, 1.0, 1e-13);
        EXPECT_NEAR(ab_integral(a, b), ref, 1e-9);
        EXPECT_LE(ab_integral(a, b), 0.5 * std::max(a, b));
    }
    EXPECT_DOUBLE_EQ(ab_integral(3.0, 3.0), 1.5);
    for (double bad : {0.0, -1.0, std::nan(""), HUGE_VAL}) {
        try {
            ab_integral(bad, 1.0);
            ADD_FAILURE() << bad;
        } catch (const GeometryError& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonPositiveInput);
        }
    }
}
