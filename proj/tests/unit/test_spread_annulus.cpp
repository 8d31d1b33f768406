#include <gtest/gtest.h>

#include "distortion/numeric.hpp"
#include "distortion/spread_annulus.hpp"
#include "oracles.hpp"

using namespace distortion;
using annulus::AnnulusArc;
using annulus::AnnulusLift;
using annulus::LValue;

namespace {

// L for a straight arc from (x0, 0) to (x1, 1): the lines it meets are the integers in
// [x0, x1], and L = (count of them) - 1 when positive.
long straight_arc_L(double x0, double x1) { return std::max(0L, oracle::integers_in(x0, x1) - 1); }

AnnulusArc random_arc(SeededUniform& rng) {
    std::vector<Vec2> pts;
    double x = 6 * rng.next() - 3;
    for (int i = 0; i < 6; ++i) {
        pts.push_back({x, rng.next()});
        x += 2 * rng.next() - 0.8;
    }
    return AnnulusArc(pts);
}

}  // namespace

TEST(LValue, Examples) {
    EXPECT_EQ(l_value(AnnulusArc({{0.5, 0}, {3.5, 1}})), (LValue{0, 4, 2}));
    EXPECT_EQ(l_value(AnnulusArc({{0.2, 0}, {0.4, 0.5}, {0.8, 1}})).L, 0);
    EXPECT_EQ(l_value(AnnulusArc({{0.5, 0}, {1.5, 1}})), (LValue{0, 2, 0}));
    EXPECT_EQ(l_value(AnnulusArc({{-1.7, 0}, {-1.2, 1}})), (LValue{-2, -1, 0}));
}

TEST(LValue, ClosedConventionAtVertices) {
    EXPECT_EQ(l_value(AnnulusArc({{1.0, 0}, {3.0, 1}})), (LValue{0, 4, 2}));
    EXPECT_EQ(l_value(AnnulusArc::vertical(2.0)), (LValue{1, 3, 0}));
}

TEST(LValue, StraightArcsMatchClosedForm) {
    SeededUniform rng(17);
    for (int i = 0; i < 500; ++i) {
        const double x0 = 10 * rng.next() - 5, x1 = 10 * rng.next() - 5;
        ASSERT_EQ(l_value(AnnulusArc({{x0, 0}, {x1, 1}})).L, straight_arc_L(x0, x1)) << x0 << " " << x1;
    }
}

TEST(LValue, DeckEquivariance) {
    SeededUniform rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto arc = random_arc(rng);
        const auto v = l_value(arc), w = l_value(arc.translated(1));
        ASSERT_EQ(w.a, v.a + 1);
        ASSERT_EQ(w.b, v.b + 1);
        ASSERT_EQ(w.L, v.L);
    }
}

TEST(LValue, ShiftedLinesChangeLByAtMostTwo) {
    SeededUniform rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto arc = random_arc(rng);
        const double delta = 0.01 + 0.98 * rng.next();
        ASSERT_LE(std::abs(l_value(arc, delta).L - l_value(arc).L), 2);
    }
}

TEST(AnnulusArc, Validation) {
    EXPECT_THROW(AnnulusArc({{0, 0}, {1, 1.5}}), std::invalid_argument);
    EXPECT_THROW(AnnulusArc({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(MapArc, Examples) {
    const auto v = AnnulusArc::vertical(0.5);
    const auto t1 = map_arc(AnnulusLift::twist(1), v);
    EXPECT_EQ(t1.points().front(), (Vec2{0.5, 0}));
    EXPECT_EQ(t1.points().back(), (Vec2{1.5, 1}));
    const auto id = map_arc(AnnulusLift::identity(), v, 10.0);
    EXPECT_EQ(id.points(), v.points());
    const auto t4 = map_arc(AnnulusLift::power(AnnulusLift::twist(2), 2), v);
    EXPECT_EQ(t4.points().back(), (Vec2{4.5, 1}));
    EXPECT_THROW(map_arc(AnnulusLift::twist(1), v, 1e-6, 1000), VertexCapError);
}

TEST(AnnulusLift, CommutesWithDeckAndPreservesBoundary) {
    SeededUniform rng(31);
    const std::vector<AnnulusLift> family{
        AnnulusLift::twist(2), AnnulusLift::shift(0.3),
        AnnulusLift::composition({AnnulusLift::twist(1.5), AnnulusLift::shift(-0.2)}),
        AnnulusLift::power(AnnulusLift::twist(0.7), -3)};
    for (const auto& f : family) {
        for (int i = 0; i < 100; ++i) {
            const Vec2 p{4 * rng.next() - 2, rng.next()};
            const Vec2 q = f(p), r = f({p.x + 1, p.y});
            ASSERT_NEAR(r.x, q.x + 1, 1e-12);
            ASSERT_EQ(r.y, q.y);
            ASSERT_EQ(f({p.x, 0.0}).y, 0.0);
            ASSERT_EQ(f({p.x, 1.0}).y, 1.0);
            const Vec2 back = f.inverse()(q);
            ASSERT_NEAR(back.x, p.x, 1e-12);
        }
    }
}

TEST(Spread, TwistTwoGrowsLinearly) {
    const auto est = spread_estimate(AnnulusLift::twist(2), AnnulusArc::vertical(0.5), 50);
    ASSERT_EQ(est.values.size(), 51u);
    for (int n = 1; n <= 50; ++n) ASSERT_EQ(est.values[static_cast<std::size_t>(n)].L, 2 * n - 1) << n;
    EXPECT_LE(std::abs(est.ratios.back() - 2.0) / 2.0, 0.05);
    EXPECT_NEAR(est.tail_slope, 2.0, 1e-12);
}

TEST(Spread, IdentityAndZeroTwist) {
    const auto arc = AnnulusArc({{0.5, 0}, {3.5, 1}});
    const auto id = spread_estimate(AnnulusLift::identity(), arc, 20);
    for (const auto& v : id.values) EXPECT_EQ(v.L, 2);
    EXPECT_NEAR(id.ratios.back(), 2.0 / 20, 1e-15);
    const auto flat = spread_estimate(AnnulusLift::twist(0), AnnulusArc::vertical(0.5), 20);
    for (const auto& v : flat.values) EXPECT_EQ(v.L, 0);
    EXPECT_EQ(flat.ratios.back(), 0.0);
}

TEST(Spread, MonotoneForNonnegativeTwists) {
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.7}) {
        const auto est = spread_estimate(AnnulusLift::twist(t), AnnulusArc::vertical(0.5), 50);
        for (std::size_t n = 1; n < est.values.size(); ++n) ASSERT_GE(est.values[n].L, est.values[n - 1].L) << t;
    }
}

TEST(Spread, LinearGrowthLaw) {
    // Dyadic twists, so integer endpoints are hit exactly.
    for (double t : {0.5, 1.0, 2.0, 3.75}) {
        const auto est = spread_estimate(AnnulusLift::twist(t), AnnulusArc::vertical(0.5), 50);
        for (int n = 1; n <= 50; ++n) {
            const long closed = static_cast<long>(std::ceil(t * n)) - 1;
            ASSERT_LE(std::abs(est.values[static_cast<std::size_t>(n)].L - closed), 1) << t << " " << n;
            // Independent route: the image is the straight arc (0.5, 0) -> (0.5 + t n, 1).
            ASSERT_EQ(est.values[static_cast<std::size_t>(n)].L, straight_arc_L(0.5, 0.5 + t * n));
        }
    }
}

TEST(Spread, CapErrorKeepsPartialRatios) {
    try {
        spread_estimate(AnnulusLift::twist(2), AnnulusArc::vertical(0.5), 50, 0.25, 200);
        FAIL() << "expected a vertex cap error";
    } catch (const VertexCapError& e) {
        EXPECT_FALSE(e.partial().empty());
        EXPECT_LT(e.partial().size(), 50u);
    }
    EXPECT_THROW(spread_estimate(AnnulusLift::twist(2), AnnulusArc::vertical(0.5), 0), std::invalid_argument);
}
