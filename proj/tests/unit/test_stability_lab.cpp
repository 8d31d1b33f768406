#include <gtest/gtest.h>

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"
#include "distortion/stability_lab.hpp"
#include "oracles.hpp"

using namespace distortion;
using stability::Monomial;
using stability::NearIdentityMap;
using stability::theta_estimate;

namespace {

NearIdentityMap line(std::vector<Monomial> terms) { return NearIdentityMap::polynomial(1, {std::move(terms)}); }

// Perturbation coefficients of x + P(x) as a dense oracle polynomial (including the x).
oracle::Poly as_poly(const std::vector<std::pair<int, double>>& terms) {
    oracle::Poly p{0.0, 1.0};
    for (const auto& [deg, c] : terms) {
        if (p.size() <= static_cast<std::size_t>(deg)) p.resize(static_cast<std::size_t>(deg) + 1, 0.0);
        p[static_cast<std::size_t>(deg)] += c;
    }
    return p;
}

NearIdentityMap random_planar_quadratic(SeededUniform& rng) {
    std::vector<std::vector<Monomial>> comps(2);
    for (auto& comp : comps) {
        for (const auto& e : {std::array<int, 2>{2, 0}, {1, 1}, {0, 2}, {3, 0}, {1, 2}}) {
            comp.push_back({2.0 * rng.next() - 1.0, e});
        }
    }
    return NearIdentityMap::polynomial(2, comps);
}

}  // namespace

TEST(NearIdentityMap, Validation) {
    EXPECT_THROW(line({{1.0, {1, 0}}}), InvalidDescriptor);
    EXPECT_THROW(line({{1.0, {0, 0}}}), InvalidDescriptor);
    EXPECT_THROW(NearIdentityMap::polynomial(3, {{}, {}, {}}), InvalidDescriptor);
    EXPECT_THROW(NearIdentityMap::polynomial(2, {{}}), InvalidDescriptor);
    EXPECT_THROW(NearIdentityMap::power(line({{1.0, {2, 0}}}), -1), InvalidDescriptor);
    EXPECT_NO_THROW(NearIdentityMap::polynomial(2, {{{1.0, {1, 1}}}, {}}));
}

TEST(NearIdentityMap, CompositionMatchesPolynomialOracle) {
    const auto g = line({{1.0, {2, 0}}});
    const auto h = line({{1.0, {3, 0}}});
    const auto gh = oracle::poly_compose(as_poly({{2, 1.0}}), as_poly({{3, 1.0}}));
    const auto composed = NearIdentityMap::composition({g, h});
    const auto g3 = oracle::poly_compose(as_poly({{2, 1.0}}), oracle::poly_compose(as_poly({{2, 1.0}}), as_poly({{2, 1.0}})));
    for (double x : {-0.9, -0.3, 0.0, 0.25, 0.7}) {
        EXPECT_NEAR(composed({x, 0})[0], oracle::poly_eval(gh, x), 1e-14);
        EXPECT_NEAR(NearIdentityMap::power(g, 3)({x, 0})[0], oracle::poly_eval(g3, x), 1e-14);
    }
}

TEST(Cocycle, IdentityResidualIsZero) {
    EXPECT_EQ(cocycle_identity_residual(NearIdentityMap::identity(1), NearIdentityMap::identity(1), 100, 1), 0.0);
    EXPECT_EQ(cocycle_identity_residual(NearIdentityMap::identity(2), NearIdentityMap::identity(2), 100, 1), 0.0);
}

TEST(Cocycle, SymbolicExpansionAgrees) {
    // (gh)^ = h^ + g^(x + h^) as polynomials; the oracle expands both sides exactly.
    const oracle::Poly p{0, 0, 1.0}, q{0, 0, 0, 1.0};
    const oracle::Poly x_plus_q{0, 1.0, 0, 1.0};
    const auto lhs = oracle::poly_add(oracle::poly_compose(as_poly({{2, 1.0}}), as_poly({{3, 1.0}})), {0, -1.0});
    const auto g_shift = oracle::poly_compose(p, x_plus_q);
    const auto rhs = oracle::poly_add(oracle::poly_add(p, q), oracle::poly_add(g_shift, oracle::poly_scale(p, -1.0)));
    EXPECT_EQ(oracle::max_abs_coefficient_gap(lhs, rhs), 0.0);
    EXPECT_LE(cocycle_identity_residual(line({{1.0, {2, 0}}}), line({{1.0, {3, 0}}}), 1000, 7), 1e-12);
}

TEST(Cocycle, RandomPlanarQuadratics) {
    SeededUniform rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_planar_quadratic(rng), h = random_planar_quadratic(rng);
        ASSERT_LE(cocycle_identity_residual(g, h, 1000, 5 + trial), 1e-12);
    }
    EXPECT_THROW(cocycle_identity_residual(NearIdentityMap::identity(1), NearIdentityMap::identity(2), 1, 1),
                 std::invalid_argument);
}

TEST(Cocycle, WholeTestFamily) {
    const auto family = stability::polynomial_test_family();
    for (const auto& g : family)
        for (const auto& h : family) ASSERT_LE(cocycle_identity_residual(g, h, 1000, 3), 1e-12);
}

TEST(Theta, SingleMapIsOne) {
    const auto g = line({{1.0, {2, 0}}});
    const auto r = theta_estimate({g}, 1000);
    EXPECT_NEAR(r.theta[0][0], 1.0, 1e-15);
    EXPECT_NEAR(r.normalizer, 1e-6, 1e-18);
}

TEST(Theta, SquareDoubles) {
    const auto g = line({{1.0, {2, 0}}});
    double prev_gap = 1.0;
    for (long n : {10L, 100L, 1000L, 10000L}) {
        const auto r = theta_estimate({g, NearIdentityMap::power(g, 2)}, n);
        const double ratio = r.theta[1][0] / r.theta[0][0];
        // Oracle: g∘g(x) - x = 2x^2 + 2x^3 + x^4, so the ratio is 2 + 2x + x^2.
        const double x = 1.0 / static_cast<double>(n);
        EXPECT_NEAR(ratio, 2 + 2 * x + x * x, 1e-9);
        EXPECT_LT(std::abs(ratio - 2.0), prev_gap);
        prev_gap = std::abs(ratio - 2.0);
    }
    const auto r = theta_estimate({g, NearIdentityMap::power(g, 2)}, 1000);
    EXPECT_LE(std::abs(r.theta[1][0] / r.theta[0][0] - 2.0), 0.02);
}

TEST(Theta, IdentityHasZeroTheta) {
    const auto r = theta_estimate({line({{1.0, {2, 0}}}), NearIdentityMap::identity(1)}, 100);
    EXPECT_EQ(r.theta[1][0], 0.0);
    EXPECT_THROW(theta_estimate({NearIdentityMap::identity(1)}, 100), std::domain_error);
}

TEST(Theta, FamilyDefectSmallAndDecreasing) {
    const auto family = stability::polynomial_test_family();
    const auto at = [&](long n) { return theta_estimate(family, n).max_defect; };
    EXPECT_LE(at(1000), 1e-2);
    const double d2 = at(100), d3 = at(1000), d4 = at(10000);
    EXPECT_LE(d3, 1.1 * d2);
    EXPECT_LE(d4, 1.1 * d3);
    EXPECT_LT(d4, d2);
}

TEST(Theta, CustomSequenceAndPlanarDirection) {
    const auto g = NearIdentityMap::polynomial(2, {{{1.0, {2, 0}}}, {{1.0, {0, 2}}}});
    const auto r = theta_estimate({g}, [](long n) { return stability::Point{0.0, 1.0 / static_cast<double>(n)}; }, 50);
    EXPECT_NEAR(r.theta[0][1], 1.0, 1e-15);
    EXPECT_EQ(r.theta[0][0], 0.0);
}
