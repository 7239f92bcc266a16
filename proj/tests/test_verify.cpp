#include "support.hpp"

#include <gtest/gtest.h>

using namespace ias;
using namespace ias::testing;

namespace {

std::vector<Point2> grid_points(int n) {
    std::vector<Point2> out;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.push_back({grid_coord(-0.9, 0.9, i, n), grid_coord(-0.8, 0.95, j, n)});
    return out;
}

PolySurface corrupted(const ParaCurve<Rational>& c, const char* component) {
    auto s = surface_components(c);
    negate_component(s, component);
    return PolySurface::generated(s);
}

} // namespace

TEST(Duality, IdentityCurveExact) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(1), {}});
    const auto r = duality_residual(m, grid_points(5));
    EXPECT_EQ(r.points_checked, 25u);
    EXPECT_LE(r.max_abs, 1e-10);
    EXPECT_TRUE(r.pass);
}

TEST(Duality, RandomCurves) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 10; ++k) {
        EXPECT_TRUE(duality_residual(PolySurface::from_curve(random_para_curve(rng)), grid_points(8)).pass);
        EXPECT_TRUE(duality_residual(PolySurface::from_curve(random_holo_curve(rng)), grid_points(8)).pass);
    }
}

TEST(Duality, CorruptedCurveFails) {
    // G gets a j-part that is not para-holomorphic: g2 += u^2
    auto [f1, f2] = expand(z_power(2));
    auto [g1, g2] = expand(z_power(3));
    const auto s = indefinite_from_parts(f1, f2, g1, g2 + mono(1, 2, 0), false);
    EXPECT_FALSE(duality_residual(PolySurface::generated(s), grid_points(6)).pass);
}

TEST(TwoForm, VanishesAndDetectsCorruption) {
    const ParaCurve<Rational> c{z_power(2), z_power(3)};
    EXPECT_EQ(two_form_residual(PolySurface::from_curve(c), grid_points(10)).max_abs, 0.0);
    EXPECT_EQ(two_form_residual(PolySurface::from_curve(ParaCurve<Rational>{}), grid_points(4)).max_abs, 0.0);
    EXPECT_FALSE(two_form_residual(corrupted(c, "n2"), grid_points(10)).pass);
}

TEST(Conformal, IdentityCurveMetric) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(1), {}});
    const Jet2<3> x = m.position_jet({0.2, 0.7});
    const Jet2<3> n = m.normal_jet({0.2, 0.7});
    EXPECT_EQ(-(x.du[0] * n.du[0] + x.du[1] * n.du[1]), -1.0);
    EXPECT_EQ(-(x.dv[0] * n.dv[0] + x.dv[1] * n.dv[1]), 1.0);
    EXPECT_EQ(metric_conformality(m, grid_points(5)).max_abs, 0.0);
}

TEST(Conformal, RandomAndCorrupted) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 10; ++k) {
        const auto c = random_para_curve(rng);
        EXPECT_TRUE(metric_conformality(PolySurface::from_curve(c), grid_points(10)).pass);
        EXPECT_FALSE(metric_conformality(corrupted(c, "n1"), grid_points(10)).pass);
    }
}

TEST(MongeAmpere, Oracles) {
    const auto ind = PolySurface::from_curve(ParaCurve<Rational>{z_power(1), {}});
    const auto r1 = monge_ampere_residual(ind, auto_graph_patch(ind, Domain{}));
    EXPECT_EQ(r1.max_abs, 0.0);
    const auto lsc = PolySurface::from_curve(HoloCurve<Rational>{{}, w_power(1)});
    const auto r2 = monge_ampere_residual(lsc, auto_graph_patch(lsc, Domain{}));
    EXPECT_EQ(r2.max_abs, 0.0);
}

TEST(MongeAmpere, QuadCubicRegularPatch) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(2), z_power(3)});
    const auto patch = auto_graph_patch(m, Domain{-1, 1, -1, 1});
    EXPECT_GT(patch.points.size(), 100u);
    EXPECT_TRUE(monge_ampere_residual(m, patch).pass);
}

TEST(MongeAmpere, PatchMustBeGraph) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(2), z_power(3)});
    EXPECT_THROW(monge_ampere_residual(m, GraphPatch{{{0.5, 0.5}}}), PatchNotGraph);
    EXPECT_THROW(lift_residual(m, GraphPatch{{{0, 0}}}), PatchNotGraph);
}

TEST(Lift, IdentityCurveAndNegativeControl) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(1), {}});
    const auto patch = auto_graph_patch(m, Domain{});
    const auto [theta, omega] = lift_residual(m, patch);
    EXPECT_EQ(theta.max_abs, 0.0);
    EXPECT_EQ(omega.max_abs, 0.0);
    EXPECT_FALSE(lift_residual(m, patch, GraphLift{true}).first.pass);
}

TEST(Lift, CubicQuartic) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(3), z_power(4)});
    const auto [theta, omega] = lift_residual(m, auto_graph_patch(m, Domain{}));
    EXPECT_TRUE(theta.pass);
    EXPECT_TRUE(omega.pass);
}

TEST(Report, NanFails) {
    const auto m = PolySurface::from_curve(ParaCurve<Rational>{z_power(1), {}});
    const auto r = duality_residual(m, {{std::nan(""), 0}});
    EXPECT_FALSE(r.pass);
}
