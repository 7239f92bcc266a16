#include "support.hpp"

#include <gtest/gtest.h>

using namespace ias;
using namespace ias::testing;

namespace {

ParaCurve<Rational> cubic_quartic() { return {z_power(3), z_power(4)}; }

BiPoly<Rational> cubic_quartic_potential() {
    const Rational h(1, 2);
    return mono(-h, 6, 0) + mono(Rational(3, 2), 4, 2) + mono(Rational(-3, 2), 2, 4) + mono(h, 0, 6) +
           mono(Rational(1, 7), 7, 0) + mono(3, 5, 2) + mono(5, 3, 4) + mono(1, 1, 6) + mono(h, 8, 0) +
           mono(-2, 6, 2) + mono(3, 4, 4) + mono(-2, 2, 6) + mono(h, 0, 8);
}

} // namespace

TEST(Potential, IdentityCurve) {
    const auto phi = phi_potential(ParaCurve<Rational>{z_power(1), {}});
    EXPECT_EQ(phi, mono(Rational(1, 2), 0, 2) + mono(Rational(-1, 2), 2, 0));
}

TEST(Potential, ZeroCurve) { EXPECT_TRUE(phi_potential(ParaCurve<Rational>{}).is_zero()); }

TEST(Potential, CubicQuarticExact) {
    const auto phi = phi_potential(cubic_quartic());
    EXPECT_EQ(phi, cubic_quartic_potential());
    EXPECT_EQ(phi(Rational(1), Rational(0)), Rational(1, 7));
}

TEST(Potential, NormalizedAtOrigin) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) EXPECT_EQ(phi_potential(random_para_curve(rng))(Rational(0), Rational(0)), Rational(0));
}

TEST(Potential, SolvesTheDefiningFormExactly) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        const auto s = surface_components(random_para_curve(rng));
        EXPECT_EQ(s.phi.du(), -(s.n1 * s.x1.du() + s.n2 * s.x2.du()));
        EXPECT_EQ(s.phi.dv(), -(s.n1 * s.x1.dv() + s.n2 * s.x2.dv()));
        const auto l = surface_components(random_holo_curve(rng));
        EXPECT_EQ(l.phi.du(), -(l.n1 * l.x1.du() + l.n2 * l.x2.du()));
        EXPECT_EQ(l.phi.dv(), -(l.n1 * l.x1.dv() + l.n2 * l.x2.dv()));
    }
}

TEST(Potential, NonHolomorphicPartsRejected) {
    // f = u^2 + e v^2 is not para-holomorphic
    const auto f1 = mono(1, 2, 0), f2 = mono(1, 0, 2);
    EXPECT_THROW(phi_potential_from_parts(f1, f2, BiPoly<Rational>(), mono(1, 1, 0)), ClosednessViolation);
    const auto s = indefinite_from_parts(f1, f2, BiPoly<Rational>(), mono(1, 1, 0), false);
    EXPECT_FALSE(s.closed);
}

TEST(Synth, IdentityCurvePoint) {
    const auto s = synth_indefinite(ParaCurve<Rational>{z_power(1), {}}, {0.5, -0.25});
    EXPECT_DOUBLE_EQ(s.position[0], 0.5);
    EXPECT_DOUBLE_EQ(s.position[1], -0.25);
    EXPECT_DOUBLE_EQ(s.position[2], (0.0625 - 0.25) / 2);
    EXPECT_DOUBLE_EQ(s.conormal[0], 0.5);
    EXPECT_DOUBLE_EQ(s.conormal[1], 0.25);
    EXPECT_DOUBLE_EQ(s.conormal[2], 1.0);
    EXPECT_NEAR(norm(s.unit_normal), 1.0, 1e-15);
}

TEST(Synth, CubicQuarticAtUnitPoint) {
    const auto s = synth_indefinite(cubic_quartic(), {1, 0});
    EXPECT_EQ(s.position[0], 0.0);
    EXPECT_EQ(s.position[1], 0.0);
    EXPECT_NEAR(s.position[2], 1.0 / 7.0, 1e-15);
}

TEST(Synth, LscParaboloid) {
    const HoloCurve<Rational> c{{}, w_power(1)};
    const auto s = surface_components(c);
    EXPECT_EQ(s.phi, mono(Rational(1, 2), 2, 0) + mono(Rational(1, 2), 0, 2));
    EXPECT_EQ(s.x1, mono(1, 1, 0));
    EXPECT_EQ(s.x2, mono(1, 0, 1));
    const auto p = synth_lsc(c, {0.5, 0.5});
    EXPECT_DOUBLE_EQ(p.position[2], 0.25);
}

TEST(Synth, DensityIsJacobianOfProjection) {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 20; ++k) {
        const auto c = random_para_curve(rng);
        EXPECT_EQ(surface_components(c).density, area_density(c));
        const auto h = random_holo_curve(rng);
        EXPECT_EQ(surface_components(h).density, area_density(h));
    }
}

TEST(Jets, MatchFiniteDifferences) {
    std::mt19937_64 rng(31);
    const double h = 1e-4;
    for (int k = 0; k < 10; ++k) {
        const auto m = PolySurface::from_curve(random_para_curve(rng));
        const Point2 p{0.3, -0.4};
        for (JetKind kind : {JetKind::Position, JetKind::UnitNormal, JetKind::Conormal}) {
            const auto j = jet(m, p, kind);
            const auto ju = jet(m, {p.u + h, p.v}, kind), jm = jet(m, {p.u - h, p.v}, kind);
            const auto jv = jet(m, {p.u, p.v + h}, kind), jn = jet(m, {p.u, p.v - h}, kind);
            for (std::size_t i = 0; i < 3; ++i) {
                const double scale = 1 + std::abs(j.duu[i]) + std::abs(j.dvv[i]);
                EXPECT_NEAR((ju.value[i] - jm.value[i]) / (2 * h), j.du[i], 1e-6 * scale);
                EXPECT_NEAR((jv.value[i] - jn.value[i]) / (2 * h), j.dv[i], 1e-6 * scale);
                EXPECT_NEAR((ju.du[i] - jm.du[i]) / (2 * h), j.duu[i], 1e-6 * scale);
                EXPECT_NEAR((jv.du[i] - jn.du[i]) / (2 * h), j.duv[i], 1e-6 * scale);
                EXPECT_NEAR((jv.dv[i] - jn.dv[i]) / (2 * h), j.dvv[i], 1e-6 * scale);
            }
        }
    }
}

TEST(Grid, RowMajorAndDeterministic) {
    const auto m = PolySurface::from_curve(cubic_quartic());
    const auto g = sample_grid(m, Domain{-1, 1, -1, 1}, 3, 5);
    ASSERT_EQ(g.samples.size(), 15u);
    EXPECT_EQ(g.at(2, 2).domain_point, (Point2{1, 0}));
    EXPECT_NEAR(g.at(2, 2).position[2], 1.0 / 7.0, 1e-15);
    EXPECT_EQ(g.at(1, 0).domain_point, (Point2{0, -1}));
    const auto g2 = sample_grid(m, Domain{-1, 1, -1, 1}, 3, 5);
    for (std::size_t k = 0; k < g.samples.size(); ++k) EXPECT_EQ(g.samples[k].position, g2.samples[k].position);
}

TEST(Grid, RejectsBadInput) {
    const auto m = PolySurface::from_curve(cubic_quartic());
    EXPECT_THROW(sample_grid(m, Domain{1, -1, -1, 1}, 4, 4), InvalidDomain);
    EXPECT_THROW(sample_grid(m, Domain{}, 1, 4), InvalidDomain);
    EXPECT_THROW(sample_grid(m, Domain{0, std::nan(""), 0, 1}, 4, 4), InvalidDomain);
}

TEST(Scale, FloorsAtOne) {
    EXPECT_EQ(curve_scale(ParaCurve<Rational>{}, Domain{-0.1, 0.1, -0.1, 0.1}), 1.0);
    EXPECT_DOUBLE_EQ(curve_scale(ParaCurve<Rational>{z_power(2, 3), {}}, Domain{-2, 2, 0, 1}), 3 * std::sqrt(5.0));
}
