#include "support.hpp"

#include <gtest/gtest.h>

using namespace ias;
using namespace ias::testing;

using PC = ParaComplex<Rational>;

TEST(ParaComplex, UnitSquaresToOne) {
    const PC j = PC::unit();
    EXPECT_EQ(j * j, PC(1));
    EXPECT_EQ(Complex<Rational>::unit() * Complex<Rational>::unit(), Complex<Rational>(-1));
}

TEST(ParaComplex, RingLawsExact) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const PC a(random_rational(rng), random_rational(rng));
        const PC b(random_rational(rng), random_rational(rng));
        const PC c(random_rational(rng), random_rational(rng));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).modulus(), a.modulus() * b.modulus());
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
}

TEST(ParaComplex, ModulusIsIndefinite) {
    EXPECT_EQ(PC(1, 1).modulus(), Rational(0));
    EXPECT_EQ(PC(1, 2).modulus(), Rational(-3));
    EXPECT_EQ(Complex<Rational>(1, 2).modulus(), Rational(5));
}

TEST(Poly, DerivativeAntiderivative) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto p = random_poly<PC>(rng);
        EXPECT_EQ(p.antiderivative().derivative(), p);
        EXPECT_EQ(p.antiderivative()[0], PC(0));
    }
    EXPECT_EQ(z_power(3).derivative(), z_power(2, 3));
}

TEST(Poly, DegreeOverflowRejected) {
    EXPECT_THROW(z_power(kMaxCurveDegree + 1).check_degree(), DegreeOverflow);
    EXPECT_NO_THROW(z_power(kMaxCurveDegree).check_degree());
}

TEST(Poly, ExpandMatchesPointEvaluation) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const auto p = random_poly<PC>(rng);
        const auto [re, im] = expand(p);
        const Rational u = random_rational(rng), v = random_rational(rng);
        const PC z = p(PC(u, v));
        EXPECT_EQ(re(u, v), z.re);
        EXPECT_EQ(im(u, v), z.im);
    }
}

TEST(Poly, ZSquaredExpansion) {
    const auto [re, im] = expand(z_power(2));
    EXPECT_EQ(re, mono(1, 2, 0) + mono(1, 0, 2));
    EXPECT_EQ(im, mono(2, 1, 1));
}

TEST(BiPoly, IntegrateInvertsDifferentiate) {
    const auto p = mono(3, 2, 1) + mono(Rational(-1, 2), 0, 3) + mono(5, 4, 0);
    EXPECT_EQ(p.integrate_u().du(), p);
    EXPECT_EQ(p.integrate_v().dv(), p);
    EXPECT_EQ(p.at_u_zero(), mono(Rational(-1, 2), 0, 3));
}

TEST(DAlembert, RoundTripExact) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const auto p = random_poly<PC>(rng);
        EXPECT_EQ(dalembert_to_para(para_to_dalembert(p)), p);
    }
}

TEST(DAlembert, AgreesWithDirectEvaluation) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        const auto p = random_poly<PC>(rng);
        const auto d = para_to_dalembert(p);
        const Rational u = random_rational(rng), v = random_rational(rng);
        EXPECT_EQ(dalembert_eval(d, u, v), p(PC(u, v)));
    }
}

TEST(DAlembert, IdentityCurve) {
    const auto d = para_to_dalembert(z_power(1));
    EXPECT_EQ(d.rho, UniPoly<Rational>({Rational(0), Rational(1, 2)}));
    EXPECT_EQ(d.sigma, UniPoly<Rational>({Rational(0), Rational(1, 2)}));
}

TEST(ParaCR, PolynomialsSatisfyIt) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
        const auto map = as_plane_map(random_poly<PC>(rng).cast<double>());
        const auto r = para_cr_residual(map, 0.3, -0.7);
        EXPECT_LT(std::abs(r[0]), 1e-6);
        EXPECT_LT(std::abs(r[1]), 1e-6);
    }
}

TEST(ParaCR, ComplexSquareViolatesIt) {
    const PlaneMap sq = [](double u, double v) { return std::array<double, 2>{u * u - v * v, 2 * u * v}; };
    const auto r = para_cr_residual(sq, 0.5, 0.5);
    EXPECT_GT(std::abs(r[0]) + std::abs(r[1]), 0.1);
    EXPECT_THROW(para_cr_residual(sq, 0, 0, 0.0), std::invalid_argument);
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(format_rational(Rational(-1, 7)), "-1/7");
    EXPECT_EQ(format_rational(Rational(4)), "4");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Json, PolyRoundTrip) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        const auto p = random_poly<PC>(rng);
        EXPECT_EQ(poly_from_json<PC>(poly_to_json(p)), p);
    }
    EXPECT_EQ(poly_from_json<PC>(json::parse("[[0,0],[0,0],[1,0]]")), z_power(2));
    EXPECT_THROW(poly_from_json<PC>(json::parse("[[1]]")), ParseError);
}
