#pragma once

#include "ias/ias.hpp"

#include <random>

namespace ias::testing {

/// Rational in [-3, 3] with denominator in 1..4.
inline Rational random_rational(std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> den(1, 4);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-bound * q, bound * q);
    return Rational(num(rng), q);
}

template <typename N>
Poly<N> random_poly(std::mt19937_64& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::vector<N> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = N(random_rational(rng), random_rational(rng));
    return Poly<N>(std::move(c));
}

inline ParaCurve<Rational> random_para_curve(std::mt19937_64& rng, int max_degree = 4) {
    return {random_poly<ParaComplex<Rational>>(rng, max_degree), random_poly<ParaComplex<Rational>>(rng, max_degree)};
}

inline HoloCurve<Rational> random_holo_curve(std::mt19937_64& rng, int max_degree = 4) {
    return {random_poly<Complex<Rational>>(rng, max_degree), random_poly<Complex<Rational>>(rng, max_degree)};
}

inline ParaPoly<Rational> z_power(int k, Rational c = 1) { return ParaPoly<Rational>::monomial(k, {c, 0}); }
inline ComplexPoly<Rational> w_power(int k, Rational c = 1) { return ComplexPoly<Rational>::monomial(k, {c, 0}); }

inline BiPoly<Rational> mono(Rational c, int i, int j) { return BiPoly<Rational>::monomial(i, j, std::move(c)); }

} // namespace ias::testing
