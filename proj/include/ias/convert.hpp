#pragma once

// Conversions between curve pairs and the Cortes-Lawn-Schafer, Cortes and
// Blaschke parametrizations.

#include "curve.hpp"
#include "dalembert.hpp"

namespace ias {

/// F = (z - j f')/2, G = (z + j f')/2.
template <typename T>
ParaCurve<T> cls_to_curve(const ParaPoly<T>& f) {
    using N = ParaComplex<T>;
    const ParaPoly<T> z = ParaPoly<T>::monomial(1);
    const ParaPoly<T> jf = N(T(0), T(1)) * f.derivative();
    const N half(T(1) / T(2), T(0));
    return {half * (z - jf), half * (z + jf)};
}

/// Inverse of cls_to_curve: f' = j (G - F), normalized by f(0) = 0.
template <typename T>
ParaPoly<T> curve_to_cls(const ParaCurve<T>& c) {
    using N = ParaComplex<T>;
    return (N(T(0), T(1)) * (c.G - c.F)).antiderivative();
}

/// F = (z - i f')/2, G = (z + i f')/2.
template <typename T>
HoloCurve<T> cortes_to_holo(const ComplexPoly<T>& f) {
    using N = Complex<T>;
    const ComplexPoly<T> z = ComplexPoly<T>::monomial(1);
    const ComplexPoly<T> jf = N(T(0), T(1)) * f.derivative();
    const N half(T(1) / T(2), T(0));
    return {half * (z - jf), half * (z + jf)};
}

/// Inverse of cortes_to_holo: f' = -i (G - F), normalized by f(0) = 0.
template <typename T>
ComplexPoly<T> holo_to_cortes(const HoloCurve<T>& c) {
    using N = Complex<T>;
    return (N(T(0), T(-1)) * (c.G - c.F)).antiderivative();
}

template <typename T>
struct BlaschkeData {
    UniPoly<T> U1, V1, U2, V2;
    friend bool operator==(const BlaschkeData&, const BlaschkeData&) = default;
};

/// U1 = rho1 + rho2, V1 = sigma1 + sigma2, U2 = -rho1 + rho2, V2 = sigma1 - sigma2
/// from the d'Alembert forms of F (index 1) and G (index 2).
template <typename T>
BlaschkeData<T> curve_to_blaschke(const ParaCurve<T>& c) {
    const auto f = para_to_dalembert(c.F);
    const auto g = para_to_dalembert(c.G);
    return {f.rho + g.rho, f.sigma + g.sigma, g.rho - f.rho, f.sigma - g.sigma};
}

template <typename T>
ParaCurve<T> blaschke_to_curve(const BlaschkeData<T>& b) {
    const T half = T(1) / T(2);
    const DAlembertPair<T> f{half * (b.U1 - b.U2), half * (b.V1 + b.V2)};
    const DAlembertPair<T> g{half * (b.U1 + b.U2), half * (b.V1 - b.V2)};
    return {dalembert_to_para(f), dalembert_to_para(g)};
}

} // namespace ias
