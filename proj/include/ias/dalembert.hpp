#pragma once

#include "poly.hpp"

#include <array>
#include <functional>
#include <utility>

namespace ias {

/// F(u + jv) = rho(u+v) + sigma(u-v) + j (rho(u+v) - sigma(u-v)).
template <typename T>
struct DAlembertPair {
    UniPoly<T> rho;
    UniPoly<T> sigma;

    friend bool operator==(const DAlembertPair&, const DAlembertPair&) = default;
};

// In the idempotent basis e+- = (1 +- j)/2 a coefficient a + jb is
// (a+b) e+ + (a-b) e-, and z^k = (u+v)^k e+ + (u-v)^k e-.
template <typename T>
DAlembertPair<T> para_to_dalembert(const ParaPoly<T>& F) {
    std::vector<T> rho, sigma;
    rho.reserve(static_cast<std::size_t>(F.degree() + 1));
    sigma.reserve(static_cast<std::size_t>(F.degree() + 1));
    const T half = T(1) / T(2);
    for (const auto& c : F.coeffs()) {
        rho.push_back((c.re + c.im) * half);
        sigma.push_back((c.re - c.im) * half);
    }
    return {UniPoly<T>(std::move(rho)), UniPoly<T>(std::move(sigma))};
}

template <typename T>
ParaPoly<T> dalembert_to_para(const DAlembertPair<T>& pair) {
    const int n = std::max(pair.rho.degree(), pair.sigma.degree()) + 1;
    std::vector<ParaComplex<T>> c(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = {pair.rho[k] + pair.sigma[k], pair.rho[k] - pair.sigma[k]};
    return ParaPoly<T>(std::move(c));
}

/// Evaluates the d'Alembert form directly at u + jv.
template <typename T>
ParaComplex<T> dalembert_eval(const DAlembertPair<T>& pair, const T& u, const T& v) {
    const T r = pair.rho(T(u + v));
    const T s = pair.sigma(T(u - v));
    return {r + s, r - s};
}

/// Black-box map R^2 -> R^2 used by the finite-difference checks.
using PlaneMap = std::function<std::array<double, 2>(double, double)>;

/// Central-difference residuals of f1_u - f2_v and f1_v - f2_u at (u, v).
inline std::array<double, 2> para_cr_residual(const PlaneMap& map, double u, double v, double h = 1e-5) {
    if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
    const auto pu = map(u + h, v), mu = map(u - h, v);
    const auto pv = map(u, v + h), mv = map(u, v - h);
    const double f1u = (pu[0] - mu[0]) / (2 * h), f2u = (pu[1] - mu[1]) / (2 * h);
    const double f1v = (pv[0] - mv[0]) / (2 * h), f2v = (pv[1] - mv[1]) / (2 * h);
    return {f1u - f2v, f1v - f2u};
}

inline PlaneMap as_plane_map(const ParaPoly<double>& p) {
    return [p](double u, double v) {
        const auto z = p(ParaComplex<double>{u, v});
        return std::array<double, 2>{z.re, z.im};
    };
}

} // namespace ias
