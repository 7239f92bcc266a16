#pragma once

// Improper affine spheres from curve pairs.
//
// Indefinite: x = F - conj(G), n = conj(F) + G, phi = -int <n, dx>.
// Locally strongly convex: x = G + conj(F), n = conj(F) - G,
//   phi = (|G|^2 - |F|^2)/2 + Re(G F - 2 int F dG).
// Both are assembled as exact bivariate polynomials in (u, v); the conormal
// of the result is (n, 1) and the affine normal is (0, 0, 1).

#include "curve.hpp"

#include <stdexcept>
#include <string>

namespace ias {

class ClosednessViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact component polynomials of a generated surface.
template <typename T>
struct SurfaceComponents {
    Signature signature = Signature::Indefinite;
    BiPoly<T> f1, f2, g1, g2; // F = f1 + e f2, G = g1 + e g2
    BiPoly<T> x1, x2, phi;    // position
    BiPoly<T> n1, n2;         // conormal is (n1, n2, 1)
    BiPoly<T> density;        // det D(x1, x2)
    bool closed = true;       // false: phi is only the path integral of a non-exact form

    template <typename To>
    SurfaceComponents<To> cast() const {
        SurfaceComponents<To> o;
        o.signature = signature;
        o.f1 = f1.template cast<To>();
        o.f2 = f2.template cast<To>();
        o.g1 = g1.template cast<To>();
        o.g2 = g2.template cast<To>();
        o.x1 = x1.template cast<To>();
        o.x2 = x2.template cast<To>();
        o.phi = phi.template cast<To>();
        o.n1 = n1.template cast<To>();
        o.n2 = n2.template cast<To>();
        o.density = density.template cast<To>();
        o.closed = closed;
        return o;
    }
};

namespace detail {

template <typename T>
bool negligible(const BiPoly<T>& p, const T& reference) {
    if constexpr (is_exact_v<T>) {
        (void)reference;
        return p.is_zero();
    } else {
        return p.max_abs_coeff() <= 1e-12 * std::max(T(1), reference);
    }
}

template <typename T>
BiPoly<T> jacobian_det(const BiPoly<T>& a, const BiPoly<T>& b) {
    return a.du() * b.dv() - a.dv() * b.du();
}

/// The 1-form -<n, dx> as (phi_u, phi_v).
template <typename T>
std::pair<BiPoly<T>, BiPoly<T>> potential_form(const BiPoly<T>& x1, const BiPoly<T>& x2, const BiPoly<T>& n1,
                                               const BiPoly<T>& n2) {
    BiPoly<T> pu = -(n1 * x1.du() + n2 * x2.du());
    BiPoly<T> pv = -(n1 * x1.dv() + n2 * x2.dv());
    return {std::move(pu), std::move(pv)};
}

/// Path integral (0,0) -> (0,v) -> (u,v); the potential itself when the form is closed.
template <typename T>
BiPoly<T> path_integral(const BiPoly<T>& pu, const BiPoly<T>& pv) {
    return pu.integrate_u() + pv.at_u_zero().integrate_v();
}

template <typename T>
void check_closed(const BiPoly<T>& pu, const BiPoly<T>& pv) {
    BiPoly<T> curl = pu.dv() - pv.du();
    if (!negligible(curl, std::max(pu.max_abs_coeff(), pv.max_abs_coeff())))
        throw ClosednessViolation("potential form is not closed: input components are not para-holomorphic");
}

} // namespace detail

/// Potential phi of the indefinite surface from raw components, checking the
/// mixed-partial identity first. Normalized so phi(0,0) = 0.
template <typename T>
BiPoly<T> phi_potential_from_parts(const BiPoly<T>& f1, const BiPoly<T>& f2, const BiPoly<T>& g1,
                                   const BiPoly<T>& g2) {
    auto [pu, pv] = detail::potential_form<T>(f1 - g1, f2 + g2, f1 + g1, g2 - f2);
    detail::check_closed(pu, pv);
    return detail::path_integral(pu, pv);
}

template <typename T>
BiPoly<T> phi_potential(const ParaCurve<T>& c) {
    auto [f1, f2] = expand(c.F);
    auto [g1, g2] = expand(c.G);
    return phi_potential_from_parts(f1, f2, g1, g2);
}

/// Indefinite surface from raw components. With strict = false a non-closed
/// form is accepted (phi becomes the path integral and `closed` is cleared);
/// this is how negative controls are built.
template <typename T>
SurfaceComponents<T> indefinite_from_parts(BiPoly<T> f1, BiPoly<T> f2, BiPoly<T> g1, BiPoly<T> g2,
                                           bool strict = true) {
    SurfaceComponents<T> s;
    s.signature = Signature::Indefinite;
    s.x1 = f1 - g1;
    s.x2 = f2 + g2;
    s.n1 = f1 + g1;
    s.n2 = g2 - f2;
    auto [pu, pv] = detail::potential_form(s.x1, s.x2, s.n1, s.n2);
    try {
        detail::check_closed(pu, pv);
    } catch (const ClosednessViolation&) {
        if (strict) throw;
        s.closed = false;
    }
    s.phi = detail::path_integral(pu, pv);
    s.density = detail::jacobian_det(s.x1, s.x2);
    s.f1 = std::move(f1);
    s.f2 = std::move(f2);
    s.g1 = std::move(g1);
    s.g2 = std::move(g2);
    return s;
}

template <typename T>
SurfaceComponents<T> surface_components(const ParaCurve<T>& c) {
    auto [f1, f2] = expand(c.F);
    auto [g1, g2] = expand(c.G);
    return indefinite_from_parts(std::move(f1), std::move(f2), std::move(g1), std::move(g2));
}

template <typename T>
SurfaceComponents<T> surface_components(const HoloCurve<T>& c) {
    SurfaceComponents<T> s;
    s.signature = Signature::Lsc;
    auto [f1, f2] = expand(c.F);
    auto [g1, g2] = expand(c.G);
    s.x1 = g1 + f1;
    s.x2 = g2 - f2;
    s.n1 = f1 - g1;
    s.n2 = -(f2 + g2);
    const ComplexPoly<T> integral = (c.F * c.G.derivative()).antiderivative();
    const ComplexPoly<T> mixed = c.G * c.F - Complex<T>(T(2)) * integral;
    const BiPoly<T> mixed_re = expand(mixed).first;
    const T half = T(1) / T(2);
    s.phi = (g1 * g1 + g2 * g2 - f1 * f1 - f2 * f2) * half + mixed_re;
    s.density = detail::jacobian_det(s.x1, s.x2);
    s.f1 = std::move(f1);
    s.f2 = std::move(f2);
    s.g1 = std::move(g1);
    s.g2 = std::move(g2);
    return s;
}

/// Component names accepted by negate_component.
inline constexpr const char* kComponentNames[] = {"x1", "x2", "phi", "n1", "n2"};

/// Flips the sign of one named component (negative-control hook).
template <typename T>
void negate_component(SurfaceComponents<T>& s, const std::string& name) {
    if (name == "x1") s.x1 = -s.x1;
    else if (name == "x2") s.x2 = -s.x2;
    else if (name == "phi") s.phi = -s.phi;
    else if (name == "n1") s.n1 = -s.n1;
    else if (name == "n2") s.n2 = -s.n2;
    else throw std::invalid_argument("unknown surface component '" + name + "'");
    s.density = detail::jacobian_det(s.x1, s.x2);
}

} // namespace ias
