#pragma once

#include "poly.hpp"
#include "taylor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace ias {

enum class Signature { Indefinite, Lsc };

inline const char* to_string(Signature s) { return s == Signature::Indefinite ? "indefinite" : "lsc"; }

/// Para-holomorphic curve (F, G) driving the indefinite representation.
template <typename T>
struct ParaCurve {
    ParaPoly<T> F;
    ParaPoly<T> G;

    static constexpr Signature signature = Signature::Indefinite;

    template <typename To>
    ParaCurve<To> cast() const {
        return {F.template cast<To>(), G.template cast<To>()};
    }
    friend bool operator==(const ParaCurve&, const ParaCurve&) = default;
};

/// Holomorphic curve (F, G) for the locally strongly convex representation.
template <typename T>
struct HoloCurve {
    ComplexPoly<T> F;
    ComplexPoly<T> G;

    static constexpr Signature signature = Signature::Lsc;

    template <typename To>
    HoloCurve<To> cast() const {
        return {F.template cast<To>(), G.template cast<To>()};
    }
    friend bool operator==(const HoloCurve&, const HoloCurve&) = default;
};

using AnyCurve = std::variant<ParaCurve<Rational>, HoloCurve<Rational>>;

class InvalidDomain : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Axis-aligned parameter rectangle [u0,u1] x [v0,v1].
struct Domain {
    double u0 = -1, u1 = 1, v0 = -1, v1 = 1;

    const Domain& validate() const {
        if (!(std::isfinite(u0) && std::isfinite(u1) && std::isfinite(v0) && std::isfinite(v1)))
            throw InvalidDomain("domain bounds must be finite");
        if (!(u0 < u1) || !(v0 < v1)) throw InvalidDomain("domain must satisfy u0 < u1 and v0 < v1");
        return *this;
    }

    /// Largest Euclidean norm of a corner.
    double radius() const {
        return std::max({std::hypot(u0, v0), std::hypot(u0, v1), std::hypot(u1, v0), std::hypot(u1, v1)});
    }
    double diameter() const { return std::hypot(u1 - u0, v1 - v0); }
    bool contains(Point2 p) const { return p.u >= u0 && p.u <= u1 && p.v >= v0 && p.v <= v1; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

template <typename R>
double max_abs_coeff(const Poly<R>& p) {
    double m = 0;
    for (const auto& c : p.coeffs()) {
        if constexpr (is_plane_number<R>::value)
            m = std::max({m, std::abs(to_double(c.re)), std::abs(to_double(c.im))});
        else
            m = std::max(m, std::abs(to_double(c)));
    }
    return m;
}

/// Per-curve scale S used to make the singularity tolerances scale-aware.
template <typename Curve>
double curve_scale(const Curve& c, const Domain& d) {
    const double coeff = std::max(max_abs_coeff(c.F), max_abs_coeff(c.G));
    return std::max(1.0, coeff) * std::max(1.0, d.radius());
}

inline double curve_scale(const AnyCurve& c, const Domain& d) {
    return std::visit([&](const auto& x) { return curve_scale(x, d); }, c);
}

} // namespace ias
