#pragma once

// Polynomial normal forms of frontal singularities, as frontals with an
// explicit (non-unit) normal field.

#include "model.hpp"

namespace ias::normal_forms {

namespace detail {
inline BiPoly<double> m(double c, int i, int j) { return BiPoly<double>::monomial(i, j, c); }
} // namespace detail

/// (u^2, u^3, v); singular along u = 0.
inline PolySurface cuspidal_edge() {
    using detail::m;
    return PolySurface::frontal({m(1, 2, 0), m(1, 3, 0), m(1, 0, 1)}, {m(3, 1, 0), m(-2, 0, 0), BiPoly<double>()});
}

/// (3u^4 + u^2 v, 4u^3 + 2uv, v); swallowtail at the origin.
inline PolySurface swallowtail() {
    using detail::m;
    return PolySurface::frontal({m(3, 4, 0) + m(1, 2, 1), m(4, 3, 0) + m(2, 1, 1), m(1, 0, 1)},
                                {m(1, 0, 0), m(-1, 1, 0), m(1, 2, 0)});
}

/// Cuspidal cross cap (u, v^2, u v^3); singular along v = 0, frontal but not
/// a front at the origin.
inline PolySurface cuspidal_cross_cap() {
    using detail::m;
    return PolySurface::frontal({m(1, 1, 0), m(1, 0, 2), m(1, 1, 3)}, {m(-2, 0, 3), m(-3, 1, 1), m(2, 0, 0)});
}

} // namespace ias::normal_forms
