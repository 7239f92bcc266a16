#pragma once

// Singular set of a frontal and pointwise classification of its points.

#include "trace.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ias {

/// Scale-aware thresholds; S is the curve scale (see curve_scale).
struct Tolerances {
    double scale = 1;
    double sing = 1e-9;   // |lambda| on the singular set
    double deg = 1e-7;    // |d lambda| at degenerate points
    double branch = 1e-9; // first derivatives at branch points
    double det = 1e-6;    // det(gamma', eta) and lift-rank angle
    double null = 1e-7;   // |d psi(eta)|
    double ff = 1e-9;     // equalities of the frontal-not-front test
    double trace = 1e-9;  // |lambda| at traced points

    static Tolerances for_scale(double s) {
        return {s, 1e-9 * s * s, 1e-7 * s, 1e-9 * s, 1e-6, 1e-7, 1e-9 * s, 1e-9 * s * s};
    }
};

class NotSingular : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class BranchPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class TraceRequired : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SingularTag { Regular, BranchPoint, FrontalNotFront, DegenerateOther, CuspidalEdge, Swallowtail, FrontUnclassified };

inline const char* to_string(SingularTag t) {
    switch (t) {
    case SingularTag::Regular: return "Regular";
    case SingularTag::BranchPoint: return "BranchPoint";
    case SingularTag::FrontalNotFront: return "FrontalNotFront";
    case SingularTag::DegenerateOther: return "DegenerateOther";
    case SingularTag::CuspidalEdge: return "CuspidalEdge";
    case SingularTag::Swallowtail: return "Swallowtail";
    case SingularTag::FrontUnclassified: return "FrontUnclassified";
    }
    return "?";
}

struct Evidence {
    double lambda = 0;
    double grad_norm = 0;
    std::optional<double> det_ge;
    std::optional<double> ddet_ge;
    std::optional<double> psi0;
    std::optional<double> dpsi0;
    int lift_rank = 2;
    bool degenerate = false;
};

struct SingularClass {
    SingularTag tag = SingularTag::Regular;
    Evidence evidence;
};

struct SingularCurve {
    std::vector<Point2> points;
    std::vector<Vec2> tangents;
    std::vector<bool> degenerate;
    bool closed = false;
};

/// Exact area density: |F'|^2 - |G'|^2 (para-complex modulus).
template <typename T>
BiPoly<T> area_density(const ParaCurve<T>& c) {
    auto [a, b] = expand(c.F.derivative());
    auto [p, q] = expand(c.G.derivative());
    return a * a - b * b - (p * p - q * q);
}

/// Exact area density: |G'|^2 - |F'|^2.
template <typename T>
BiPoly<T> area_density(const HoloCurve<T>& c) {
    auto [a, b] = expand(c.F.derivative());
    auto [p, q] = expand(c.G.derivative());
    return p * p + q * q - (a * a + b * b);
}

template <typename Curve>
auto grad_density(const Curve& c) {
    const auto l = area_density(c);
    return std::pair{l.du(), l.dv()};
}

inline double area_density(const PolySurface& m, Point2 p) { return m.density_value(p); }
inline Vec2 grad_density(const PolySurface& m, Point2 p) { return m.density(p).grad(); }

/// The level-set function whose zero set carries the singular curve near p:
/// lambda itself where d lambda != 0, otherwise lambda_u or lambda_v (doubled
/// singular lines). nullopt when neither is regular at p.
inline std::optional<GradientField> singular_curve_function(const PolySurface& m, Point2 p, const Tolerances& tol) {
    const Taylor2 l = m.density(p);
    if (norm(l.grad()) > tol.deg)
        return GradientField([&m](Point2 q) {
            const Taylor2 t = m.density(q);
            return FieldSample{t.val, t.grad()};
        });
    const Vec2 gu{l.duu, l.duv}, gv{l.duv, l.dvv};
    if (std::max(norm(gu), norm(gv)) <= tol.deg) return std::nullopt;
    if (norm(gu) >= norm(gv))
        return GradientField([&m](Point2 q) {
            const Taylor2 t = m.density(q);
            return FieldSample{t.du, {t.duu, t.duv}};
        });
    return GradientField([&m](Point2 q) {
        const Taylor2 t = m.density(q);
        return FieldSample{t.dv, {t.duv, t.dvv}};
    });
}

/// Unit kernel vector of d psi at a singular point.
inline Vec2 null_vector(const PolySurface& m, Point2 p, const Tolerances& tol) {
    if (std::abs(m.density_value(p)) > tol.sing) throw NotSingular("point is not on the singular set");
    const KernelRows k = m.kernel_rows(p);
    Vec2 best{0, 0};
    for (int i = 0; i < k.count; ++i) {
        const Vec2& r = k.rows[static_cast<std::size_t>(i)];
        const Vec2 cand{-r[1], r[0]};
        if (norm(cand) > norm(best)) best = cand;
    }
    if (norm(best) <= tol.branch) throw BranchPointError("d psi vanishes: kernel is two-dimensional");
    return (1.0 / norm(best)) * best;
}

/// Rank of the Legendrian lift (psi, unit normal): 2, 1 or 0.
inline int lift_rank(const PolySurface& m, Point2 p, const Tolerances& tol) {
    const Jet2<3> x = m.position_jet(p);
    const Jet2<3> n = m.unit_normal_jet(p);
    std::array<double, 6> cu{}, cv{};
    for (std::size_t i = 0; i < 3; ++i) {
        cu[i] = x.du[i], cu[i + 3] = n.du[i];
        cv[i] = x.dv[i], cv[i + 3] = n.dv[i];
    }
    auto len = [](const std::array<double, 6>& a) {
        double s = 0;
        for (double t : a) s += t * t;
        return std::sqrt(s);
    };
    const double a = len(cu), b = len(cv);
    if (std::max(a, b) <= tol.branch) return 0;
    if (std::min(a, b) <= 1e-12 * std::max(a, b)) return 1;
    double minors = 0; // |cu ^ cv|^2 by Lagrange's identity, without cancellation
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            const double d = cu[i] * cv[j] - cu[j] * cv[i];
            minors += d * d;
        }
    return std::sqrt(minors) / (a * b) > tol.det ? 2 : 1;
}

inline bool is_branch_point(const PolySurface& m, Point2 p, const Tolerances& tol) {
    if (const auto d = m.curve_derivatives(p)) {
        double mx = 0;
        for (double x : *d) mx = std::max(mx, std::abs(x));
        return mx <= tol.branch;
    }
    const Jet2<3> x = m.position_jet(p);
    double mx = 0;
    for (std::size_t i = 0; i < 3; ++i) mx = std::max({mx, std::abs(x.du[i]), std::abs(x.dv[i])});
    return mx <= tol.branch;
}

/// Frontal-not-front test. Indefinite surfaces: f1_u = +-f2_u together with
/// g1_u = +-g2_u (same sign). Otherwise: the lift drops rank.
inline bool is_frontal_not_front(const PolySurface& m, Point2 p, const Tolerances& tol) {
    if (m.signature() == Signature::Indefinite) {
        const auto d = *m.curve_derivatives(p);
        const bool plus = std::abs(d[0] - d[1]) <= tol.ff && std::abs(d[2] - d[3]) <= tol.ff;
        const bool minus = std::abs(d[0] + d[1]) <= tol.ff && std::abs(d[2] + d[3]) <= tol.ff;
        return plus || minus;
    }
    return lift_rank(m, p, tol) == 1;
}

namespace detail {

inline Vec2 orient_like(Vec2 a, const Vec2& ref) { return dot(a, ref) < 0 ? -1.0 * a : a; }

inline double psi_value(const PolySurface& m, Point2 p, const Vec2& tangent, const Vec2& eta) {
    const Jet2<3> x = m.position_jet(p);
    const Jet2<3> n = m.unit_normal_jet(p);
    return det3(x.along(tangent), n.along(eta), n.value);
}

/// Values of det(gamma', eta) and Psi on a continuation stencil around p.
struct StencilValues {
    std::array<double, 5> det{};
    std::array<double, 5> psi{};
    double h = 0;
};

inline StencilValues stencil_values(const PolySurface& m, Point2 p, const Tolerances& tol, double h) {
    const auto g = singular_curve_function(m, p, tol);
    if (!g) throw TraceRequired("singular curve is not regular at the point");
    CurveStencil st;
    try {
        st = curve_stencil(*g, p, h, 1e-3 * tol.trace);
    } catch (const ContinuationFailure& e) {
        throw TraceRequired(e.what());
    }
    StencilValues out;
    out.h = h;
    Vec2 eta0{};
    try {
        eta0 = null_vector(m, p, tol);
    } catch (const std::domain_error& e) {
        throw TraceRequired(e.what());
    }
    for (std::size_t k = 0; k < 5; ++k) {
        Vec2 eta{};
        try {
            eta = null_vector(m, st.points[k], tol);
        } catch (const std::domain_error& e) {
            throw TraceRequired(e.what());
        }
        eta = orient_like(eta, eta0);
        out.det[k] = det2(st.tangents[k], eta);
        out.psi[k] = psi_value(m, st.points[k], st.tangents[k], eta);
    }
    return out;
}

} // namespace detail

/// Default arc-length step for derivative stencils along the singular curve.
inline constexpr double kStencilStep = 1e-3;

/// Psi(0) and Psi'(0) along the singular curve through p, parametrized by
/// arc length with the null vector oriented continuously.
inline std::pair<double, double> ccr_psi(const PolySurface& m, Point2 p, const Tolerances& tol,
                                         double t_window = kStencilStep) {
    const auto s = detail::stencil_values(m, p, tol, t_window);
    return {s.psi[2], stencil_derivative(s.psi, s.h)};
}

inline SingularClass classify_point(const PolySurface& m, Point2 p, const Tolerances& tol) {
    SingularClass out;
    Evidence& ev = out.evidence;
    const Taylor2 l = m.density(p);
    ev.lambda = l.val;
    ev.grad_norm = norm(l.grad());
    ev.degenerate = ev.grad_norm <= tol.deg;
    ev.lift_rank = lift_rank(m, p, tol);

    if (std::abs(ev.lambda) > tol.sing) return out;
    if (is_branch_point(m, p, tol)) {
        out.tag = SingularTag::BranchPoint;
        return out;
    }
    if (is_frontal_not_front(m, p, tol)) {
        out.tag = SingularTag::FrontalNotFront;
        try {
            const auto s = detail::stencil_values(m, p, tol, kStencilStep);
            ev.det_ge = s.det[2];
            ev.psi0 = s.psi[2];
            ev.dpsi0 = stencil_derivative(s.psi, s.h);
        } catch (const TraceRequired&) {
        }
        return out;
    }
    if (ev.degenerate) {
        out.tag = SingularTag::DegenerateOther;
        return out;
    }

    const Vec2 eta = null_vector(m, p, tol);
    const Vec2 tangent = unit_tangent(l.grad());
    ev.det_ge = det2(tangent, eta);
    if (ev.lift_rank == 2 && std::abs(*ev.det_ge) > tol.det) {
        out.tag = SingularTag::CuspidalEdge;
        return out;
    }
    const auto s = detail::stencil_values(m, p, tol, kStencilStep);
    ev.ddet_ge = stencil_derivative(s.det, s.h);
    ev.psi0 = s.psi[2];
    ev.dpsi0 = stencil_derivative(s.psi, s.h);
    if (ev.lift_rank == 2 && std::abs(*ev.ddet_ge) > tol.det)
        out.tag = SingularTag::Swallowtail;
    else
        out.tag = SingularTag::FrontUnclassified;
    return out;
}

/// Moves p onto lambda = 0 (or onto a doubled singular line) if that takes
/// at most `radius`; otherwise returns p unchanged.
inline Point2 snap_to_singular(const PolySurface& m, Point2 p, const Tolerances& tol, double radius) {
    if (std::abs(m.density_value(p)) <= tol.sing) return p;
    const auto g = singular_curve_function(m, p, tol);
    if (!g) return p;
    const auto q = snap_to_level(*g, p, 1e-3 * tol.trace);
    if (!q || detail::dist(*q, p) > radius || std::abs(m.density_value(*q)) > tol.sing) return p;
    return *q;
}

namespace detail {

/// Consecutive runs of polyline points passing `keep`, at least min_len long.
template <typename Keep>
std::vector<std::vector<Point2>> runs(const Polyline& line, Keep&& keep, std::size_t min_len) {
    std::vector<std::vector<Point2>> out;
    std::vector<Point2> cur;
    auto flush = [&] {
        if (cur.size() >= min_len) out.push_back(cur);
        cur.clear();
    };
    for (const Point2& p : line.points) {
        if (keep(p))
            cur.push_back(p);
        else
            flush();
    }
    flush();
    return out;
}

} // namespace detail

/// Singular curves of m over d: the sign-change set of lambda on an nu x nv
/// grid, split at degenerate points, plus doubled singular lines (lambda and
/// d lambda both vanish) found as zero sets of lambda_u and lambda_v.
inline std::vector<SingularCurve> trace_singular_curves(const PolySurface& m, const Domain& d, int nu, int nv,
                                                        const Tolerances& tol) {
    std::vector<std::vector<Point2>> pieces;
    std::vector<bool> piece_closed;
    auto non_degenerate = [&](Point2 p) { return norm(m.density(p).grad()) > tol.deg; };
    for (const Polyline& line : marching_squares([&](Point2 p) { return m.density_value(p); }, d, nu, nv)) {
        auto rs = detail::runs(line, non_degenerate, 2);
        const bool whole = rs.size() == 1 && rs[0].size() == line.points.size();
        for (auto& r : rs) {
            pieces.push_back(std::move(r));
            piece_closed.push_back(whole && line.closed);
        }
    }

    auto doubled = [&](Point2 p) {
        const Taylor2 l = m.density(p);
        return std::abs(l.val) <= tol.trace && norm(l.grad()) <= tol.deg;
    };
    const double spacing = std::max((d.u1 - d.u0) / (nu - 1), (d.v1 - d.v0) / (nv - 1));
    std::vector<Point2> doubled_pts;
    auto near_doubled = [&](Point2 p) {
        return std::any_of(doubled_pts.begin(), doubled_pts.end(),
                           [&](Point2 q) { return detail::dist(p, q) < 0.75 * spacing; });
    };
    std::vector<std::vector<Point2>> from_u;
    for (const Polyline& line : marching_squares([&](Point2 p) { return m.density(p).du; }, d, nu, nv))
        for (auto& r : detail::runs(line, doubled, 3)) from_u.push_back(std::move(r));
    for (const auto& r : from_u) doubled_pts.insert(doubled_pts.end(), r.begin(), r.end());
    std::vector<std::vector<Point2>> from_v;
    for (const Polyline& line : marching_squares([&](Point2 p) { return m.density(p).dv; }, d, nu, nv))
        for (auto& r : detail::runs(line, [&](Point2 p) { return doubled(p) && !near_doubled(p); }, 3))
            from_v.push_back(std::move(r));
    for (auto* src : {&from_u, &from_v})
        for (auto& r : *src) {
            pieces.push_back(std::move(r));
            piece_closed.push_back(false);
        }

    std::vector<SingularCurve> out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        SingularCurve c;
        c.points = std::move(pieces[k]);
        c.closed = piece_closed[k];
        const std::size_t n = c.points.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = c.points[i == 0 ? 0 : i - 1], b = c.points[i + 1 < n ? i + 1 : n - 1];
            const Vec2 chord{b.u - a.u, b.v - a.v};
            const Point2 p = c.points[i];
            const Taylor2 l = m.density(p);
            Vec2 t{};
            const bool deg = norm(l.grad()) <= tol.deg;
            if (!deg) {
                t = unit_tangent(l.grad());
            } else if (const auto g = singular_curve_function(m, p, tol)) {
                t = unit_tangent((*g)(p).grad);
            } else {
                t = (1.0 / norm(chord)) * chord;
            }
            c.tangents.push_back(detail::orient_like(t, chord));
            c.degenerate.push_back(deg);
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Points of the singular curves where det(gamma', eta) changes sign at a
/// front point with a regular singular curve: swallowtail candidates,
/// located by bisection along the polyline with re-projection onto lambda = 0.
inline std::vector<Point2> find_swallowtails(const PolySurface& m, const std::vector<SingularCurve>& curves,
                                             const Tolerances& tol) {
    std::vector<Point2> out;
    auto admissible = [&](Point2 p) {
        const Taylor2 l = m.density(p);
        return std::abs(l.val) <= tol.sing && norm(l.grad()) > tol.deg && !is_branch_point(m, p, tol) &&
               !is_frontal_not_front(m, p, tol) && lift_rank(m, p, tol) == 2;
    };
    // oriented det(gamma', eta) with the tangent aligned to `dir` and eta to `eta_ref`
    auto oriented = [&](Point2 p, const Vec2& dir, const Vec2& eta_ref, Vec2* eta_out) {
        const Vec2 t = detail::orient_like(unit_tangent(m.density(p).grad()), dir);
        const Vec2 eta = detail::orient_like(null_vector(m, p, tol), eta_ref);
        if (eta_out) *eta_out = eta;
        return det2(t, eta);
    };
    for (const SingularCurve& c : curves) {
        bool have_prev = false;
        Vec2 eta_prev{};
        double det_prev = 0;
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            const Point2 p = c.points[i];
            if (!admissible(p)) {
                have_prev = false;
                continue;
            }
            const Point2 nb = c.points[i + 1 < c.points.size() ? i + 1 : i];
            const Point2 pb = c.points[i == 0 ? 0 : i - 1];
            const Vec2 dir{nb.u - pb.u, nb.v - pb.v};
            Vec2 eta{};
            double det = 0;
            try {
                det = oriented(p, dir, have_prev ? eta_prev : null_vector(m, p, tol), &eta);
            } catch (const std::domain_error&) {
                have_prev = false;
                continue;
            }
            if (det == 0.0) out.push_back(p);
            if (have_prev && (det_prev > 0) != (det > 0) && det != 0.0 && det_prev != 0.0) {
                const Point2 a = c.points[i - 1], b = p;
                const Vec2 seg{b.u - a.u, b.v - a.v};
                double lo = 0, hi = 1;
                Point2 best = a;
                bool ok = true;
                for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    Point2 q = detail::lerp(a, b, mid);
                    if (const auto g = singular_curve_function(m, q, tol))
                        if (const auto snapped = snap_to_level(*g, q, 1e-3 * tol.trace)) q = *snapped;
                    double dq = 0;
                    try {
                        dq = oriented(q, seg, eta_prev, nullptr);
                    } catch (const std::domain_error&) {
                        ok = false;
                        break;
                    }
                    best = q;
                    if ((dq > 0) == (det_prev > 0))
                        lo = mid;
                    else
                        hi = mid;
                }
                if (ok) out.push_back(best);
            }
            have_prev = true;
            eta_prev = eta;
            det_prev = det;
        }
    }
    std::vector<Point2> unique;
    for (const Point2& p : out)
        if (std::none_of(unique.begin(), unique.end(), [&](Point2 q) { return detail::dist(p, q) < 1e-6; }))
            unique.push_back(p);
    return unique;
}

} // namespace ias
