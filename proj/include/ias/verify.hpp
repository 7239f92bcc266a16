#pragma once

// Residual suites for the identities satisfied by generated surfaces.
// Residuals are scale-normalized: |a - b| / (1 + |a| + |b|) for an identity
// a = b, so reports compare directly against fixed tolerances.

#include "singular.hpp"

#include <limits>
#include <random>
#include <string>
#include <vector>

namespace ias {

struct ResidualReport {
    std::string name;
    double max_abs = 0;
    double mean_abs = 0;
    std::size_t points_checked = 0;
    double tolerance = 0;
    bool pass = true;
};

class PatchNotGraph : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace verify_tol {
inline constexpr double duality = 1e-8;
inline constexpr double two_form = 1e-9;
inline constexpr double conformal = 1e-9;
inline constexpr double monge_ampere = 1e-5;
inline constexpr double lift = 1e-5;
inline constexpr double graph_det = 1e-6;
} // namespace verify_tol

namespace detail {

class Accumulator {
public:
    Accumulator(std::string name, double tol) { r_.name = std::move(name), r_.tolerance = tol; }
    void add(double residual) {
        if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
        r_.max_abs = std::max(r_.max_abs, residual);
        sum_ += residual;
        ++r_.points_checked;
    }
    ResidualReport report() {
        r_.mean_abs = r_.points_checked ? sum_ / static_cast<double>(r_.points_checked) : 0.0;
        r_.pass = r_.max_abs <= r_.tolerance;
        return r_;
    }

private:
    ResidualReport r_;
    double sum_ = 0;
};

inline double rel(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b)); }

inline double rel(const Vec3& a, const Vec3& b) {
    double m = 0;
    for (std::size_t i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m / (1.0 + norm(a) + norm(b));
}

/// a + c = 0 as a normalized residual.
inline double rel_cancel(double a, double c) { return std::abs(a + c) / (1.0 + std::abs(a) + std::abs(c)); }

inline Signature signature_of(const PolySurface& m) {
    if (!m.signature()) throw std::invalid_argument("residual suites need a generated surface");
    return *m.signature();
}

} // namespace detail

/// Duality between position psi and conormal nu, xi = (0, 0, 1).
/// In the isothermal coordinates of the lsc representation the v-relations
/// change sign.
inline ResidualReport duality_residual(const PolySurface& m, const std::vector<Point2>& points) {
    const Signature sig = detail::signature_of(m);
    detail::Accumulator acc("duality", verify_tol::duality);
    const Vec3 xi{0, 0, 1};
    for (const Point2& p : points) {
        const Jet2<3> x = m.position_jet(p);
        const Jet2<3> n = m.normal_jet(p);
        double r = 0;
        if (sig == Signature::Indefinite) {
            r = std::max({detail::rel(x.du, cross(n.value, n.dv)), detail::rel(x.dv, cross(n.value, n.du)),
                          detail::rel(n.du, cross(x.dv, xi)), detail::rel(n.dv, cross(x.du, xi))});
        } else {
            r = std::max({detail::rel(x.du, cross(n.value, n.dv)), detail::rel(x.dv, -1.0 * cross(n.value, n.du)),
                          detail::rel(n.du, -1.0 * cross(x.dv, xi)), detail::rel(n.dv, cross(x.du, xi))});
        }
        acc.add(r);
    }
    return acc.report();
}

/// The lift annihilates dy0^dy1 + dy2^dy3 and the mixed form.
inline ResidualReport two_form_residual(const PolySurface& m, const std::vector<Point2>& points) {
    const Signature sig = detail::signature_of(m);
    detail::Accumulator acc("two_form", verify_tol::two_form);
    const double s = sig == Signature::Indefinite ? 1.0 : -1.0;
    for (const Point2& p : points) {
        const Jet2<3> x = m.position_jet(p);
        const Jet2<3> n = m.normal_jet(p);
        const double xx = x.du[0] * x.dv[1] - x.dv[0] * x.du[1];
        const double nn = n.du[0] * n.dv[1] - n.dv[0] * n.du[1];
        const double xn1 = x.du[0] * n.dv[0] - x.dv[0] * n.du[0];
        const double xn2 = x.du[1] * n.dv[1] - x.dv[1] * n.du[1];
        acc.add(std::max(detail::rel_cancel(xx, s * nn), detail::rel_cancel(xn1, xn2)));
    }
    return acc.report();
}

/// Affine metric g = -<dx, dn>: g_uv = 0 and g_uu = -g_vv (indefinite) or
/// g_uu = g_vv (lsc).
inline ResidualReport metric_conformality(const PolySurface& m, const std::vector<Point2>& points) {
    const Signature sig = detail::signature_of(m);
    detail::Accumulator acc("conformal", verify_tol::conformal);
    for (const Point2& p : points) {
        const Jet2<3> x = m.position_jet(p);
        const Jet2<3> n = m.normal_jet(p);
        const Vec2 xu{x.du[0], x.du[1]}, xv{x.dv[0], x.dv[1]}, nu{n.du[0], n.du[1]}, nv{n.dv[0], n.dv[1]};
        const double guu = -dot(xu, nu), gvv = -dot(xv, nv);
        const double a = dot(xu, nv), b = dot(xv, nu);
        const double guv = -0.5 * (a + b);
        const double r1 = std::abs(guv) / (1.0 + std::abs(a) + std::abs(b));
        const double r2 = sig == Signature::Indefinite ? detail::rel(guu, -gvv) : detail::rel(guu, gvv);
        acc.add(std::max(r1, r2));
    }
    return acc.report();
}

/// Sample points of a regular patch on which (u, v) -> (x1, x2) is a chart.
struct GraphPatch {
    std::vector<Point2> points;
};

/// Grid points of d with |det D(x1, x2)| above max(1e-6, 1e-3 max|det|).
inline GraphPatch auto_graph_patch(const PolySurface& m, const Domain& d, int nu = 24, int nv = 24) {
    d.validate();
    std::vector<Point2> pts;
    std::vector<double> dets;
    double mx = 0;
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            const Point2 p{grid_coord(d.u0, d.u1, i, nu), grid_coord(d.v0, d.v1, j, nv)};
            const Jet2<3> x = m.position_jet(p);
            const double det = x.du[0] * x.dv[1] - x.dv[0] * x.du[1];
            pts.push_back(p);
            dets.push_back(std::abs(det));
            mx = std::max(mx, std::abs(det));
        }
    const double cut = std::max(verify_tol::graph_det, 1e-3 * mx);
    GraphPatch g;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (dets[k] > cut) g.points.push_back(pts[k]);
    return g;
}

namespace detail {

inline void check_graph(const Jet2<3>& x) {
    const double det = x.du[0] * x.dv[1] - x.dv[0] * x.du[1];
    if (!(std::abs(det) > verify_tol::graph_det))
        throw PatchNotGraph("(u,v) -> (x1,x2) is not invertible on the patch");
}

} // namespace detail

/// det Hess phi in the chart (x1, x2) against c = -1 (indefinite) or +1 (lsc).
/// The chart Hessian is H = J^-T (H_uv phi - sum_k phi_k H_uv x_k) J^-1 with
/// J = D(x1, x2) and (phi_1, phi_2) = J^-T grad_uv phi.
inline ResidualReport monge_ampere_residual(const PolySurface& m, const GraphPatch& patch) {
    const double c = detail::signature_of(m) == Signature::Indefinite ? -1.0 : 1.0;
    detail::Accumulator acc("monge_ampere", verify_tol::monge_ampere);
    for (const Point2& p : patch.points) {
        const Jet2<3> x = m.position_jet(p);
        detail::check_graph(x);
        const double a = x.du[0], b = x.dv[0], cc = x.du[1], d = x.dv[1]; // J = [[a, b], [cc, d]]
        const double det = a * d - b * cc;
        // K = J^-1
        const double k11 = d / det, k12 = -b / det, k21 = -cc / det, k22 = a / det;
        // chart gradient g = J^-T grad_uv phi
        const double g1 = k11 * x.du[2] + k21 * x.dv[2];
        const double g2 = k12 * x.du[2] + k22 * x.dv[2];
        const double huu = x.duu[2] - g1 * x.duu[0] - g2 * x.duu[1];
        const double huv = x.duv[2] - g1 * x.duv[0] - g2 * x.duv[1];
        const double hvv = x.dvv[2] - g1 * x.dvv[0] - g2 * x.dvv[1];
        // det(K^T M K) = det(M) det(K)^2
        const double hdet = (huu * hvv - huv * huv) / (det * det);
        acc.add(std::abs(hdet - c));
    }
    return acc.report();
}

/// Lift (x1, x2, z = phi, p, q) with (p, q) = -(n1, n2): residuals of the
/// pulled-back contact form theta = dz - p dx - q dy and of
/// omega = c dx^dy - dp^dq.
struct GraphLift {
    bool flip_q = false; // negative-control hook
};

inline std::pair<ResidualReport, ResidualReport> lift_residual(const PolySurface& m, const GraphPatch& patch,
                                                               GraphLift opts = {}) {
    const double c = detail::signature_of(m) == Signature::Indefinite ? -1.0 : 1.0;
    detail::Accumulator theta("lift_theta", verify_tol::lift), omega("lift_omega", verify_tol::lift);
    const double qs = opts.flip_q ? -1.0 : 1.0;
    for (const Point2& pt : patch.points) {
        const Jet2<3> x = m.position_jet(pt);
        detail::check_graph(x);
        const Jet2<3> n = m.normal_jet(pt);
        const double p = -n.value[0], q = -qs * n.value[1];
        const double pu = -n.du[0], pv = -n.dv[0], qu = -qs * n.du[1], qv = -qs * n.dv[1];
        const double tu = x.du[2] - p * x.du[0] - q * x.du[1];
        const double tv = x.dv[2] - p * x.dv[0] - q * x.dv[1];
        const double su = std::abs(x.du[2]) + std::abs(p * x.du[0]) + std::abs(q * x.du[1]);
        const double sv = std::abs(x.dv[2]) + std::abs(p * x.dv[0]) + std::abs(q * x.dv[1]);
        theta.add(std::max(std::abs(tu) / (1.0 + su), std::abs(tv) / (1.0 + sv)));
        const double area = x.du[0] * x.dv[1] - x.dv[0] * x.du[1];
        const double dpq = pu * qv - pv * qu;
        omega.add(detail::rel(c * area, dpq));
    }
    return {theta.report(), omega.report()};
}

/// Cuspidal cross cap obstruction: |Psi'(0)| at every frontal-not-front point with a
/// regular singular curve, against 1e-6 S^3.
inline ResidualReport ccr_residual(const PolySurface& m, const std::vector<SingularCurve>& curves,
                                   const Tolerances& tol) {
    detail::Accumulator acc("ccr", 1e-6 * tol.scale * tol.scale * tol.scale);
    for (const SingularCurve& c : curves)
        for (const Point2& p : c.points) {
            const SingularClass k = classify_point(m, p, tol);
            if (k.tag == SingularTag::FrontalNotFront && k.evidence.dpsi0) acc.add(std::abs(*k.evidence.dpsi0));
        }
    return acc.report();
}

/// Uniform random points of d with |lambda| > tol.sing.
inline std::vector<Point2> random_regular_points(const PolySurface& m, const Domain& d, std::size_t count,
                                                 const Tolerances& tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> du(d.u0, d.u1), dv(d.v0, d.v1);
    std::vector<Point2> out;
    for (std::size_t tries = 0; out.size() < count && tries < 100 * count; ++tries) {
        const Point2 p{du(rng), dv(rng)};
        if (std::abs(m.density_value(p)) > tol.sing) out.push_back(p);
    }
    return out;
}

} // namespace ias
