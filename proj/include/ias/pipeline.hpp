#pragma once

// End-to-end runs over a curve file: trace + classify, and named residual suites.

#include "io.hpp"

#include <set>

namespace ias {

inline ClassifiedPoint classify_safely(const PolySurface& m, Point2 p, const Tolerances& tol) {
    ClassifiedPoint c{p, {}, std::nullopt, std::nullopt};
    try {
        c.cls = classify_point(m, p, tol);
    } catch (const std::exception& e) {
        c.error = e.what();
        const Taylor2 l = m.density(p);
        c.cls.evidence.lambda = l.val;
        c.cls.evidence.grad_norm = norm(l.grad());
        c.cls.evidence.degenerate = c.cls.evidence.grad_norm <= tol.deg;
    }
    return c;
}

/// Traces the singular set, classifies every traced point, locates
/// swallowtails, and classifies the probes after snapping them onto the
/// singular set (radius 1e-3 of the domain diameter).
inline ClassificationReport run_classification(const PolySurface& m, const Domain& d, int nu, int nv,
                                               const Tolerances& tol, const std::vector<Point2>& probes = {}) {
    ClassificationReport r;
    r.domain = d;
    r.curves = trace_singular_curves(m, d, nu, nv, tol);
    for (const auto& c : r.curves)
        for (const auto& p : c.points) r.points.push_back(classify_safely(m, p, tol));
    r.swallowtails = find_swallowtails(m, r.curves, tol);
    for (const auto& p : r.swallowtails) {
        auto c = classify_safely(m, p, tol);
        if (!c.error && c.cls.tag == SingularTag::Swallowtail) r.points.push_back(std::move(c));
    }
    for (const auto& p : probes) {
        auto c = classify_safely(m, snap_to_singular(m, p, tol, 1e-3 * d.diameter()), tol);
        c.requested = p;
        r.probes.push_back(std::move(c));
    }
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"duality", "two_form", "conformal", "monge_ampere", "lift", "ccr"};
    return names;
}

/// Runs the named suites on m over d; res is the trace grid for "ccr".
inline std::vector<ResidualReport> run_suites(const PolySurface& m, const Domain& d, const Tolerances& tol,
                                              const std::vector<std::string>& suites, int nu = 256, int nv = 256) {
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    const std::set<std::string> want(suites.begin(), suites.end());
    std::vector<ResidualReport> out;
    const auto pts = random_regular_points(m, d, 100, tol, 1);
    if (want.count("duality")) out.push_back(duality_residual(m, pts));
    if (want.count("two_form")) out.push_back(two_form_residual(m, pts));
    if (want.count("conformal")) out.push_back(metric_conformality(m, pts));
    if (want.count("monge_ampere") || want.count("lift")) {
        const GraphPatch patch = auto_graph_patch(m, d);
        if (want.count("monge_ampere")) out.push_back(monge_ampere_residual(m, patch));
        if (want.count("lift")) {
            auto [theta, omega] = lift_residual(m, patch);
            out.push_back(theta);
            out.push_back(omega);
        }
    }
    if (want.count("ccr")) out.push_back(ccr_residual(m, trace_singular_curves(m, d, nu, nv, tol), tol));
    return out;
}

} // namespace ias
