#pragma once

// Zero-set extraction for scalar fields on a rectangle: marching squares on
// a node grid, crossings refined on the grid edges by bracketing, segments
// chained into polylines. Plus predictor-corrector continuation along a
// regular level curve, used for arc-length stencils.

#include "model.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ias {

struct Polyline {
    std::vector<Point2> points;
    bool closed = false;
};

using ScalarField = std::function<double(Point2)>;

/// Value and gradient of a level-set function.
struct FieldSample {
    double value = 0;
    Vec2 grad{};
};
using GradientField = std::function<FieldSample(Point2)>;

namespace detail {

inline Point2 lerp(Point2 a, Point2 b, double t) { return {a.u + (b.u - a.u) * t, a.v + (b.v - a.v) * t}; }

inline Point2 refine_edge(const ScalarField& f, Point2 a, Point2 b, double fa, double fb) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    auto g = [&](double t) { return f(lerp(a, b, t)); };
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(g, 0.0, 1.0, fa, fb, boost::math::tools::eps_tolerance<double>(52),
                                                     iters);
    // take the end of the final bracket with the smaller residual
    const double ga = g(r.first), gb = g(r.second);
    return lerp(a, b, std::abs(ga) <= std::abs(gb) ? r.first : r.second);
}

inline double dist(Point2 a, Point2 b) { return std::hypot(a.u - b.u, a.v - b.v); }

} // namespace detail

/// Polylines approximating {f = 0} on the nu x nv node grid over d. Nodes
/// with f > 0 are "inside"; exact zeros count as outside, so curves through
/// nodes are still found (the crossing refines onto the node).
inline std::vector<Polyline> marching_squares(const ScalarField& f, const Domain& d, int nu, int nv) {
    d.validate();
    if (nu < 2 || nv < 2) throw InvalidDomain("grid resolution must be at least 2x2");

    std::vector<double> val(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv));
    std::vector<Point2> node(val.size());
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            const auto k = static_cast<std::size_t>(j * nu + i);
            node[k] = {grid_coord(d.u0, d.u1, i, nu), grid_coord(d.v0, d.v1, j, nv)};
            val[k] = f(node[k]);
        }
    auto at = [&](int i, int j) { return static_cast<std::size_t>(j * nu + i); };
    auto inside = [&](int i, int j) { return val[at(i, j)] > 0.0; };

    const int horizontal = (nu - 1) * nv;
    auto h_edge = [&](int i, int j) { return j * (nu - 1) + i; };
    auto v_edge = [&](int i, int j) { return horizontal + j * nu + i; };

    std::unordered_map<int, Point2> crossing;
    auto crossing_of = [&](int id, int i0, int j0, int i1, int j1) {
        if (auto it = crossing.find(id); it != crossing.end()) return;
        crossing.emplace(id, detail::refine_edge(f, node[at(i0, j0)], node[at(i1, j1)], val[at(i0, j0)], val[at(i1, j1)]));
    };

    std::unordered_map<int, std::vector<int>> adj;
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    for (int j = 0; j + 1 < nv; ++j)
        for (int i = 0; i + 1 < nu; ++i) {
            const bool c0 = inside(i, j), c1 = inside(i + 1, j), c2 = inside(i + 1, j + 1), c3 = inside(i, j + 1);
            const int e0 = h_edge(i, j), e1 = v_edge(i + 1, j), e2 = h_edge(i, j + 1), e3 = v_edge(i, j);
            std::vector<int> cut;
            if (c0 != c1) crossing_of(e0, i, j, i + 1, j), cut.push_back(e0);
            if (c1 != c2) crossing_of(e1, i + 1, j, i + 1, j + 1), cut.push_back(e1);
            if (c2 != c3) crossing_of(e2, i, j + 1, i + 1, j + 1), cut.push_back(e2);
            if (c3 != c0) crossing_of(e3, i, j, i, j + 1), cut.push_back(e3);
            if (cut.size() == 2) {
                link(cut[0], cut[1]);
            } else if (cut.size() == 4) {
                const Point2 centre = detail::lerp(node[at(i, j)], node[at(i + 1, j + 1)], 0.5);
                const bool mid = f(centre) > 0.0;
                if (mid == c0) {
                    link(e0, e1); // separates corner 1
                    link(e2, e3); // separates corner 3
                } else {
                    link(e3, e0);
                    link(e1, e2);
                }
            }
        }

    std::vector<Polyline> out;
    std::unordered_map<int, bool> used;
    auto walk = [&](int start) {
        Polyline line;
        int prev = -1, cur = start;
        while (true) {
            used[cur] = true;
            const Point2 p = crossing.at(cur);
            if (line.points.empty() || detail::dist(line.points.back(), p) > 1e-14) line.points.push_back(p);
            int next = -1;
            for (int n : adj[cur])
                if (n != prev && !used[n]) {
                    next = n;
                    break;
                }
            if (next < 0) {
                for (int n : adj[cur])
                    if (n == start && n != prev && line.points.size() > 2) line.closed = true;
                break;
            }
            prev = cur;
            cur = next;
        }
        if (line.points.size() >= 2) out.push_back(std::move(line));
    };
    // ids in increasing order keep the output deterministic
    std::vector<int> ids;
    ids.reserve(adj.size());
    for (const auto& [id, _] : adj) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    for (int id : ids)
        if (!used[id] && adj[id].size() == 1) walk(id);
    for (int id : ids)
        if (!used[id]) walk(id);
    return out;
}

/// Newton projection onto {g = 0} along the gradient. Returns nullopt if the
/// gradient vanishes or the iteration does not settle.
inline std::optional<Point2> snap_to_level(const GradientField& g, Point2 p, double value_tol, int max_iter = 60) {
    for (int it = 0; it < max_iter; ++it) {
        const FieldSample s = g(p);
        if (std::abs(s.value) <= value_tol) return p;
        const double gg = dot(s.grad, s.grad);
        if (!(gg > 0.0) || !std::isfinite(gg)) return std::nullopt;
        const double step = s.value / gg;
        const Point2 q{p.u - step * s.grad[0], p.v - step * s.grad[1]};
        if (detail::dist(p, q) <= 1e-15 * (1.0 + std::hypot(p.u, p.v))) return q;
        p = q;
    }
    return std::nullopt;
}

inline Vec2 unit_tangent(const Vec2& grad) {
    const double n = norm(grad);
    return {-grad[1] / n, grad[0] / n};
}

class ContinuationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Points of {g = 0} at signed arc lengths k*h (k = -2..2) from p, with unit
/// tangents oriented like the tangent at p. p must already lie on the curve.
struct CurveStencil {
    std::array<Point2, 5> points{};
    std::array<Vec2, 5> tangents{};
    double h = 0;
};

inline CurveStencil curve_stencil(const GradientField& g, Point2 p, double h, double value_tol, int substeps = 8) {
    CurveStencil st;
    st.h = h;
    const FieldSample s0 = g(p);
    if (!(norm(s0.grad) > 0.0)) throw ContinuationFailure("level curve is not regular at the base point");
    const Vec2 t0 = unit_tangent(s0.grad);
    st.points[2] = p;
    st.tangents[2] = t0;
    for (int dir : {1, -1}) {
        Point2 q = p;
        Vec2 t = t0;
        const double step = dir * h / substeps;
        for (int k = 1; k <= 2; ++k) {
            for (int s = 0; s < substeps; ++s) {
                const Point2 pred{q.u + step * t[0], q.v + step * t[1]};
                const auto corr = snap_to_level(g, pred, value_tol);
                if (!corr || detail::dist(*corr, pred) > std::abs(step))
                    throw ContinuationFailure("continuation left the level curve");
                q = *corr;
                const FieldSample sq = g(q);
                if (!(norm(sq.grad) > 0.0)) throw ContinuationFailure("level curve degenerates along the stencil");
                Vec2 tn = unit_tangent(sq.grad);
                if (dot(tn, t) < 0) tn = -1.0 * tn;
                t = tn;
            }
            const auto idx = static_cast<std::size_t>(2 + dir * k);
            st.points[idx] = q;
            st.tangents[idx] = t;
        }
    }
    return st;
}

/// Five-point central difference from stencil samples.
inline double stencil_derivative(const std::array<double, 5>& f, double h) {
    return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
}

} // namespace ias
