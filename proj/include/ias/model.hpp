#pragma once

#include "surface.hpp"
#include "taylor.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ias {

/// Polynomial data with its first and second partials precomputed, so a
/// Taylor2 jet costs six evaluations.
class PolyJet {
public:
    PolyJet() = default;
    explicit PolyJet(const BiPoly<double>& p)
        : p_(p), u_(p.du()), v_(p.dv()), uu_(u_.du()), uv_(u_.dv()), vv_(v_.dv()) {}

    double value(Point2 q) const { return p_(q.u, q.v); }
    Taylor2 operator()(Point2 q) const {
        return {p_(q.u, q.v), u_(q.u, q.v), v_(q.u, q.v), uu_(q.u, q.v), uv_(q.u, q.v), vv_(q.u, q.v)};
    }
    const BiPoly<double>& poly() const { return p_; }

private:
    BiPoly<double> p_, u_, v_, uu_, uv_, vv_;
};

/// Rows of d(psi) whose orthogonal complements are candidate null vectors.
struct KernelRows {
    std::array<Vec2, 3> rows{};
    int count = 0;
};

/// Float-mode evaluator for a polynomial frontal psi with polynomial normal
/// field N (not necessarily unit). Generated improper affine spheres use
/// psi = (x1, x2, phi) and N = conormal (n1, n2, 1); normal forms supply
/// their own N.
class PolySurface {
public:
    /// Surface generated from a curve pair.
    template <typename T>
    static PolySurface generated(const SurfaceComponents<T>& exact) {
        const SurfaceComponents<double> s = exact.template cast<double>();
        PolySurface m;
        m.psi_ = {PolyJet(s.x1), PolyJet(s.x2), PolyJet(s.phi)};
        m.normal_ = {PolyJet(s.n1), PolyJet(s.n2), PolyJet(BiPoly<double>(1.0))};
        m.density_ = PolyJet(s.density);
        m.kernel_rows_ = 2;
        m.signature_ = s.signature;
        m.dF_ = {PolyJet(s.f1.du()), PolyJet(s.f2.du())};
        m.dG_ = {PolyJet(s.g1.du()), PolyJet(s.g2.du())};
        m.closed_ = s.closed;
        return m;
    }

    template <typename Curve>
    static PolySurface from_curve(const Curve& c) {
        return generated(surface_components(c));
    }

    /// Arbitrary polynomial frontal; the density is det(psi_u, psi_v, N).
    static PolySurface frontal(const std::array<BiPoly<double>, 3>& psi, const std::array<BiPoly<double>, 3>& normal) {
        PolySurface m;
        for (int i = 0; i < 3; ++i) {
            m.psi_[static_cast<std::size_t>(i)] = PolyJet(psi[static_cast<std::size_t>(i)]);
            m.normal_[static_cast<std::size_t>(i)] = PolyJet(normal[static_cast<std::size_t>(i)]);
        }
        BiPoly<double> det;
        for (int i = 0; i < 3; ++i) {
            const auto& a = psi[static_cast<std::size_t>((i + 1) % 3)];
            const auto& b = psi[static_cast<std::size_t>((i + 2) % 3)];
            det += (a.du() * b.dv() - a.dv() * b.du()) * normal[static_cast<std::size_t>(i)];
        }
        m.density_ = PolyJet(det);
        m.kernel_rows_ = 3;
        return m;
    }

    std::optional<Signature> signature() const { return signature_; }
    bool closed() const { return closed_; }

    Jet2<3> position_jet(Point2 p) const { return Jet2<3>::from({psi_[0](p), psi_[1](p), psi_[2](p)}); }
    Vec3 position(Point2 p) const { return {psi_[0].value(p), psi_[1].value(p), psi_[2].value(p)}; }

    /// Jet of the raw normal field; for generated surfaces this is the conormal (n1, n2, 1).
    Jet2<3> normal_jet(Point2 p) const { return Jet2<3>::from({normal_[0](p), normal_[1](p), normal_[2](p)}); }
    Vec3 normal(Point2 p) const { return {normal_[0].value(p), normal_[1].value(p), normal_[2].value(p)}; }

    /// N / |N| with exact first and second partials (quotient rule via jets).
    Jet2<3> unit_normal_jet(Point2 p) const {
        const std::array<Taylor2, 3> n{normal_[0](p), normal_[1](p), normal_[2](p)};
        const Taylor2 s = rsqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        return Jet2<3>::from({n[0] * s, n[1] * s, n[2] * s});
    }

    Vec3 unit_normal(Point2 p) const {
        const Vec3 n = normal(p);
        return (1.0 / norm(n)) * n;
    }

    /// Signed area density (up to a positive factor) with gradient and Hessian.
    Taylor2 density(Point2 p) const { return density_(p); }
    double density_value(Point2 p) const { return density_.value(p); }
    const BiPoly<double>& density_poly() const { return density_.poly(); }

    KernelRows kernel_rows(Point2 p) const {
        const Jet2<3> j = position_jet(p);
        KernelRows k;
        k.count = kernel_rows_;
        for (int i = 0; i < kernel_rows_; ++i)
            k.rows[static_cast<std::size_t>(i)] = {j.du[static_cast<std::size_t>(i)], j.dv[static_cast<std::size_t>(i)]};
        return k;
    }

    /// (f1_u, f2_u, g1_u, g2_u); generated surfaces only.
    std::optional<std::array<double, 4>> curve_derivatives(Point2 p) const {
        if (!signature_) return std::nullopt;
        return std::array<double, 4>{dF_[0].value(p), dF_[1].value(p), dG_[0].value(p), dG_[1].value(p)};
    }

private:
    std::array<PolyJet, 3> psi_;
    std::array<PolyJet, 3> normal_;
    PolyJet density_;
    int kernel_rows_ = 3;
    std::optional<Signature> signature_;
    std::array<PolyJet, 2> dF_, dG_;
    bool closed_ = true;
};

/// One node of a sampled surface.
struct SurfaceSample {
    Vec3 position{};
    Vec3 conormal{};
    Vec3 unit_normal{};
    Point2 domain_point{};
};

inline SurfaceSample sample_at(const PolySurface& m, Point2 p) {
    return {m.position(p), m.normal(p), m.unit_normal(p), p};
}

/// Indefinite surface point for a para-holomorphic curve pair.
template <typename T>
SurfaceSample synth_indefinite(const ParaCurve<T>& c, Point2 p) {
    return sample_at(PolySurface::from_curve(c), p);
}

/// Locally strongly convex surface point for a holomorphic curve pair.
template <typename T>
SurfaceSample synth_lsc(const HoloCurve<T>& c, Point2 p) {
    return sample_at(PolySurface::from_curve(c), p);
}

enum class JetKind { Position, UnitNormal, Conormal };

inline Jet2<3> jet(const PolySurface& m, Point2 p, JetKind which) {
    switch (which) {
    case JetKind::Position: return m.position_jet(p);
    case JetKind::UnitNormal: return m.unit_normal_jet(p);
    case JetKind::Conormal: return m.normal_jet(p);
    }
    return {};
}

/// Row-major samples (index j * nu + i, u varies fastest) with the density at each node.
struct SurfaceGrid {
    Domain domain;
    int nu = 0, nv = 0;
    std::vector<SurfaceSample> samples;
    std::vector<double> density;

    const SurfaceSample& at(int i, int j) const { return samples[static_cast<std::size_t>(j * nu + i)]; }
};

inline double grid_coord(double a, double b, int i, int n) {
    if (i == n - 1) return b;
    return a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

inline SurfaceGrid sample_grid(const PolySurface& m, const Domain& d, int nu, int nv) {
    d.validate();
    if (nu < 2 || nv < 2) throw InvalidDomain("grid resolution must be at least 2x2");
    SurfaceGrid g{d, nu, nv, {}, {}};
    g.samples.reserve(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv));
    g.density.reserve(g.samples.capacity());
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            const Point2 p{grid_coord(d.u0, d.u1, i, nu), grid_coord(d.v0, d.v1, j, nv)};
            g.samples.push_back(sample_at(m, p));
            g.density.push_back(m.density_value(p));
        }
    return g;
}

} // namespace ias
