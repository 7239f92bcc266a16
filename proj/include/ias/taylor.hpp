#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ias {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

struct Point2 {
    double u = 0;
    double v = 0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec2& a) { return std::hypot(a[0], a[1]); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

template <std::size_t N>
std::array<double, N> operator+(std::array<double, N> a, const std::array<double, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
    return a;
}
template <std::size_t N>
std::array<double, N> operator-(std::array<double, N> a, const std::array<double, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
    return a;
}
template <std::size_t N>
std::array<double, N> operator*(double s, std::array<double, N> a) {
    for (auto& x : a) x *= s;
    return a;
}

/// Second-order bivariate Taylor jet of a scalar: value, gradient, Hessian.
/// Arithmetic propagates exact derivatives (forward mode), so jets of
/// polynomial data are exact up to rounding.
struct Taylor2 {
    double val = 0, du = 0, dv = 0, duu = 0, duv = 0, dvv = 0;

    Taylor2() = default;
    Taylor2(double c) : val(c) {} // NOLINT: constants embed implicitly
    Taylor2(double value, double u, double v, double uu, double uv, double vv)
        : val(value), du(u), dv(v), duu(uu), duv(uv), dvv(vv) {}

    static Taylor2 var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
    static Taylor2 var_v(double v) { return {v, 0, 1, 0, 0, 0}; }

    Vec2 grad() const { return {du, dv}; }

    Taylor2& operator+=(const Taylor2& o) {
        val += o.val, du += o.du, dv += o.dv, duu += o.duu, duv += o.duv, dvv += o.dvv;
        return *this;
    }
    Taylor2& operator-=(const Taylor2& o) {
        val -= o.val, du -= o.du, dv -= o.dv, duu -= o.duu, duv -= o.duv, dvv -= o.dvv;
        return *this;
    }
    Taylor2& operator*=(const Taylor2& o) {
        Taylor2 r;
        r.val = val * o.val;
        r.du = du * o.val + val * o.du;
        r.dv = dv * o.val + val * o.dv;
        r.duu = duu * o.val + 2 * du * o.du + val * o.duu;
        r.duv = duv * o.val + du * o.dv + dv * o.du + val * o.duv;
        r.dvv = dvv * o.val + 2 * dv * o.dv + val * o.dvv;
        return *this = r;
    }

    friend Taylor2 operator+(Taylor2 a, const Taylor2& b) { return a += b; }
    friend Taylor2 operator-(Taylor2 a, const Taylor2& b) { return a -= b; }
    friend Taylor2 operator*(Taylor2 a, const Taylor2& b) { return a *= b; }
    friend Taylor2 operator-(const Taylor2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }

    /// Composition g(this) given g, g', g'' at the value.
    Taylor2 apply(double g0, double g1, double g2) const {
        return {g0,
                g1 * du,
                g1 * dv,
                g1 * duu + g2 * du * du,
                g1 * duv + g2 * du * dv,
                g1 * dvv + g2 * dv * dv};
    }
};

/// x^(-1/2); x must be positive.
inline Taylor2 rsqrt(const Taylor2& x) {
    const double r = 1.0 / std::sqrt(x.val);
    const double r3 = r * r * r;
    return x.apply(r, -0.5 * r3, 0.75 * r3 * r * r);
}

/// Value plus exact first and second partials of an R^N-valued map.
template <std::size_t N>
struct Jet2 {
    std::array<double, N> value{}, du{}, dv{}, duu{}, duv{}, dvv{};

    static Jet2 from(const std::array<Taylor2, N>& c) {
        Jet2 j;
        for (std::size_t i = 0; i < N; ++i) {
            j.value[i] = c[i].val;
            j.du[i] = c[i].du;
            j.dv[i] = c[i].dv;
            j.duu[i] = c[i].duu;
            j.duv[i] = c[i].duv;
            j.dvv[i] = c[i].dvv;
        }
        return j;
    }

    /// Directional derivative along w = (w_u, w_v).
    std::array<double, N> along(const Vec2& w) const { return w[0] * du + w[1] * dv; }
};

} // namespace ias
