#pragma once

#include "plane_number.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ias {

/// Degree cap for curve polynomials. Products used internally (the potential,
/// the area density) may exceed it; only user-facing curve data is checked.
inline constexpr int kMaxCurveDegree = 32;

class DegreeOverflow : public std::length_error {
public:
    using std::length_error::length_error;
};

namespace detail {

template <typename R>
bool is_zero(const R& x) {
    return x == R{};
}

template <typename R, typename T>
R scale(const R& x, const T& s) {
    if constexpr (is_plane_number<R>::value) {
        return R{x.re * s, x.im * s};
    } else {
        return x * s;
    }
}

template <typename R>
struct scalar_of {
    using type = R;
};
template <typename T, int S>
struct scalar_of<PlaneNumber<T, S>> {
    using type = T;
};

} // namespace detail

/// Dense univariate polynomial over R; coefficient of z^k at index k.
/// R is a real scalar or a PlaneNumber.
template <typename R>
class Poly {
public:
    using coeff_type = R;
    using scalar_type = typename detail::scalar_of<R>::type;

    Poly() = default;
    Poly(std::initializer_list<R> c) : c_(c) { trim(); }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(int k, R c = R(scalar_type(1))) {
        std::vector<R> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : R{};
    }

    /// Throws DegreeOverflow if the degree exceeds kMaxCurveDegree.
    const Poly& check_degree() const {
        if (degree() > kMaxCurveDegree)
            throw DegreeOverflow("polynomial degree " + std::to_string(degree()) + " exceeds cap " +
                                 std::to_string(kMaxCurveDegree));
        return *this;
    }

    /// Horner evaluation.
    template <typename X>
    X operator()(const X& z) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + X(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = detail::scale(c_[k], scalar_type(static_cast<long>(k)));
        return Poly(std::move(d));
    }

    /// Antiderivative vanishing at 0.
    Poly antiderivative() const {
        std::vector<R> a(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k)
            a[k + 1] = detail::scale(c_[k], scalar_type(1) / scalar_type(static_cast<long>(k + 1)));
        return Poly(std::move(a));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly{} - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const R& s, const Poly& p) {
        std::vector<R> out(p.c_);
        for (auto& c : out) c = s * c;
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    template <typename To>
    auto cast() const {
        if constexpr (is_plane_number<R>::value) {
            using Out = PlaneNumber<To, R::unit_square>;
            std::vector<Out> v;
            v.reserve(c_.size());
            for (const auto& c : c_) v.push_back(number_cast<To>(c));
            return Poly<Out>(std::move(v));
        } else {
            std::vector<To> v;
            v.reserve(c_.size());
            for (const auto& c : c_) v.push_back(scalar_cast<To>(c));
            return Poly<To>(std::move(v));
        }
    }

private:
    void trim() {
        while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <typename T>
using UniPoly = Poly<T>;
template <typename T>
using ParaPoly = Poly<ParaComplex<T>>;
template <typename T>
using ComplexPoly = Poly<Complex<T>>;

/// Dense bivariate polynomial sum c[i][j] u^i v^j.
template <typename T>
class BiPoly {
public:
    using scalar_type = T;

    BiPoly() = default;
    explicit BiPoly(T constant) {
        if (constant != T(0)) c_ = {{std::move(constant)}};
    }

    static BiPoly u() { return monomial(1, 0, T(1)); }
    static BiPoly v() { return monomial(0, 1, T(1)); }
    static BiPoly monomial(int i, int j, T c) {
        BiPoly p;
        p.set(i, j, std::move(c));
        return p;
    }

    /// Exclusive bound on the u-degree (number of rows).
    int rows() const { return static_cast<int>(c_.size()); }
    int cols(int i) const { return static_cast<int>(c_[static_cast<std::size_t>(i)].size()); }
    bool is_zero() const { return c_.empty(); }

    int total_degree() const {
        int d = -1;
        for (int i = 0; i < rows(); ++i)
            if (cols(i) > 0) d = std::max(d, i + cols(i) - 1);
        return d;
    }

    T coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows() || j >= cols(i)) return T(0);
        return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    void set(int i, int j, T value) {
        if (i >= rows()) c_.resize(static_cast<std::size_t>(i) + 1);
        auto& row = c_[static_cast<std::size_t>(i)];
        if (j >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(j) + 1, T(0));
        row[static_cast<std::size_t>(j)] = std::move(value);
        trim();
    }

    template <typename X>
    X operator()(const X& u, const X& v) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            X row{};
            for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * v + X(*jt);
            acc = acc * u + row;
        }
        return acc;
    }

    BiPoly du() const {
        BiPoly out;
        if (c_.size() <= 1) return out;
        out.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            out.c_[i - 1] = c_[i];
            for (auto& x : out.c_[i - 1]) x *= T(static_cast<long>(i));
        }
        out.trim();
        return out;
    }

    BiPoly dv() const {
        BiPoly out;
        out.c_.resize(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const auto& row = c_[i];
            if (row.size() <= 1) continue;
            auto& o = out.c_[i];
            o.resize(row.size() - 1);
            for (std::size_t j = 1; j < row.size(); ++j) o[j - 1] = row[j] * T(static_cast<long>(j));
        }
        out.trim();
        return out;
    }

    /// Antiderivative in u vanishing on u = 0.
    BiPoly integrate_u() const {
        BiPoly out;
        if (c_.empty()) return out;
        out.c_.resize(c_.size() + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            out.c_[i + 1] = c_[i];
            for (auto& x : out.c_[i + 1]) x /= T(static_cast<long>(i + 1));
        }
        out.trim();
        return out;
    }

    /// Antiderivative in v vanishing on v = 0.
    BiPoly integrate_v() const {
        BiPoly out;
        out.c_.resize(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const auto& row = c_[i];
            if (row.empty()) continue;
            auto& o = out.c_[i];
            o.assign(row.size() + 1, T(0));
            for (std::size_t j = 0; j < row.size(); ++j) o[j + 1] = row[j] / T(static_cast<long>(j + 1));
        }
        out.trim();
        return out;
    }

    /// Restriction to u = 0 as a polynomial in v (kept bivariate).
    BiPoly at_u_zero() const {
        BiPoly out;
        if (!c_.empty()) out.c_ = {c_[0]};
        out.trim();
        return out;
    }

    T max_abs_coeff() const {
        T m(0);
        for (const auto& row : c_)
            for (const auto& x : row) m = std::max(m, scalar_traits<T>::abs(x));
        return m;
    }

    BiPoly& operator+=(const BiPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            auto& row = c_[i];
            const auto& orow = o.c_[i];
            if (orow.size() > row.size()) row.resize(orow.size(), T(0));
            for (std::size_t j = 0; j < orow.size(); ++j) row[j] += orow[j];
        }
        trim();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) { return *this += (-o); }
    BiPoly& operator*=(const T& s) {
        for (auto& row : c_)
            for (auto& x : row) x *= s;
        trim();
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) {
        for (auto& row : a.c_)
            for (auto& x : row) x = -x;
        return a;
    }
    friend BiPoly operator*(BiPoly a, const T& s) { return a *= s; }
    friend BiPoly operator*(const T& s, BiPoly a) { return a *= s; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const auto& ar = a.c_[i];
            if (ar.empty()) continue;
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                const auto& br = b.c_[k];
                if (br.empty()) continue;
                auto& o = out.c_[i + k];
                if (o.size() < ar.size() + br.size() - 1) o.resize(ar.size() + br.size() - 1, T(0));
                for (std::size_t j = 0; j < ar.size(); ++j)
                    for (std::size_t l = 0; l < br.size(); ++l) o[j + l] += ar[j] * br[l];
            }
        }
        out.trim();
        return out;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    template <typename To>
    BiPoly<To> cast() const {
        BiPoly<To> out;
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(i); ++j) {
                const T& x = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (x != T(0)) out.set(i, j, scalar_cast<To>(x));
            }
        return out;
    }

    /// Visits nonzero terms as (i, j, coeff).
    template <typename Fn>
    void for_each_term(Fn&& fn) const {
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(i); ++j) {
                const T& x = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (x != T(0)) fn(i, j, x);
            }
    }

private:
    void trim() {
        for (auto& row : c_)
            while (!row.empty() && row.back() == T(0)) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
    }

    std::vector<std::vector<T>> c_;
};

/// Real and e-parts of p(u + e v) as bivariate polynomials.
template <typename T, int S>
std::pair<BiPoly<T>, BiPoly<T>> expand(const Poly<PlaneNumber<T, S>>& p) {
    BiPoly<T> re, im;
    BiPoly<T> a(T(1)), b; // (u + e v)^k = a + e b
    const BiPoly<T> u = BiPoly<T>::u();
    const BiPoly<T> v = BiPoly<T>::v();
    for (int k = 0; k <= p.degree(); ++k) {
        const auto c = p[k];
        // (c.re + e c.im)(a + e b) = (c.re a + S c.im b) + e (c.re b + c.im a)
        if (c.re != T(0)) {
            re += a * c.re;
            im += b * c.re;
        }
        if (c.im != T(0)) {
            re += b * (T(S) * c.im);
            im += a * c.im;
        }
        BiPoly<T> na = a * u + b * v * T(S);
        BiPoly<T> nb = a * v + b * u;
        a = std::move(na);
        b = std::move(nb);
    }
    return {re, im};
}

} // namespace ias
