#pragma once

#include "scalar.hpp"

#include <ostream>

namespace ias {

/// Two-component number re + e*im over a real scalar T, with e^2 = UnitSquare.
/// UnitSquare = +1 gives the para-complex (split-complex) ring, -1 the complex
/// field. There is deliberately no division: the para-complex ring has zero
/// divisors on the null cone re = +-im.
template <typename T, int UnitSquare>
struct PlaneNumber {
    static_assert(UnitSquare == 1 || UnitSquare == -1);
    static constexpr int unit_square = UnitSquare;
    using scalar_type = T;

    T re{};
    T im{};

    PlaneNumber() = default;
    PlaneNumber(T r) : re(std::move(r)), im(0) {} // NOLINT: implicit real embedding
    PlaneNumber(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static PlaneNumber unit() { return {T(0), T(1)}; }

    PlaneNumber conj() const { return {re, -im}; }

    /// z * conj(z) = re^2 - UnitSquare * im^2. Indefinite for para-complex numbers.
    T modulus() const { return re * re - T(UnitSquare) * im * im; }

    PlaneNumber& operator+=(const PlaneNumber& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    PlaneNumber& operator-=(const PlaneNumber& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    PlaneNumber& operator*=(const PlaneNumber& o) {
        T r = re * o.re + T(UnitSquare) * im * o.im;
        T i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend PlaneNumber operator+(PlaneNumber a, const PlaneNumber& b) { return a += b; }
    friend PlaneNumber operator-(PlaneNumber a, const PlaneNumber& b) { return a -= b; }
    friend PlaneNumber operator*(PlaneNumber a, const PlaneNumber& b) { return a *= b; }
    friend PlaneNumber operator-(const PlaneNumber& a) { return {-a.re, -a.im}; }
    friend PlaneNumber operator*(const T& s, const PlaneNumber& a) { return {s * a.re, s * a.im}; }
    friend PlaneNumber operator*(const PlaneNumber& a, const T& s) { return {a.re * s, a.im * s}; }

    friend bool operator==(const PlaneNumber& a, const PlaneNumber& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const PlaneNumber& z) {
        return os << '(' << z.re << (UnitSquare == 1 ? " + j*" : " + i*") << z.im << ')';
    }
};

template <typename T>
using ParaComplex = PlaneNumber<T, 1>;

template <typename T>
using Complex = PlaneNumber<T, -1>;

template <typename N>
struct is_plane_number : std::false_type {};
template <typename T, int S>
struct is_plane_number<PlaneNumber<T, S>> : std::true_type {};

template <typename To, typename T, int S>
PlaneNumber<To, S> number_cast(const PlaneNumber<T, S>& z) {
    return {scalar_cast<To>(z.re), scalar_cast<To>(z.im)};
}

} // namespace ias
