#pragma once

// Scalar backends: exact rationals for coefficient-level work, doubles for
// sampling. Everything downstream is templated on one of the two.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>

namespace ias {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::abs(x); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static double to_double(const Rational& x) { return x.convert_to<double>(); }
    static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
};

template <typename T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <typename T>
double to_double(const T& x) {
    return scalar_traits<T>::to_double(x);
}

/// Converts between the two backends. double -> Rational is exact (binary value).
template <typename To, typename From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, double>) {
        return to_double(x);
    } else {
        static_assert(std::is_same_v<To, Rational>);
        if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
        return Rational(x);
    }
}

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        ++i;
    }
    if (i == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    BigInt out = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
        out = out * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-out) : out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses "p/q", "p", or a plain decimal such as "-0.125" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto s = detail::trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = detail::parse_bigint(detail::trim(s.substr(0, slash)));
        BigInt den = detail::parse_bigint(detail::trim(s.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string frac(s.substr(dot + 1));
        if (frac.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad decimal '" + std::string(s) + "'");
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        BigInt scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        bool neg = digits[0] == '-';
        BigInt whole = detail::parse_bigint(digits);
        BigInt fpart = frac.empty() ? BigInt(0) : detail::parse_bigint(frac);
        BigInt num = (neg ? BigInt(-whole) : whole) * scale + fpart;
        return Rational(neg ? BigInt(-num) : num, scale);
    }
    return Rational(detail::parse_bigint(s));
}

/// "p/q" with q > 1, or "p" for integers.
inline std::string format_rational(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Shortest round-trip decimal form.
inline std::string format_double(double x) {
    if (x == 0.0) return "0"; // folds -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
    return std::string(buf, end);
}

} // namespace ias
