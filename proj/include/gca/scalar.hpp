#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gca {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with positive denominator (maintained by
// the multiprecision backend). Models the real ground field at desk scale.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_one(const Rational& r) { return r == 1; }

// Exact element of Q(i): re + im*i. Models the complex ground field; every
// structure constant in scope is 0, +-1 or +-i, but arithmetic is closed.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}          // NOLINT(google-explicit-constructor)
    GaussianRational(long long v) : re(v) {}    // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational nrm = b.re * b.re + b.im * b.im;
        if (nrm.is_zero()) throw std::overflow_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / nrm, (a.im * b.re - a.re * b.im) / nrm};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussianRational& z) { return z.re.is_zero() && z.im.is_zero(); }
inline bool is_one(const GaussianRational& z) { return z.re == 1 && z.im.is_zero(); }

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool gaussian = false;
    static constexpr std::string_view tag{"rational"};
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool gaussian = true;
    static constexpr std::string_view tag{"gaussian"};
};

inline std::string scalar_str(const Rational& r) { return r.str(); }

// Text form of a Gaussian rational: "a", "bi" or "a+bi" with exact rational
// parts; a coefficient like 3/2 renders as "3/2i" (meaning (3/2)*i).
inline std::string scalar_str(const GaussianRational& z) {
    if (z.im.is_zero()) return z.re.str();
    std::string im;
    if (z.im == 1) im = "i";
    else if (z.im == -1) im = "-i";
    else im = z.im.str() + "i";
    if (z.re.is_zero()) return im;
    if (z.im > 0) return z.re.str() + "+" + im;
    return z.re.str() + im;
}

// Exact square root of a perfect-square big integer.
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

// Nonnegative square root in Q, if the argument is a square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_sqrt(numerator(r));
    if (!n) return std::nullopt;
    auto d = exact_sqrt(denominator(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

// Square root in Q(i), if one exists.  For z = x + iy with y != 0 a root
// u + iv needs u^2 - v^2 = x and 2uv = y, which forces u^2 + v^2 to be the
// rational square root of x^2 + y^2; both conditions are exact square tests.
inline std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    if (z.im.is_zero()) {
        if (auto s = exact_sqrt(z.re)) return GaussianRational(*s);
        if (auto s = exact_sqrt(Rational(-z.re))) return GaussianRational(Rational(0), *s);
        return std::nullopt;
    }
    auto r = exact_sqrt(Rational(z.re * z.re + z.im * z.im));
    if (!r) return std::nullopt;
    auto u = exact_sqrt(Rational((z.re + *r) / 2));
    if (!u || u->is_zero()) return std::nullopt;
    Rational v = z.im / (2 * *u);
    return GaussianRational(*u, v);
}

} // namespace gca
