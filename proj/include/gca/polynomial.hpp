#pragma once

#include "gca/algebra.hpp"
#include "gca/scalar.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca {

// Dense polynomial over K; coeffs[i] is the coefficient of t^i, with no
// trailing zeros (the zero polynomial has an empty coefficient list).
template <class K>
struct Poly {
    std::vector<K> coeffs;

    static Poly zero() { return {}; }
    static Poly constant(K c) {
        Poly p;
        if (!is_zero(c)) p.coeffs = {std::move(c)};
        return p;
    }
    // t - r
    static Poly linear(const K& r) { return Poly{{-r, K(1)}}; }

    bool is_zero_poly() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && gca::is_zero(coeffs.back())) coeffs.pop_back();
    }

    const K& leading() const {
        if (coeffs.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
        return coeffs.back();
    }

    bool monic() const { return !coeffs.empty() && is_one(coeffs.back()); }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    AlgebraElement<K> eval(const AlgebraElement<K>& x) const {
        auto acc = x.algebra().zero_element();
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i] * x.algebra().unit_element();
        return acc;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        Poly out;
        out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
        out.trim();
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }

    std::string str(const char* var = "t") const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (gca::is_zero(coeffs[i])) continue;
            std::string c = scalar_str(coeffs[i]);
            bool composite = c.find_first_of("+-", 1) != std::string::npos;
            bool neg = !composite && c[0] == '-';
            std::string mag = neg ? c.substr(1) : c;
            if (composite) mag = "(" + c + ")";
            if (out.empty()) out = neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

// Quotient and remainder by a monic divisor.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(Poly<K> num, const Poly<K>& den) {
    if (!den.monic()) throw std::invalid_argument("divmod: divisor must be monic");
    Poly<K> q;
    if (num.degree() >= den.degree())
        q.coeffs.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, K(0));
    while (num.degree() >= den.degree()) {
        std::size_t shift = static_cast<std::size_t>(num.degree() - den.degree());
        K c = num.leading();
        q.coeffs[shift] = c;
        for (std::size_t i = 0; i < den.coeffs.size(); ++i)
            num.coeffs[shift + i] = num.coeffs[shift + i] - c * den.coeffs[i];
        num.trim();
    }
    q.trim();
    return {std::move(q), std::move(num)};
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero_poly()) {
        K lead = b.leading();
        for (auto& c : b.coeffs) c = c / lead; // make monic for divmod
        auto [q, r] = divmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero_poly()) {
        K lead = a.leading();
        for (auto& c : a.coeffs) c = c / lead;
    }
    return a;
}

// --- root search ------------------------------------------------------------
//
// Complete rational (resp. Gaussian-rational) root search for polynomials
// whose cleared-denominator coefficients stay within the enumeration caps;
// returns nullopt{} wrapped in RootSearch::overflow when the caps are hit so
// callers can distinguish "no root" from "could not decide".

namespace detail {

inline constexpr long long divisor_enum_cap = 1'000'000'000'000LL; // 10^12

inline std::optional<std::vector<BigInt>> divisors(const BigInt& v0) {
    BigInt v = v0 < 0 ? BigInt(-v0) : v0;
    if (v == 0) return std::vector<BigInt>{};
    if (v > divisor_enum_cap) return std::nullopt;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

template <class K>
struct RootSearch {
    std::optional<K> root;
    bool overflow = false; // enumeration caps exceeded; absence of root not certified
};

inline RootSearch<Rational> find_root(const Poly<Rational>& p) {
    if (p.degree() <= 0) return {std::nullopt, false};
    // clear denominators to an integer polynomial
    BigInt lcm = 1;
    for (const auto& c : p.coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<BigInt> a(p.coeffs.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = numerator(p.coeffs[i]) * (lcm / denominator(p.coeffs[i]));
    if (a[0] == 0) return {Rational(0), false};
    auto ps = detail::divisors(a[0]);
    auto qs = detail::divisors(a.back());
    if (!ps || !qs) return {std::nullopt, true};
    for (const auto& den : *qs)
        for (const auto& num : *ps)
            for (int sgn : {1, -1}) {
                Rational cand(sgn * num, den);
                if (gca::is_zero(p.eval(cand))) return {cand, false};
            }
    return {std::nullopt, false};
}

namespace detail {

// Gaussian integers dividing w, up to the norm enumeration cap.
inline std::optional<std::vector<std::pair<BigInt, BigInt>>> gaussian_divisors(const BigInt& wr, const BigInt& wi) {
    BigInt norm = wr * wr + wi * wi;
    if (norm == 0) return std::vector<std::pair<BigInt, BigInt>>{};
    if (norm > divisor_enum_cap) return std::nullopt;
    auto norm_divs = divisors(norm);
    if (!norm_divs) return std::nullopt;
    std::vector<std::pair<BigInt, BigInt>> out;
    for (const auto& m : *norm_divs) {
        // representations u^2 + v^2 = m
        for (BigInt u = 0; u * u <= m; ++u) {
            auto v = exact_sqrt(BigInt(m - u * u));
            if (!v) continue;
            // exact divisibility of w by d = u + vi: (w * conj(d)) / m integral
            auto push_if_divides = [&](const BigInt& du, const BigInt& dv) {
                if (du == 0 && dv == 0) return;
                BigInt re = wr * du + wi * dv;
                BigInt im = wi * du - wr * dv;
                if (re % m == 0 && im % m == 0) out.emplace_back(du, dv);
            };
            push_if_divides(u, *v);
            push_if_divides(u, -*v);
        }
    }
    return out;
}

} // namespace detail

inline RootSearch<GaussianRational> find_root(const Poly<GaussianRational>& p) {
    if (p.degree() <= 0) return {std::nullopt, false};
    BigInt lcm = 1;
    for (const auto& c : p.coeffs) {
        lcm = boost::multiprecision::lcm(lcm, denominator(c.re));
        lcm = boost::multiprecision::lcm(lcm, denominator(c.im));
    }
    std::vector<std::pair<BigInt, BigInt>> a(p.coeffs.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i].first = numerator(p.coeffs[i].re) * (lcm / denominator(p.coeffs[i].re));
        a[i].second = numerator(p.coeffs[i].im) * (lcm / denominator(p.coeffs[i].im));
    }
    if (a[0].first == 0 && a[0].second == 0) return {GaussianRational(0), false};
    auto ps = detail::gaussian_divisors(a[0].first, a[0].second);
    auto qs = detail::gaussian_divisors(a.back().first, a.back().second);
    if (!ps || !qs) return {std::nullopt, true};
    for (const auto& den : *qs) {
        GaussianRational d{Rational(den.first), Rational(den.second)};
        for (const auto& num : *ps) {
            GaussianRational n{Rational(num.first), Rational(num.second)};
            GaussianRational base = n / d;
            // unit multiples cover all associates of the candidate
            for (const GaussianRational& u :
                 {GaussianRational(1), GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()}) {
                GaussianRational cand = base * u;
                if (gca::is_zero(p.eval(cand))) return {cand, false};
            }
        }
    }
    return {std::nullopt, false};
}

// --- coprime splitting, degree <= 4 ------------------------------------------

enum class SplitKind { irreducible, split, unknown };

template <class K>
struct SplitResult {
    SplitKind kind = SplitKind::unknown;
    Poly<K> f, g; // monic coprime factors with f*g = input, when kind == split
};

namespace detail {

// Roots of a monic quadratic, ordered (-b - s)/2 first.
template <class K>
std::optional<std::pair<K, K>> quadratic_roots(const K& b, const K& c) {
    K disc = b * b - K(4) * c;
    auto s = exact_sqrt(disc);
    if (!s) return std::nullopt;
    K half(Rational(1, 2));
    return std::make_pair((-b - *s) * half, (-b + *s) * half);
}

template <class K>
SplitResult<K> split_with_root(const Poly<K>& m, const K& r) {
    Poly<K> f = Poly<K>::linear(r);
    auto [q, rem] = divmod(m, f);
    if (!rem.is_zero_poly()) throw std::logic_error("split_with_root: not a root");
    if (gca::is_zero(q.eval(r))) return {SplitKind::unknown, {}, {}}; // repeated root, not coprime
    return {SplitKind::split, std::move(f), std::move(q)};
}

} // namespace detail

// Attempts to write a monic squarefree polynomial of degree <= 4 as a product
// of two coprime monic factors, or to certify irreducibility.  Degree 2 uses
// the discriminant square test; degrees 3 and 4 use the complete root search,
// and degree 4 additionally solves for quadratic factor pairs through the
// resolvent cubic.  Returns unknown only when an enumeration cap was hit (or
// on a repeated root, which squarefree inputs never produce).
template <class K>
SplitResult<K> try_coprime_split(const Poly<K>& m) {
    if (!m.monic()) throw std::invalid_argument("try_coprime_split: polynomial must be monic");
    const long deg = m.degree();
    if (deg <= 1) return {SplitKind::irreducible, {}, {}};

    if (deg == 2) {
        auto roots = detail::quadratic_roots(m.coeffs[1], m.coeffs[0]);
        if (!roots) return {SplitKind::irreducible, {}, {}};
        if (roots->first == roots->second) return {SplitKind::unknown, {}, {}};
        return {SplitKind::split, Poly<K>::linear(roots->first), Poly<K>::linear(roots->second)};
    }

    if (deg > 4) return {SplitKind::unknown, {}, {}};

    auto rooted = find_root(m);
    if (rooted.root) return detail::split_with_root(m, *rooted.root);
    bool overflow = rooted.overflow;

    if (deg == 3) return overflow ? SplitResult<K>{SplitKind::unknown, {}, {}}
                                  : SplitResult<K>{SplitKind::irreducible, {}, {}};

    // Degree 4 with no root in K: look for (s^2+ps+q)(s^2-ps+s') over the
    // depressed form s = t + a3/4.  p^2 must be a root of the resolvent cubic
    // P^3 + 2B P^2 + (B^2-4D) P - C^2.
    K quarter_shift = m.coeffs[3] / K(4); // t = s - a3/4
    Poly<K> shift{{-quarter_shift, K(1)}};
    Poly<K> depressed = Poly<K>::constant(K(1));
    // m(s - a3/4) via Horner on shifted variable
    {
        Poly<K> acc;
        for (std::size_t i = m.coeffs.size(); i-- > 0;) {
            acc = acc * shift;
            acc.coeffs.resize(std::max<std::size_t>(acc.coeffs.size(), 1), K(0));
            acc.coeffs[0] = acc.coeffs[0] + m.coeffs[i];
            acc.trim();
        }
        depressed = std::move(acc);
    }
    const K B = depressed.coeffs.size() > 2 ? depressed.coeffs[2] : K(0);
    const K C = depressed.coeffs.size() > 1 ? depressed.coeffs[1] : K(0);
    const K D = !depressed.coeffs.empty() ? depressed.coeffs[0] : K(0);

    Poly<K> resolvent{{-(C * C), B * B - K(4) * D, K(2) * B, K(1)}};
    resolvent.trim();
    std::vector<K> res_roots;
    Poly<K> rem = resolvent;
    for (int iter = 0; iter < 3 && rem.degree() >= 1; ++iter) {
        auto rr = find_root(rem);
        if (rr.overflow) overflow = true;
        if (!rr.root) break;
        res_roots.push_back(*rr.root);
        auto [q, r0] = divmod(rem, Poly<K>::linear(*rr.root));
        rem = std::move(q);
    }
    auto undepress = [&](const K& lin, const K& cst) {
        // (s^2 + lin*s + cst) with s = t + a3/4
        Poly<K> s{{quarter_shift, K(1)}};
        Poly<K> out = s * s;
        Poly<K> l = Poly<K>::constant(lin) * s;
        out.coeffs.resize(3, K(0));
        for (std::size_t i = 0; i < l.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] + l.coeffs[i];
        out.coeffs[0] = out.coeffs[0] + cst;
        out.trim();
        return out;
    };
    for (const K& P : res_roots) {
        if (gca::is_zero(P)) {
            // p = 0 branch: t^4 + B t^2 + D = (s^2 - y1)(s^2 - y2)
            auto ys = detail::quadratic_roots(B, D);
            if (!ys || ys->first == ys->second) continue;
            Poly<K> f = undepress(K(0), -ys->first);
            Poly<K> g = undepress(K(0), -ys->second);
            if (poly_gcd(f, g).degree() == 0) return {SplitKind::split, std::move(f), std::move(g)};
            continue;
        }
        auto p = exact_sqrt(P);
        if (!p) continue;
        K half(Rational(1, 2));
        K q = (B + P - C / *p) * half;
        K s2 = (B + P + C / *p) * half;
        Poly<K> f = undepress(*p, q);
        Poly<K> g = undepress(-*p, s2);
        if (!(f * g == m)) continue; // defensive; construction should guarantee
        if (poly_gcd(f, g).degree() == 0) return {SplitKind::split, std::move(f), std::move(g)};
    }
    if (overflow) return {SplitKind::unknown, {}, {}};
    return {SplitKind::irreducible, {}, {}};
}

} // namespace gca
