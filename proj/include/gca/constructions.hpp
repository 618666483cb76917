#pragma once

#include "gca/algebra.hpp"
#include "gca/cocycle.hpp"
#include "gca/linalg.hpp"
#include "gca/scalar.hpp"
#include "gca/z2.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gca {

namespace detail {

inline constexpr unsigned twisted_dim_cap = 12;   // basis 2^n <= 4096
inline constexpr unsigned clifford_gen_cap = 10;  // basis 2^(p+q) <= 1024

// "eps" for the empty subset, else generator names concatenated ascending.
inline std::string subset_label(std::uint64_t mask, const char* gen) {
    if (mask == 0) return "eps";
    std::string s;
    while (mask) {
        unsigned b = static_cast<unsigned>(std::countr_zero(mask));
        s += gen;
        s += std::to_string(b + 1);
        mask &= mask - 1;
    }
    return s;
}

} // namespace detail

// Group algebra of (Z2)^n with product g *_F h = F(g,h) (g+h).  Basis element
// index equals its bit pattern; degrees are the group elements themselves.
template <class K>
GradedAlgebra<K> twisted_group_algebra(unsigned n, const SignFn& F) {
    if (n < 1 || n > detail::twisted_dim_cap)
        throw std::invalid_argument("twisted_group_algebra: dimension must be in [1, 12]");
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    labels.reserve(size);
    degrees.reserve(size);
    for (std::uint64_t g = 0; g < size; ++g) {
        labels.push_back(detail::subset_label(g, "e"));
        degrees.emplace_back(g, n);
    }
    auto rule = [n, F](std::size_t i, std::size_t j) -> Term<K> {
        GroupElement a(static_cast<std::uint64_t>(i), n), b(static_cast<std::uint64_t>(j), n);
        int s = F(a, b);
        if (s != 1 && s != -1)
            throw std::invalid_argument("twisted_group_algebra: sign function must return +-1");
        return {static_cast<std::size_t>(i ^ j), K(s)};
    };
    Vec<K> unit(size, K(0));
    unit[0] = K(1);
    return GradedAlgebra<K>(std::move(labels), std::move(degrees), std::move(rule), std::move(unit));
}

template <class K>
GradedAlgebra<K> twisted_group_algebra(unsigned n, const SignCocycle& F) {
    if (F.dim() != n) throw std::invalid_argument("twisted_group_algebra: cocycle dimension mismatch");
    return twisted_group_algebra<K>(
        n, [F](const GroupElement& a, const GroupElement& b) { return F.sign(a, b); });
}

// Subalgebra of the twisted group algebra on the even subgroup of
// (Z2)^(n_plus_1); closed since parity is additive.  Realizes Cl_{0,n}.
template <class K>
GradedAlgebra<K> even_twisted_subalgebra(unsigned n_plus_1, const SignCocycle& F) {
    if (n_plus_1 < 2 || n_plus_1 > detail::twisted_dim_cap)
        throw std::invalid_argument("even_twisted_subalgebra: dimension must be in [2, 12]");
    if (F.dim() != n_plus_1) throw std::invalid_argument("even_twisted_subalgebra: cocycle dimension mismatch");
    auto elems = enumerate_even(n_plus_1);
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    std::vector<std::size_t> index_of_mask(std::size_t{1} << n_plus_1, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        labels.push_back(detail::subset_label(elems[i].bits(), "e"));
        degrees.push_back(elems[i]);
        index_of_mask[elems[i].bits()] = i;
    }
    auto rule = [F, elems, index_of_mask](std::size_t i, std::size_t j) -> Term<K> {
        int s = F.sign(elems[i], elems[j]);
        return {index_of_mask[elems[i].bits() ^ elems[j].bits()], K(s)};
    };
    Vec<K> unit(elems.size(), K(0));
    unit[0] = K(1);
    return GradedAlgebra<K>(std::move(labels), std::move(degrees), std::move(rule), std::move(unit));
}

// Degrees of the n Clifford generators inside (Z2)^(n+1):
// bar(alpha_i) = e_i + e_{n+1}.
inline std::vector<GroupElement> clifford_degree_map(unsigned n) {
    if (n > detail::clifford_gen_cap)
        throw std::invalid_argument("clifford_degree_map: generator count capped at 10");
    std::vector<GroupElement> out;
    out.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        out.emplace_back((std::uint64_t{1} << i) | (std::uint64_t{1} << n), n + 1);
    return out;
}

namespace detail {

// Sign of alpha_S * alpha_T: one minus per left-to-right exchange, counted as
// inversions #{(s,t) in S x T : s > t}, times the squares resolved on S & T.
inline int clifford_sign(std::uint64_t s_mask, std::uint64_t t_mask, std::uint64_t neg_square_mask) {
    int inv = 0;
    std::uint64_t t = t_mask;
    while (t) {
        unsigned b = static_cast<unsigned>(std::countr_zero(t));
        inv += std::popcount(s_mask >> (b + 1));
        t &= t - 1;
    }
    inv += std::popcount(s_mask & t_mask & neg_square_mask);
    return (inv & 1) ? -1 : 1;
}

} // namespace detail

// Clifford algebra Cl_{p,q} on the monomial basis alpha_S indexed by subset
// masks, with the degree map extended additively from the generators.
template <class K>
GradedAlgebra<K> clifford(unsigned p, unsigned q) {
    const unsigned n = p + q;
    if (n > detail::clifford_gen_cap)
        throw std::invalid_argument("clifford: generator count p+q capped at 10");
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t neg_mask = ((std::uint64_t{1} << n) - 1) ^ ((std::uint64_t{1} << p) - 1);
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    labels.reserve(size);
    degrees.reserve(size);
    for (std::uint64_t s = 0; s < size; ++s) {
        labels.push_back(detail::subset_label(s, "a"));
        std::uint64_t par = static_cast<std::uint64_t>(std::popcount(s) & 1);
        degrees.emplace_back(s | (par << n), n + 1);
    }
    auto rule = [neg_mask](std::size_t i, std::size_t j) -> Term<K> {
        auto si = static_cast<std::uint64_t>(i), sj = static_cast<std::uint64_t>(j);
        return {static_cast<std::size_t>(si ^ sj), K(detail::clifford_sign(si, sj, neg_mask))};
    };
    Vec<K> unit(size, K(0));
    unit[0] = K(1);
    return GradedAlgebra<K>(std::move(labels), std::move(degrees), std::move(rule), std::move(unit));
}

// Complex Clifford algebra Cl_n; generators can be chosen with all squares
// +eps, so this is Cl_{n,0} over the Gaussian rationals.
inline GradedAlgebra<GaussianRational> clifford_complex(unsigned n) {
    return clifford<GaussianRational>(n, 0);
}

// The quaternions with the triple-degree assignment
// eps=(0,0,0), i=(0,1,1), j=(1,0,1), k=(1,1,0) and the Hamilton table.
inline GradedAlgebra<Rational> quaternions() {
    std::vector<std::string> labels{"eps", "i", "j", "k"};
    std::vector<GroupElement> degrees{
        GroupElement(0b000, 3), GroupElement(0b110, 3), GroupElement(0b101, 3), GroupElement(0b011, 3)};
    using A = GradedAlgebra<Rational>;
    std::vector<A::Entry> entries;
    auto put = [&entries](std::size_t i, std::size_t j, std::size_t k, int c) {
        entries.push_back({i, j, k, Rational(c)});
    };
    const std::size_t E = 0, I = 1, J = 2, KK = 3;
    for (std::size_t x = 0; x < 4; ++x) {
        put(E, x, x, 1);
        if (x != E) put(x, E, x, 1);
    }
    put(I, I, E, -1);
    put(J, J, E, -1);
    put(KK, KK, E, -1);
    put(I, J, KK, 1);
    put(J, I, KK, -1);
    put(J, KK, I, 1);
    put(KK, J, I, -1);
    put(KK, I, J, 1);
    put(I, KK, J, -1);
    Vec<Rational> unit{Rational(1), Rational(0), Rational(0), Rational(0)};
    return A(std::move(labels), std::move(degrees), std::move(entries), std::move(unit));
}

// Structure constants of M_m in a user-supplied full basis, computed by exact
// linear solves.  No degree map is attached.
template <class K>
GradedAlgebra<K> matrix_algebra(unsigned m, const std::vector<Mat<K>>& basis, std::vector<std::string> labels) {
    const std::size_t d = std::size_t{m} * m;
    if (d == 0 || d > 256) throw std::invalid_argument("matrix_algebra: size must give 1 <= m^2 <= 256");
    if (basis.size() != d) throw std::invalid_argument("matrix_algebra: a full basis needs m^2 elements");
    if (labels.size() != d) throw std::invalid_argument("matrix_algebra: label count mismatch");
    auto vectorize = [m](const Mat<K>& a) {
        if (a.size() != m) throw std::invalid_argument("matrix_algebra: matrix size mismatch");
        Vec<K> v;
        v.reserve(std::size_t{m} * m);
        for (const auto& row : a) {
            if (row.size() != m) throw std::invalid_argument("matrix_algebra: matrix size mismatch");
            for (const auto& c : row) v.push_back(c);
        }
        return v;
    };
    // columns of `cols` are the vectorized basis; invertibility == independence
    Mat<K> cols(d, Vec<K>(d, K(0)));
    for (std::size_t s = 0; s < d; ++s) {
        Vec<K> v = vectorize(basis[s]);
        for (std::size_t r = 0; r < d; ++r) cols[r][s] = v[r];
    }
    Mat<K> inv;
    try {
        inv = invert(cols);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("matrix_algebra: basis matrices are linearly dependent");
    }
    auto coords_of = [&inv, d](const Vec<K>& v) {
        Vec<K> out(d, K(0));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (!is_zero(inv[r][c]) && !is_zero(v[c])) out[r] = out[r] + inv[r][c] * v[c];
        return out;
    };
    using A = GradedAlgebra<K>;
    std::vector<typename A::Entry> entries;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> coords = coords_of(vectorize(mat_mul(basis[i], basis[j])));
            for (std::size_t k = 0; k < d; ++k)
                if (!is_zero(coords[k])) entries.push_back({i, j, k, coords[k]});
        }
    Vec<K> unit = coords_of(vectorize(identity_matrix<K>(m)));
    return A(std::move(labels), std::nullopt, std::move(entries), std::move(unit));
}

// --- built-in matrix bases for the grading experiments ----------------------

struct NamedMatrixBasis {
    unsigned m = 0;
    std::vector<Mat<Rational>> mats;
    std::vector<std::string> labels;
};

inline NamedMatrixBasis matrix_units_basis(unsigned m) {
    NamedMatrixBasis out;
    out.m = m;
    for (unsigned r = 0; r < m; ++r)
        for (unsigned c = 0; c < m; ++c) {
            Mat<Rational> e(m, Vec<Rational>(m, Rational(0)));
            e[r][c] = Rational(1);
            out.mats.push_back(std::move(e));
            out.labels.push_back("m" + std::to_string(r + 1) + std::to_string(c + 1));
        }
    return out;
}

namespace detail {

inline Mat<Rational> kron(const Mat<Rational>& a, const Mat<Rational>& b) {
    const std::size_t n = a.size(), m = b.size();
    Mat<Rational> out(n * m, Vec<Rational>(n * m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return out;
}

inline NamedMatrixBasis clifford_image_basis(unsigned n, std::vector<Mat<Rational>> gens) {
    NamedMatrixBasis out;
    out.m = static_cast<unsigned>(gens[0].size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Mat<Rational> acc = identity_matrix<Rational>(out.m);
        for (unsigned b = 0; b < n; ++b)
            if (mask & (std::uint64_t{1} << b)) acc = mat_mul(acc, gens[b]);
        out.mats.push_back(std::move(acc));
        out.labels.push_back(subset_label(mask, "a"));
    }
    return out;
}

} // namespace detail

// Images of the Cl_{2,0} monomial basis under alpha_1 -> X, alpha_2 -> Z.
inline NamedMatrixBasis clifford_image_basis_m2() {
    Mat<Rational> x{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    Mat<Rational> z{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
    return detail::clifford_image_basis(2, {x, z});
}

// Images of the Cl_{2,2} monomial basis inside M_4(Q), built from Kronecker
// products of X, Z and XZ (XZ squares to -1, keeping everything rational).
inline NamedMatrixBasis clifford_image_basis_m4() {
    Mat<Rational> x{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    Mat<Rational> z{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
    Mat<Rational> xz = mat_mul(x, z);
    Mat<Rational> id = identity_matrix<Rational>(2);
    return detail::clifford_image_basis(
        4, {detail::kron(x, id), detail::kron(z, id), detail::kron(xz, x), detail::kron(xz, z)});
}

// Clock/shift-flavoured monomial basis of M_3 over Q: S^a T^b with S the
// cyclic shift and T = diag(1,2,4).  A true clock matrix needs a cube root of
// unity, which Q and Q(i) lack; the diagonal scaling keeps the basis full.
inline NamedMatrixBasis clock_shift_basis_m3() {
    Mat<Rational> s(3, Vec<Rational>(3, Rational(0)));
    s[1][0] = s[2][1] = s[0][2] = Rational(1);
    Mat<Rational> t(3, Vec<Rational>(3, Rational(0)));
    t[0][0] = Rational(1);
    t[1][1] = Rational(2);
    t[2][2] = Rational(4);
    NamedMatrixBasis out;
    out.m = 3;
    Mat<Rational> sa = identity_matrix<Rational>(3);
    for (unsigned a = 0; a < 3; ++a) {
        Mat<Rational> cur = sa;
        for (unsigned b = 0; b < 3; ++b) {
            out.mats.push_back(cur);
            out.labels.push_back("s" + std::to_string(a) + "t" + std::to_string(b));
            cur = mat_mul(cur, t);
        }
        sa = mat_mul(sa, s);
    }
    return out;
}

// --- generator-map isomorphism check -----------------------------------------

struct IsoReport {
    bool ok = false;
    std::string reason;
    std::size_t i = 0, j = 0; // basis pair of the first mismatch, when relevant
};

// Extends the generator assignment multiplicatively over A's monomial basis
// and verifies that the extension is a unital isomorphism onto B: images must
// be a basis of B, transport every structure constant exactly, and send unit
// to unit.  The extension is derived by breadth-first products of generators,
// so A's basis must be monomial over the mapped generators.
template <class K>
IsoReport check_generator_iso(const GradedAlgebra<K>& a, const GradedAlgebra<K>& b,
                              const std::vector<std::pair<std::string, AlgebraElement<K>>>& gen_map) {
    std::vector<std::size_t> gen_idx;
    std::vector<AlgebraElement<K>> gen_img;
    for (const auto& [label, target] : gen_map) {
        std::size_t idx = a.index_of(label); // throws on unresolved label
        for (std::size_t seen : gen_idx)
            if (seen == idx) throw std::invalid_argument("check_generator_iso: duplicate generator '" + label + "'");
        if (&target.algebra() != &b)
            throw std::invalid_argument("check_generator_iso: target element not in the codomain algebra");
        if (b.graded() && !target.is_homogeneous())
            throw std::invalid_argument("check_generator_iso: target of '" + label + "' is not homogeneous");
        gen_idx.push_back(idx);
        gen_img.push_back(target);
    }

    const std::size_t dim = a.dim();
    std::vector<std::optional<AlgebraElement<K>>> phi(dim);
    std::deque<std::size_t> queue;
    auto assign = [&](std::size_t s, AlgebraElement<K> img) {
        phi[s] = std::move(img);
        queue.push_back(s);
    };
    // the unit is a monomial of length zero when it sits on a single basis line
    {
        std::vector<std::size_t> usup;
        for (std::size_t s = 0; s < dim; ++s)
            if (!is_zero(a.unit()[s])) usup.push_back(s);
        if (usup.size() == 1) {
            K inv_c = K(1) / a.unit()[usup[0]];
            assign(usup[0], inv_c * b.unit_element());
        }
    }
    for (std::size_t g = 0; g < gen_idx.size(); ++g)
        if (!phi[gen_idx[g]]) assign(gen_idx[g], gen_img[g]);
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < gen_idx.size(); ++g) {
            auto terms = a.product(s, gen_idx[g]);
            if (terms.size() != 1) continue;
            std::size_t k = terms[0].k;
            if (phi[k]) continue;
            K inv_c = K(1) / terms[0].c;
            assign(k, inv_c * (*phi[s] * gen_img[g]));
        }
    }
    for (std::size_t s = 0; s < dim; ++s)
        if (!phi[s])
            throw std::invalid_argument("check_generator_iso: generators do not generate basis element '" +
                                        a.label(s) + "'");

    if (b.dim() != dim) return {false, "not an isomorphism onto: dimensions differ", 0, 0};
    RowReducer<K> span(b.dim());
    for (std::size_t s = 0; s < dim; ++s) span.insert(phi[s]->coords());
    if (span.rank() != dim) return {false, "not an isomorphism onto: images are linearly dependent", 0, 0};

    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t t = 0; t < dim; ++t) {
            AlgebraElement<K> lhs = *phi[s] * *phi[t];
            AlgebraElement<K> rhs = b.zero_element();
            for (const auto& term : a.product(s, t)) rhs = rhs + term.c * *phi[term.k];
            if (lhs != rhs) return {false, "structure constants differ at basis pair", s, t};
        }

    AlgebraElement<K> unit_img = b.zero_element();
    for (std::size_t s = 0; s < dim; ++s)
        if (!is_zero(a.unit()[s])) unit_img = unit_img + a.unit()[s] * *phi[s];
    if (!(unit_img == b.unit_element())) return {false, "unit does not map to unit", 0, 0};

    return {true, "", 0, 0};
}

} // namespace gca
