#pragma once

#include "gca/algebra.hpp"
#include "gca/linalg.hpp"
#include "gca/polynomial.hpp"
#include "gca/scalar.hpp"
#include "gca/z2.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gca {

namespace detail {
inline constexpr std::size_t analysis_dim_cap = 256;

template <class K>
void require_dim_cap(const GradedAlgebra<K>& a, const char* who) {
    if (a.dim() > analysis_dim_cap)
        throw std::invalid_argument(std::string(who) + ": algebra dimension capped at 256");
}
} // namespace detail

// Linear subspace of an algebra held as a canonical reduced row echelon
// basis, so equality and membership tests are exact.
template <class K>
class Subspace {
public:
    Subspace(const GradedAlgebra<K>* alg, Mat<K> echelon_rows) : alg_(alg), rows_(std::move(echelon_rows)) {}

    static Subspace span(const GradedAlgebra<K>& alg, const std::vector<Vec<K>>& vectors) {
        RowReducer<K> red(alg.dim());
        for (const auto& v : vectors) red.insert(v);
        return Subspace(&alg, red.rows());
    }

    const GradedAlgebra<K>& algebra() const { return *alg_; }
    const Mat<K>& rows() const { return rows_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_whole() const { return rows_.size() == alg_->dim(); }
    bool is_proper_nonzero() const { return !is_zero() && !is_whole(); }

    bool contains(const Vec<K>& v) const {
        RowReducer<K> red(alg_->dim());
        for (const auto& r : rows_) red.insert(r);
        return red.contains(v);
    }
    bool contains(const AlgebraElement<K>& x) const { return contains(x.coords()); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.alg_ != b.alg_) throw std::invalid_argument("Subspace: parent algebra mismatch");
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    const GradedAlgebra<K>* alg_;
    Mat<K> rows_;
};

// Smallest subspace containing the generators and closed under left and right
// multiplication by every basis element.
template <class K>
Subspace<K> ideal_closure(const GradedAlgebra<K>& a, const std::vector<AlgebraElement<K>>& gens) {
    detail::require_dim_cap(a, "ideal_closure");
    const std::size_t d = a.dim();
    RowReducer<K> red(d);
    std::vector<Vec<K>> work;
    for (const auto& g : gens) {
        if (&g.algebra() != &a) throw std::invalid_argument("ideal_closure: generator from another algebra");
        if (red.insert(g.coords())) work.push_back(g.coords());
    }
    while (!work.empty()) {
        Vec<K> r = std::move(work.back());
        work.pop_back();
        for (std::size_t i = 0; i < d; ++i) {
            Vec<K> left(d, K(0)), right(d, K(0));
            for (std::size_t s = 0; s < d; ++s) {
                if (is_zero(r[s])) continue;
                for (const auto& t : a.product(s, i)) left[t.k] = left[t.k] + r[s] * t.c;
                for (const auto& t : a.product(i, s)) right[t.k] = right[t.k] + r[s] * t.c;
            }
            if (red.insert(left)) work.push_back(std::move(left));
            if (red.insert(right)) work.push_back(std::move(right));
        }
    }
    return Subspace<K>(&a, red.rows());
}

enum class GradedSimplicity { graded_simple, not_graded_simple, unsupported };

// Graded-simplicity via basis generators.  Supported only when every graded
// component is at most one-dimensional: then every nonzero homogeneous
// element is a scalar multiple of a basis element, so checking that each
// basis element generates the whole algebra as a two-sided ideal is complete.
template <class K>
GradedSimplicity is_graded_simple(const GradedAlgebra<K>& a) {
    detail::require_dim_cap(a, "is_graded_simple");
    if (!a.graded()) return GradedSimplicity::unsupported;
    std::map<std::uint64_t, int> seen;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (++seen[a.degree(i).bits()] > 1) return GradedSimplicity::unsupported;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!ideal_closure(a, {a.basis_element(i)}).is_whole()) return GradedSimplicity::not_graded_simple;
    return GradedSimplicity::graded_simple;
}

// Exact solution space of x b_i = b_i x for all i.
template <class K>
Subspace<K> center(const GradedAlgebra<K>& a) {
    detail::require_dim_cap(a, "center");
    const std::size_t d = a.dim();
    RowReducer<K> eqs(d);
    // equation rows: coefficient of x_s in coordinate k of x b_i - b_i x
    for (std::size_t i = 0; i < d; ++i) {
        Mat<K> block(d, Vec<K>(d, K(0))); // block[k][s]
        for (std::size_t s = 0; s < d; ++s) {
            for (const auto& t : a.product(s, i)) block[t.k][s] = block[t.k][s] + t.c;
            for (const auto& t : a.product(i, s)) block[t.k][s] = block[t.k][s] - t.c;
        }
        for (auto& row : block)
            if (!is_zero_vec(row)) eqs.insert(std::move(row));
    }
    return Subspace<K>(&a, kernel_basis(eqs.rows(), d));
}

// Radical in characteristic zero: the kernel of the trace form
// T(x,y) = trace(L_x L_y) of left-multiplication operators.
template <class K>
Subspace<K> radical(const GradedAlgebra<K>& a) {
    detail::require_dim_cap(a, "radical");
    const std::size_t d = a.dim();
    Mat<K> trace_form(d, Vec<K>(d, K(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            K acc(0);
            for (std::size_t t = 0; t < d; ++t)
                for (const auto& u : a.product(i, t))
                    for (const auto& v : a.product(j, u.k))
                        if (v.k == t) acc = acc + u.c * v.c;
            trace_form[i][j] = std::move(acc);
        }
    return Subspace<K>(&a, kernel_basis(trace_form, d));
}

// Least-degree monic polynomial with m(x) = 0, found through the first exact
// linear dependence among 1, x, x^2, ...
template <class K>
Poly<K> minimal_polynomial(const GradedAlgebra<K>& a, const AlgebraElement<K>& x) {
    detail::require_dim_cap(a, "minimal_polynomial");
    if (&x.algebra() != &a) throw std::invalid_argument("minimal_polynomial: element from another algebra");
    RowReducer<K> red(a.dim());
    std::vector<Vec<K>> powers;
    AlgebraElement<K> p = a.unit_element();
    for (std::size_t deg = 0; deg <= a.dim(); ++deg) {
        if (!red.insert(p.coords())) {
            // p = sum_i lambda_i powers[i]
            Mat<K> cols(a.dim(), Vec<K>(powers.size(), K(0)));
            for (std::size_t c = 0; c < powers.size(); ++c)
                for (std::size_t r = 0; r < a.dim(); ++r) cols[r][c] = powers[c][r];
            auto lam = solve(cols, p.coords());
            if (!lam) throw std::logic_error("minimal_polynomial: dependence vanished");
            Poly<K> m;
            m.coeffs.assign(deg + 1, K(0));
            for (std::size_t i = 0; i < deg; ++i) m.coeffs[i] = -(*lam)[i];
            m.coeffs[deg] = K(1);
            return m;
        }
        powers.push_back(p.coords());
        p = p * x;
    }
    throw std::logic_error("minimal_polynomial: no dependence within dimension bound");
}

// --- simplicity --------------------------------------------------------------

enum class SimplicityVerdict { simple, not_simple, indeterminate };

template <class K>
struct SimplicityReport {
    SimplicityVerdict verdict = SimplicityVerdict::indeterminate;
    std::optional<Subspace<K>> witness; // proper two-sided ideal, when not simple
    std::string detail;
};

namespace detail {

// Deterministic probe sequence over the center's echelon basis: single rows,
// then pairwise sums, then the full sum.
template <class K>
std::vector<Vec<K>> center_probes(const Subspace<K>& z) {
    std::vector<Vec<K>> probes(z.rows().begin(), z.rows().end());
    const auto& rows = z.rows();
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            Vec<K> v = rows[a];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + rows[b][i];
            probes.push_back(std::move(v));
        }
    if (rows.size() > 2) {
        Vec<K> all(rows[0].size(), K(0));
        for (const auto& r : rows)
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = all[i] + r[i];
        probes.push_back(std::move(all));
    }
    return probes;
}

} // namespace detail

// Decision procedure: (a) nonzero radical is a proper ideal; (b) a semisimple
// algebra with one-dimensional center is simple; (c) otherwise probe center
// elements: a coprime factor split m = f g of a minimal polynomial makes
// f(z) generate a proper ideal, while an irreducible minimal polynomial of
// degree dim Z proves the center is a field, hence the algebra simple.
template <class K>
SimplicityReport<K> is_simple(const GradedAlgebra<K>& a) {
    detail::require_dim_cap(a, "is_simple");
    Subspace<K> rad = radical(a);
    if (!rad.is_zero()) {
        // the unit is never nilpotent, so a nonzero radical is a proper ideal
        return {SimplicityVerdict::not_simple, std::move(rad), "nonzero radical"};
    }
    Subspace<K> z = center(a);
    if (z.dim() == 1)
        return {SimplicityVerdict::simple, std::nullopt, "semisimple with one-dimensional center"};
    for (const auto& probe : detail::center_probes(z)) {
        AlgebraElement<K> zel = a.element(probe);
        Poly<K> m = minimal_polynomial(a, zel);
        auto split = try_coprime_split(m);
        if (split.kind == SplitKind::split) {
            Subspace<K> w = ideal_closure(a, {split.f.eval(zel)});
            if (w.is_proper_nonzero())
                return {SimplicityVerdict::not_simple, std::move(w),
                        "minimal polynomial " + m.str() + " splits as (" + split.f.str() + ")(" +
                            split.g.str() + ")"};
            continue;
        }
        if (split.kind == SplitKind::irreducible && static_cast<std::size_t>(m.degree()) == z.dim())
            return {SimplicityVerdict::simple, std::nullopt,
                    "center is a field with minimal polynomial " + m.str()};
    }
    return {SimplicityVerdict::indeterminate, std::nullopt, "center field test undecided"};
}

// --- bounded degree-map search ------------------------------------------------

enum class GradingSearchOutcome { found, basis_obstruction, none_within_bound, bound_exhausted };

struct GradingSearchResult {
    GradingSearchOutcome outcome = GradingSearchOutcome::none_within_bound;
    unsigned m = 0;                              // grading dimension, when found
    std::vector<GroupElement> degrees;           // one per basis element, when found
    std::size_t obstruction_i = 0, obstruction_j = 0; // witness pair, on basis obstruction
};

inline constexpr std::size_t grading_search_default_budget = 4u << 20;

namespace detail {

struct SignConstraint {
    bool constrained = false;
    int exponent = 0; // <deg i, deg j> mod 2 when constrained
};

// Returns the sign exponent relating b_i b_j and b_j b_i, no constraint when
// both products vanish, or nullopt when the pair does not sign-commute.
template <class K>
std::optional<SignConstraint> pair_sign(const GradedAlgebra<K>& a, std::size_t i, std::size_t j) {
    auto ij = a.product(i, j);
    auto ji = a.product(j, i);
    if (ij.empty() && ji.empty()) return SignConstraint{false, 0};
    if (ij.size() != ji.size()) return std::nullopt;
    int sign = 0;
    for (std::size_t t = 0; t < ij.size(); ++t) {
        if (ij[t].k != ji[t].k) return std::nullopt;
        int s;
        if (ij[t].c == ji[t].c) s = 1;
        else if (ij[t].c == -ji[t].c) s = -1;
        else return std::nullopt;
        if (t == 0) sign = s;
        else if (s != sign) return std::nullopt;
    }
    return SignConstraint{true, sign == -1 ? 1 : 0};
}

class GradingSearcher {
public:
    GradingSearcher(std::size_t dim, unsigned m, std::size_t budget,
                    const std::vector<std::array<std::size_t, 3>>& additive,
                    const std::vector<std::vector<SignConstraint>>& signs,
                    std::optional<std::size_t> pinned_unit)
        : dim_(dim), m_(m), budget_(budget), additive_(additive), signs_(signs) {
        assigned_.assign(dim, std::nullopt);
        if (pinned_unit && !set_degree(*pinned_unit, 0)) feasible_ = false;
    }

    bool feasible() const { return feasible_; }
    bool exhausted() const { return exhausted_; }
    const std::vector<std::optional<std::uint64_t>>& assignment() const { return assigned_; }

    bool run() { return feasible_ && dfs(); }

private:
    bool check_sign(std::size_t i, std::size_t j, std::uint64_t di, std::uint64_t dj) const {
        const SignConstraint& c = signs_[i][j];
        if (!c.constrained) return true;
        return (std::popcount(di & dj) & 1) == c.exponent;
    }

    // Assigns deg(idx) = v, then derives every forced consequence through the
    // additive constraints; false on any conflict.
    bool set_degree(std::size_t idx, std::uint64_t v) {
        std::vector<std::pair<std::size_t, std::uint64_t>> stack{{idx, v}};
        while (!stack.empty()) {
            auto [s, val] = stack.back();
            stack.pop_back();
            if (assigned_[s]) {
                if (*assigned_[s] != val) return false;
                continue;
            }
            for (std::size_t t = 0; t < dim_; ++t)
                if (assigned_[t] && !check_sign(s, t, val, *assigned_[t])) return false;
            if (!check_sign(s, s, val, val)) return false;
            assigned_[s] = val;
            trail_.push_back(s);
            for (const auto& [i, j, k] : additive_) {
                const auto &di = assigned_[i], &dj = assigned_[j], &dk = assigned_[k];
                int known = int(di.has_value()) + int(dj.has_value()) + int(dk.has_value());
                if (known < 2) continue;
                if (di && dj && dk) {
                    if ((*di ^ *dj) != *dk) return false;
                } else if (di && dj) {
                    stack.emplace_back(k, *di ^ *dj);
                } else if (di && dk) {
                    stack.emplace_back(j, *di ^ *dk);
                } else if (dj && dk) {
                    stack.emplace_back(i, *dj ^ *dk);
                }
            }
        }
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail_.size() > mark) {
            assigned_[trail_.back()] = std::nullopt;
            trail_.pop_back();
        }
    }

    bool dfs() {
        std::size_t next = dim_;
        for (std::size_t s = 0; s < dim_; ++s)
            if (!assigned_[s]) {
                next = s;
                break;
            }
        if (next == dim_) return true;
        const std::uint64_t limit = std::uint64_t{1} << m_;
        for (std::uint64_t v = 0; v < limit; ++v) {
            if (budget_ == 0) {
                exhausted_ = true;
                return false;
            }
            --budget_;
            std::size_t mark = trail_.size();
            if (set_degree(next, v)) {
                if (dfs()) return true;
                if (exhausted_) return false;
            }
            rewind(mark);
        }
        return false;
    }

    std::size_t dim_;
    unsigned m_;
    std::size_t budget_;
    const std::vector<std::array<std::size_t, 3>>& additive_;
    const std::vector<std::vector<SignConstraint>>& signs_;
    std::vector<std::optional<std::uint64_t>> assigned_;
    std::vector<std::size_t> trail_;
    bool feasible_ = true;
    bool exhausted_ = false;
};

} // namespace detail

// Bounded search for a degree map into (Z2)^m, m <= max_n, making the algebra
// graded commutative on its given basis.  The basis must sign-commute pairwise
// (otherwise no degree map can exist for this basis); degrees are pruned by
// additivity over nonzero structure constants and by the commutation signs,
// the unit is pinned to degree zero when it is a basis element, and the first
// satisfying assignment in lexicographic order is returned.
template <class K>
GradingSearchResult grading_search(const GradedAlgebra<K>& a, unsigned max_n,
                                   std::size_t budget = grading_search_default_budget) {
    detail::require_dim_cap(a, "grading_search");
    if (max_n < 1 || max_n > GroupElement::max_dim)
        throw std::invalid_argument("grading_search: max_n must be in [1, 62]");
    const std::size_t d = a.dim();

    std::vector<std::vector<detail::SignConstraint>> signs(d, std::vector<detail::SignConstraint>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            auto c = detail::pair_sign(a, i, j);
            if (!c) {
                GradingSearchResult r;
                r.outcome = GradingSearchOutcome::basis_obstruction;
                r.obstruction_i = i;
                r.obstruction_j = j;
                return r;
            }
            signs[i][j] = signs[j][i] = *c;
        }

    std::vector<std::array<std::size_t, 3>> additive;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : a.product(i, j)) additive.push_back({i, j, t.k});

    std::optional<std::size_t> pinned;
    {
        std::vector<std::size_t> usup;
        for (std::size_t s = 0; s < d; ++s)
            if (!is_zero(a.unit()[s])) usup.push_back(s);
        if (usup.size() == 1) pinned = usup[0];
    }

    for (unsigned m = 1; m <= max_n; ++m) {
        detail::GradingSearcher searcher(d, m, budget, additive, signs, pinned);
        if (searcher.run()) {
            GradingSearchResult r;
            r.outcome = GradingSearchOutcome::found;
            r.m = m;
            for (const auto& v : searcher.assignment()) r.degrees.emplace_back(*v, m);
            return r;
        }
        if (searcher.exhausted()) {
            GradingSearchResult r;
            r.outcome = GradingSearchOutcome::bound_exhausted;
            return r;
        }
    }
    return GradingSearchResult{GradingSearchOutcome::none_within_bound, 0, {}, 0, 0};
}

// Copy of an algebra with the given degree map attached; used to re-verify
// search results through the independent checkers.
template <class K>
GradedAlgebra<K> with_degrees(const GradedAlgebra<K>& a, std::vector<GroupElement> degrees) {
    std::vector<typename GradedAlgebra<K>::Entry> entries;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& t : a.product(i, j)) entries.push_back({i, j, t.k, t.c});
    return GradedAlgebra<K>(a.labels(), std::move(degrees), std::move(entries), a.unit());
}

} // namespace gca
