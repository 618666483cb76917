#pragma once

#include "gca/linalg.hpp"
#include "gca/scalar.hpp"
#include "gca/z2.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace gca {

template <class K>
struct Term {
    std::size_t k;
    K c;
};

template <class K>
class AlgebraElement;

// Finite-dimensional algebra with labeled basis, exact structure constants
// b_i b_j = sum_k c_ijk b_k, a distinguished unit, and an optional degree map
// into (Z2)^n.  Grading compatibility is a checkable property, not a
// constructor invariant; the unit law is enforced at construction.
//
// Products are held either as an explicit sparse table or, for the group
// algebra family where every product is sign * (single basis element), as a
// one-term rule evaluated on demand.
template <class K>
class GradedAlgebra {
public:
    struct Entry {
        std::size_t i, j, k;
        K c;
    };
    using MonomialRule = std::function<Term<K>(std::size_t, std::size_t)>;

    GradedAlgebra(std::vector<std::string> labels,
                  std::optional<std::vector<GroupElement>> degrees,
                  std::vector<Entry> entries,
                  Vec<K> unit)
        : labels_(std::move(labels)), degrees_(std::move(degrees)), unit_(std::move(unit)) {
        validate_shape();
        table_.assign(dim() * dim(), {});
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
        for (auto& e : entries) {
            if (e.i >= dim() || e.j >= dim() || e.k >= dim())
                throw std::invalid_argument("GradedAlgebra: structure index out of range");
            if (is_zero(e.c))
                throw std::invalid_argument("GradedAlgebra: zero structure constant");
            if (!seen.insert({e.i, e.j, e.k}).second)
                throw std::invalid_argument("GradedAlgebra: duplicate structure entry");
            table_[e.i * dim() + e.j].push_back({e.k, std::move(e.c)});
        }
        for (auto& terms : table_)
            std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) { return a.k < b.k; });
        validate_unit();
    }

    GradedAlgebra(std::vector<std::string> labels,
                  std::optional<std::vector<GroupElement>> degrees,
                  MonomialRule rule,
                  Vec<K> unit)
        : labels_(std::move(labels)), degrees_(std::move(degrees)), rule_(std::move(rule)), unit_(std::move(unit)) {
        validate_shape();
        validate_unit();
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::size_t index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw std::invalid_argument("GradedAlgebra: unknown basis label '" + std::string(label) + "'");
    }

    bool graded() const { return degrees_.has_value(); }
    unsigned grading_dim() const {
        require_graded();
        return (*degrees_)[0].dim();
    }
    const GroupElement& degree(std::size_t i) const {
        require_graded();
        return (*degrees_).at(i);
    }
    const std::vector<GroupElement>& degrees() const {
        require_graded();
        return *degrees_;
    }

    const Vec<K>& unit() const { return unit_; }

    // Expansion of b_i b_j, sorted by target index, zero scalars omitted.
    std::vector<Term<K>> product(std::size_t i, std::size_t j) const {
        if (i >= dim() || j >= dim()) throw std::invalid_argument("GradedAlgebra: basis index out of range");
        if (rule_) {
            Term<K> t = (*rule_)(i, j);
            if (is_zero(t.c)) return {};
            return {std::move(t)};
        }
        return table_[i * dim() + j];
    }

    AlgebraElement<K> element(Vec<K> coords) const;
    AlgebraElement<K> basis_element(std::size_t i) const;
    AlgebraElement<K> zero_element() const;
    AlgebraElement<K> unit_element() const;

    // Same labels, degrees, unit and structure constants, entry by entry.
    bool same_structure(const GradedAlgebra& other) const {
        if (labels_ != other.labels_ || unit_ != other.unit_) return false;
        if (degrees_.has_value() != other.degrees_.has_value()) return false;
        if (degrees_ && *degrees_ != *other.degrees_) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                auto a = product(i, j);
                auto b = other.product(i, j);
                if (a.size() != b.size()) return false;
                for (std::size_t t = 0; t < a.size(); ++t)
                    if (a[t].k != b[t].k || !(a[t].c == b[t].c)) return false;
            }
        return true;
    }

private:
    void require_graded() const {
        if (!degrees_) throw std::invalid_argument("GradedAlgebra: no degree map attached");
    }

    void validate_shape() const {
        if (labels_.empty()) throw std::invalid_argument("GradedAlgebra: empty basis");
        std::set<std::string> uniq(labels_.begin(), labels_.end());
        if (uniq.size() != labels_.size())
            throw std::invalid_argument("GradedAlgebra: duplicate basis labels");
        if (degrees_) {
            if (degrees_->size() != labels_.size())
                throw std::invalid_argument("GradedAlgebra: degree map size mismatch");
            for (const auto& d : *degrees_)
                if (d.dim() != (*degrees_)[0].dim())
                    throw std::invalid_argument("GradedAlgebra: mixed degree dimensions");
        }
        if (unit_.size() != labels_.size())
            throw std::invalid_argument("GradedAlgebra: unit coordinate length mismatch");
    }

    void validate_unit() const {
        for (std::size_t i = 0; i < dim(); ++i) {
            Vec<K> left(dim(), K(0)), right(dim(), K(0));
            for (std::size_t s = 0; s < dim(); ++s) {
                if (is_zero(unit_[s])) continue;
                for (const auto& t : product(s, i)) left[t.k] = left[t.k] + unit_[s] * t.c;
                for (const auto& t : product(i, s)) right[t.k] = right[t.k] + unit_[s] * t.c;
            }
            for (std::size_t k = 0; k < dim(); ++k) {
                K want = (k == i) ? K(1) : K(0);
                if (!(left[k] == want) || !(right[k] == want))
                    throw std::invalid_argument("GradedAlgebra: unit law fails at basis index " + std::to_string(i));
            }
        }
    }

    std::vector<std::string> labels_;
    std::optional<std::vector<GroupElement>> degrees_;
    std::vector<std::vector<Term<K>>> table_;
    std::optional<MonomialRule> rule_;
    Vec<K> unit_;
};

// Exact coordinate vector over an algebra's basis.  Elements are value types
// tied to the algebra instance they were created from.
template <class K>
class AlgebraElement {
public:
    AlgebraElement(const GradedAlgebra<K>* alg, Vec<K> coords) : alg_(alg), coords_(std::move(coords)) {
        if (coords_.size() != alg_->dim())
            throw std::invalid_argument("AlgebraElement: coordinate length mismatch");
    }

    const GradedAlgebra<K>& algebra() const { return *alg_; }
    const Vec<K>& coords() const { return coords_; }
    const K& operator[](std::size_t i) const { return coords_.at(i); }

    bool is_zero() const { return is_zero_vec(coords_); }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (!gca::is_zero(coords_[i])) s.push_back(i);
        return s;
    }

    // Homogeneous means supported in a single degree; the zero element is
    // homogeneous of every degree.
    bool is_homogeneous() const {
        if (!alg_->graded()) return false;
        auto s = support();
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!(alg_->degree(s[i]) == alg_->degree(s[0]))) return false;
        return true;
    }

    std::optional<GroupElement> homogeneous_degree() const {
        if (!is_homogeneous()) return std::nullopt;
        auto s = support();
        if (s.empty()) return std::nullopt;
        return alg_->degree(s[0]);
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same(y);
        Vec<K> out(x.coords_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + y.coords_[i];
        return {x.alg_, std::move(out)};
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same(y);
        Vec<K> out(x.coords_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - y.coords_[i];
        return {x.alg_, std::move(out)};
    }
    AlgebraElement operator-() const {
        Vec<K> out(coords_);
        for (auto& c : out) c = -c;
        return {alg_, std::move(out)};
    }
    friend AlgebraElement operator*(const K& s, const AlgebraElement& x) {
        Vec<K> out(x.coords_);
        for (auto& c : out) c = s * c;
        return {x.alg_, std::move(out)};
    }

    // Bilinear extension of the structure constants.
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same(y);
        const auto& alg = *x.alg_;
        Vec<K> out(alg.dim(), K(0));
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            if (gca::is_zero(x.coords_[i])) continue;
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                if (gca::is_zero(y.coords_[j])) continue;
                K xy = x.coords_[i] * y.coords_[j];
                for (const auto& t : alg.product(i, j)) out[t.k] = out[t.k] + xy * t.c;
            }
        }
        return {x.alg_, std::move(out)};
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same(y);
        return x.coords_ == y.coords_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

private:
    void require_same(const AlgebraElement& o) const {
        if (alg_ != o.alg_) throw std::invalid_argument("AlgebraElement: parent algebra mismatch");
    }

    const GradedAlgebra<K>* alg_;
    Vec<K> coords_;
};

template <class K>
AlgebraElement<K> GradedAlgebra<K>::element(Vec<K> coords) const {
    return AlgebraElement<K>(this, std::move(coords));
}

template <class K>
AlgebraElement<K> GradedAlgebra<K>::basis_element(std::size_t i) const {
    if (i >= dim()) throw std::invalid_argument("GradedAlgebra: basis index out of range");
    Vec<K> c(dim(), K(0));
    c[i] = K(1);
    return AlgebraElement<K>(this, std::move(c));
}

template <class K>
AlgebraElement<K> GradedAlgebra<K>::zero_element() const {
    return AlgebraElement<K>(this, Vec<K>(dim(), K(0)));
}

template <class K>
AlgebraElement<K> GradedAlgebra<K>::unit_element() const {
    return AlgebraElement<K>(this, unit_);
}

template <class K>
AlgebraElement<K> mul(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
    return x * y;
}

// --- structural checks ------------------------------------------------------

struct GradingReport {
    bool ok = false;
    std::size_t i = 0, j = 0, k = 0; // violating triple when !ok
};

struct CommutativityReport {
    bool ok = false;
    std::size_t i = 0, j = 0; // violating basis pair when !ok
    std::string reason;
};

struct AssociativityReport {
    bool ok = false;
    std::size_t i = 0, j = 0, k = 0; // violating triple when !ok
};

// Definition check: every nonzero c_ijk must satisfy deg k = deg i + deg j.
template <class K>
GradingReport check_grading(const GradedAlgebra<K>& a) {
    if (!a.graded()) throw std::invalid_argument("check_grading: algebra has no degree map");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            GroupElement want = a.degree(i) + a.degree(j);
            for (const auto& t : a.product(i, j))
                if (!(a.degree(t.k) == want)) return {false, i, j, t.k};
        }
    return {true, 0, 0, 0};
}

namespace detail {
template <class K>
void require_grading(const GradedAlgebra<K>& a, const char* who) {
    auto g = check_grading(a);
    if (!g.ok)
        throw std::invalid_argument(std::string(who) + ": algebra fails the grading check at (" +
                                    std::to_string(g.i) + "," + std::to_string(g.j) + "," + std::to_string(g.k) + ")");
}

// b_i b_j as a dense coordinate vector.
template <class K>
Vec<K> basis_product_vec(const GradedAlgebra<K>& a, std::size_t i, std::size_t j) {
    Vec<K> v(a.dim(), K(0));
    for (const auto& t : a.product(i, j)) v[t.k] = t.c;
    return v;
}
} // namespace detail

// Commutation condition x y = (-1)^{<deg x, deg y>} y x, checked on all basis
// pairs; bilinearity extends the basis check to all homogeneous elements.
template <class K>
CommutativityReport check_gamma_commutativity(const GradedAlgebra<K>& a) {
    detail::require_grading(a, "check_gamma_commutativity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            int sign = scalar_product(a.degree(i), a.degree(j)) ? -1 : 1;
            Vec<K> lhs = detail::basis_product_vec(a, i, j);
            Vec<K> rhs = detail::basis_product_vec(a, j, i);
            for (auto& c : rhs) c = K(sign) * c;
            if (lhs != rhs) return {false, i, j, "sign (-1)^<deg,deg> commutation fails"};
        }
    return {true, 0, 0, ""};
}

// Commutation against a caller-supplied sign function on degree pairs.  The
// function must be symmetric on the degree pairs the algebra uses; both the
// symmetry and the commutation are checked.
template <class K>
CommutativityReport check_beta_commutativity(const GradedAlgebra<K>& a,
                                             const std::function<int(const GroupElement&, const GroupElement&)>& beta) {
    detail::require_grading(a, "check_beta_commutativity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            int s = beta(a.degree(i), a.degree(j));
            int st = beta(a.degree(j), a.degree(i));
            if (s != 1 && s != -1)
                throw std::invalid_argument("check_beta_commutativity: beta must return +-1");
            if (s != st) return {false, i, j, "beta is not symmetric on a used degree pair"};
            Vec<K> lhs = detail::basis_product_vec(a, i, j);
            Vec<K> rhs = detail::basis_product_vec(a, j, i);
            for (auto& c : rhs) c = K(s) * c;
            if (lhs != rhs) return {false, i, j, "beta commutation fails"};
        }
    return {true, 0, 0, ""};
}

namespace detail {
inline constexpr std::size_t assoc_dim_cap = 256;
}

// (b_i b_j) b_k = b_i (b_j b_k), exhaustively over basis triples.
template <class K>
AssociativityReport check_associativity(const GradedAlgebra<K>& a) {
    if (a.dim() > detail::assoc_dim_cap)
        throw std::invalid_argument("check_associativity: basis size capped at 256");
    const std::size_t d = a.dim();
    Vec<K> lhs(d, K(0)), rhs(d, K(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                std::fill(lhs.begin(), lhs.end(), K(0));
                std::fill(rhs.begin(), rhs.end(), K(0));
                for (const auto& t : ij)
                    for (const auto& u : a.product(t.k, k)) lhs[u.k] = lhs[u.k] + t.c * u.c;
                for (const auto& t : a.product(j, k))
                    for (const auto& u : a.product(i, t.k)) rhs[u.k] = rhs[u.k] + t.c * u.c;
                if (lhs != rhs) return {false, i, j, k};
            }
        }
    return {true, 0, 0, 0};
}

} // namespace gca
