#pragma once

#include "gca/z2.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gca {

// Bilinear form f : (Z2)^n x (Z2)^n -> Z2, stored as the n x n bit matrix
// of coefficients of a_i b_j.  Rows are packed in words.
class BilinearFormZ2 {
public:
    explicit BilinearFormZ2(unsigned n) : n_(n), rows_(n, 0) {
        if (n < 1 || n > GroupElement::max_dim)
            throw std::invalid_argument("BilinearFormZ2: dimension must be in [1, 62]");
    }

    // The paper's standard exponent f(a,b) = sum_{i>j} a_i b_j:
    // strictly lower-triangular all-ones matrix.
    static BilinearFormZ2 standard(unsigned n) {
        BilinearFormZ2 f(n);
        for (unsigned i = 1; i < n; ++i)
            f.rows_[i] = (std::uint64_t{1} << i) - 1;
        return f;
    }

    unsigned dim() const { return n_; }
    bool coeff(unsigned i, unsigned j) const { return ((rows_[i] >> j) & 1u) != 0; }
    void set_coeff(unsigned i, unsigned j, bool v) {
        if (i >= n_ || j >= n_) throw std::invalid_argument("BilinearFormZ2: index out of range");
        if (v) rows_[i] |= std::uint64_t{1} << j;
        else rows_[i] &= ~(std::uint64_t{1} << j);
    }

    // f(a,b) mod 2.
    int operator()(const GroupElement& a, const GroupElement& b) const {
        if (a.dim() != n_ || b.dim() != n_)
            throw std::invalid_argument("BilinearFormZ2: group dimension mismatch");
        int acc = 0;
        std::uint64_t ab = a.bits();
        while (ab) {
            unsigned i = static_cast<unsigned>(std::countr_zero(ab));
            acc ^= std::popcount(rows_[i] & b.bits()) & 1;
            ab &= ab - 1;
        }
        return acc;
    }

    friend bool operator==(const BilinearFormZ2& a, const BilinearFormZ2& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    unsigned n_;
    std::vector<std::uint64_t> rows_;
};

inline BilinearFormZ2 f_standard(unsigned n) { return BilinearFormZ2::standard(n); }

// Sign-valued twist F(a,b) = (-1)^f(a,b) with bilinear exponent f.  Bilinear
// exponents always satisfy the 2-cocycle identity.
class SignCocycle {
public:
    explicit SignCocycle(BilinearFormZ2 form) : form_(std::move(form)) {}

    unsigned dim() const { return form_.dim(); }
    const BilinearFormZ2& form() const { return form_; }

    // F(a,b) in {+1,-1}.
    int sign(const GroupElement& a, const GroupElement& b) const {
        return form_(a, b) ? -1 : 1;
    }

    // beta(a,b) = F(a,b) F(b,a); signs are involutive, so the product equals
    // the quotient q^{f(a,b)-f(b,a)} at q = -1.
    int beta(const GroupElement& a, const GroupElement& b) const {
        return sign(a, b) * sign(b, a);
    }

private:
    BilinearFormZ2 form_;
};

inline SignCocycle standard_cocycle(unsigned n) { return SignCocycle(f_standard(n)); }

inline int eval_sign(const SignCocycle& F, const GroupElement& a, const GroupElement& b) {
    return F.sign(a, b);
}

inline int beta_of(const SignCocycle& F, const GroupElement& a, const GroupElement& b) {
    return F.beta(a, b);
}

// Arbitrary sign-valued pair function on (Z2)^n.  Used to feed deliberately
// broken twists (non-bilinear exponents) to the checkers.
using SignFn = std::function<int(const GroupElement&, const GroupElement&)>;

inline int beta_of(const SignFn& F, const GroupElement& a, const GroupElement& b) {
    return F(a, b) * F(b, a);
}

struct CocycleReport {
    bool ok = false;
    // First triple violating F(a+b,c) F(a,b) = F(a,b+c) F(b,c), when !ok.
    std::optional<std::array<GroupElement, 3>> witness;
};

namespace detail {
inline constexpr unsigned cocycle_check_cap = 8;

inline int checked_sign(const SignFn& F, const GroupElement& a, const GroupElement& b) {
    int s = F(a, b);
    if (s != 1 && s != -1) throw std::invalid_argument("is_cocycle: sign function must return +-1");
    return s;
}
} // namespace detail

// Exhaustive check of the 2-cocycle identity over all triples; never sampled.
inline CocycleReport is_cocycle(unsigned n, const SignFn& F) {
    if (n < 1 || n > detail::cocycle_check_cap)
        throw std::invalid_argument("is_cocycle: exhaustive triple check capped at n <= 8");
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < size; ++a) {
        GroupElement ga(a, n);
        for (std::uint64_t b = 0; b < size; ++b) {
            GroupElement gb(b, n);
            GroupElement gab(a ^ b, n);
            for (std::uint64_t c = 0; c < size; ++c) {
                GroupElement gc(c, n);
                GroupElement gbc(b ^ c, n);
                int lhs = detail::checked_sign(F, gab, gc) * detail::checked_sign(F, ga, gb);
                int rhs = detail::checked_sign(F, ga, gbc) * detail::checked_sign(F, gb, gc);
                if (lhs != rhs)
                    return {false, std::array<GroupElement, 3>{ga, gb, gc}};
            }
        }
    }
    return {true, std::nullopt};
}

inline CocycleReport is_cocycle(const SignCocycle& F) {
    return is_cocycle(F.dim(), [&F](const GroupElement& a, const GroupElement& b) { return F.sign(a, b); });
}

} // namespace gca
