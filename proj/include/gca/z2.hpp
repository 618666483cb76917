#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gca {

// Element of the abelian group (Z2)^n, packed in one machine word.
// Bit i of the word is coordinate i+1 of the printed tuple, so the
// tuple (0,1,1) is stored as 0b110.
class GroupElement {
public:
    static constexpr unsigned max_dim = 62;

    GroupElement(std::uint64_t bits, unsigned n) : bits_(bits), n_(n) {
        if (n < 1 || n > max_dim)
            throw std::invalid_argument("GroupElement: dimension must be in [1, 62]");
        if (n < 64 && (bits >> n) != 0)
            throw std::invalid_argument("GroupElement: bits above dimension must be zero");
    }

    static GroupElement zero(unsigned n) { return GroupElement(0, n); }

    // Standard basis vector with coordinate i+1 set (0-based bit index).
    static GroupElement e(unsigned i, unsigned n) {
        if (i >= n) throw std::invalid_argument("GroupElement::e: index out of range");
        return GroupElement(std::uint64_t{1} << i, n);
    }

    std::uint64_t bits() const { return bits_; }
    unsigned dim() const { return n_; }
    bool bit(unsigned i) const { return ((bits_ >> i) & 1u) != 0; }
    bool is_zero() const { return bits_ == 0; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
    }

private:
    std::uint64_t bits_;
    unsigned n_;
};

inline void require_same_dim(const GroupElement& a, const GroupElement& b, const char* who) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(who) + ": group dimension mismatch");
}

// Coordinate-wise sum mod 2.
inline GroupElement gp_add(const GroupElement& a, const GroupElement& b) {
    require_same_dim(a, b, "gp_add");
    return GroupElement(a.bits() ^ b.bits(), a.dim());
}

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return gp_add(a, b); }

// <a,b> = sum_i a_i b_i mod 2.
inline int scalar_product(const GroupElement& a, const GroupElement& b) {
    require_same_dim(a, b, "scalar_product");
    return std::popcount(a.bits() & b.bits()) & 1;
}

// Number of 1-entries mod 2.
inline int parity(const GroupElement& a) { return std::popcount(a.bits()) & 1; }

namespace detail {
inline constexpr unsigned enumeration_cap = 20;
}

// All 2^n elements in increasing bit-pattern order.
inline std::vector<GroupElement> enumerate_group(unsigned n) {
    if (n < 1 || n > detail::enumeration_cap)
        throw std::invalid_argument("enumerate_group: dimension must be in [1, 20]");
    std::vector<GroupElement> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        out.emplace_back(b, n);
    return out;
}

// The 2^(n-1) even-parity elements, in increasing bit-pattern order.
inline std::vector<GroupElement> enumerate_even(unsigned n) {
    if (n < 2 || n > detail::enumeration_cap)
        throw std::invalid_argument("enumerate_even: dimension must be in [2, 20]");
    std::vector<GroupElement> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        if ((std::popcount(b) & 1) == 0) out.emplace_back(b, n);
    return out;
}

// Text form: comma-separated bits in parentheses, leftmost coordinate first,
// e.g. (0,1,1).
inline std::string to_string(const GroupElement& a) {
    std::string s = "(";
    for (unsigned i = 0; i < a.dim(); ++i) {
        if (i) s += ',';
        s += a.bit(i) ? '1' : '0';
    }
    s += ')';
    return s;
}

// Parses exactly the text form produced by to_string.
inline GroupElement parse_group_element(std::string_view text) {
    const auto fail = [] { throw std::invalid_argument("parse_group_element: malformed tuple"); };
    if (text.size() < 3 || text.front() != '(' || text.back() != ')') fail();
    std::uint64_t bits = 0;
    unsigned n = 0;
    for (std::size_t pos = 1; pos < text.size() - 1;) {
        char c = text[pos];
        if (c != '0' && c != '1') fail();
        if (n >= GroupElement::max_dim) fail();
        if (c == '1') bits |= std::uint64_t{1} << n;
        ++n;
        ++pos;
        if (pos < text.size() - 1) {
            if (text[pos] != ',') fail();
            ++pos;
            if (pos == text.size() - 1) fail();
        }
    }
    if (n == 0) fail();
    return GroupElement(bits, n);
}

} // namespace gca
