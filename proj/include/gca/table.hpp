#pragma once

#include "gca/algebra.hpp"
#include "gca/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca {

namespace detail {
inline constexpr std::size_t table_dim_cap = 64;
}

// Renders a coordinate vector as a signed sum of basis labels: "+k", "-k",
// "0", "+e1-e2", or "+(3/2)*eps" for coefficients other than +-1.
template <class K>
std::string element_str(const GradedAlgebra<K>& a, const Vec<K>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        if (is_one(v[k])) out += "+" + a.label(k);
        else if (v[k] == K(-1)) out += "-" + a.label(k);
        else out += "+(" + scalar_str(v[k]) + ")*" + a.label(k);
    }
    return out.empty() ? "0" : out;
}

template <class K>
std::string element_str(const AlgebraElement<K>& x) {
    return element_str(x.algebra(), x.coords());
}

// Deterministic multiplication grid: rows are left factors, columns right
// factors, first column holds the row labels.
template <class K>
std::string format_table(const GradedAlgebra<K>& a) {
    const std::size_t d = a.dim();
    if (d > detail::table_dim_cap)
        throw std::invalid_argument("format_table: basis size capped at 64");
    std::vector<std::vector<std::string>> cells(d + 1, std::vector<std::string>(d + 1));
    cells[0][0] = "*";
    for (std::size_t i = 0; i < d; ++i) {
        cells[0][i + 1] = a.label(i);
        cells[i + 1][0] = a.label(i);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> v(d, K(0));
            for (const auto& t : a.product(i, j)) v[t.k] = t.c;
            cells[i + 1][j + 1] = element_str(a, v);
        }
    std::vector<std::size_t> width(d + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c <= d; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (std::size_t r = 0; r <= d; ++r) {
        std::string line;
        for (std::size_t c = 0; c <= d; ++c) {
            std::string cell = cells[r][c];
            cell.resize(width[c], ' ');
            if (c == 0) line += cell + " |";
            else line += " " + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

} // namespace gca
