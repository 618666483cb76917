#pragma once

#include "gca/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gca {

template <class K>
using Vec = std::vector<K>;

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// Maintains a reduced row echelon basis of the span of inserted vectors.
// Rows are kept sorted by pivot column with unit pivots and cleared pivot
// columns, so the row set is a canonical form of the subspace.
template <class K>
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const Mat<K>& rows() const { return rows_; }

    // Reduces v against the current basis in place; the result is zero iff
    // v was already in the span.
    void reduce(Vec<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RowReducer: column count mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (is_zero(c)) continue;
            K f = c;
            for (std::size_t j = 0; j < cols_; ++j) v[j] = v[j] - f * rows_[r][j];
        }
    }

    bool contains(Vec<K> v) const {
        reduce(v);
        return is_zero_vec(v);
    }

    // Inserts v into the basis; returns true iff the rank grew.
    bool insert(Vec<K> v) {
        reduce(v);
        std::size_t p = 0;
        while (p < cols_ && is_zero(v[p])) ++p;
        if (p == cols_) return false;
        K inv = K(1) / v[p];
        for (std::size_t j = p; j < cols_; ++j) v[j] = v[j] * inv;
        // clear the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K c = rows_[r][p];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
        return true;
    }

    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    std::size_t cols_;
    Mat<K> rows_;
    std::vector<std::size_t> pivots_;
};

// Canonical reduced row echelon basis of the row span (zero rows dropped).
template <class K>
Mat<K> rref(const Mat<K>& m, std::size_t cols) {
    RowReducer<K> red(cols);
    for (const auto& row : m) red.insert(row);
    return red.rows();
}

// Canonical basis of { x : M x = 0 }, rows of M being the equations.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m, std::size_t cols) {
    RowReducer<K> red(cols);
    for (const auto& row : m) red.insert(row);
    const auto& rows = red.rows();
    const auto& piv = red.pivot_columns();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;

    RowReducer<K> out(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(cols, K(0));
        v[f] = K(1);
        for (std::size_t r = 0; r < rows.size(); ++r) v[piv[r]] = -rows[r][f];
        out.insert(std::move(v));
    }
    return out.rows();
}

// One exact solution of A x = b (columns of A are the unknowns' coefficients),
// or nullopt if the system is inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    // eliminate on [A | b]
    RowReducer<K> red(cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec<K> row(a[r]);
        row.push_back(b[r]);
        red.insert(std::move(row));
    }
    Vec<K> x(cols, K(0));
    for (std::size_t r = 0; r < red.rank(); ++r) {
        std::size_t p = red.pivot_columns()[r];
        if (p == cols) return std::nullopt; // 0 = 1 row
        x[p] = red.rows()[r][cols];
    }
    return x;
}

// Inverse of a square matrix; throws if singular.
template <class K>
Mat<K> invert(const Mat<K>& a) {
    const std::size_t n = a.size();
    RowReducer<K> red(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw std::invalid_argument("invert: matrix must be square");
        Vec<K> row(2 * n, K(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = a[r][j];
        row[n + r] = K(1);
        red.insert(std::move(row));
    }
    if (red.rank() != n) throw std::invalid_argument("invert: singular matrix");
    for (std::size_t r = 0; r < n; ++r)
        if (red.pivot_columns()[r] != r) throw std::invalid_argument("invert: singular matrix");
    Mat<K> inv(n, Vec<K>(n, K(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) inv[r][j] = red.rows()[r][n + j];
    return inv;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    Mat<K> out(n, Vec<K>(m, K(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("mat_mul: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    }
    return out;
}

template <class K>
Mat<K> identity_matrix(std::size_t n) {
    Mat<K> m(n, Vec<K>(n, K(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

} // namespace gca
