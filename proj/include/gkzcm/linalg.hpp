// Small dense exact linear algebra over the rationals.
#pragma once

#include <optional>
#include <vector>

#include "gkzcm/numeric.hpp"

namespace gkzcm {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

// Reduced row echelon form in place; returns the rank. Pivot columns are
// appended to *pivots when given.
inline size_t rref(QMatrix& m, std::vector<size_t>* pivots = nullptr) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

inline size_t matrix_rank(QMatrix m) { return rref(m); }

// One solution of a·x = b, or nullopt if inconsistent.
inline std::optional<QRow> solve_linear(QMatrix a, const QRow& b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots;
    rref(a, &pivots);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == cols) return std::nullopt;  // pivot in the constant column
    QRow x(cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
    return x;
}

// Basis of the kernel of a (rows of the result are kernel vectors).
inline QMatrix nullspace_basis(QMatrix a, size_t cols) {
    std::vector<size_t> pivots;
    rref(a, &pivots);
    std::vector<char> is_pivot(cols, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    QMatrix basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QRow v(cols, Rational(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gkzcm
