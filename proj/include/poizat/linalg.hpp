#pragma once

#include <vector>

#include "poizat/poly.hpp"

namespace poizat {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const F inv = F(1) / m[r][c];
        for (size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            const F f = m[i][c];
            for (size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Basis of {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, size_t cols) {
    for (auto& row : m) row.resize(cols, F(0));
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (size_t i = 0; i < piv.size(); ++i) v[static_cast<size_t>(piv[i])] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial det(t I - m), division free (Berkowitz).
template <class F>
Poly<F> charpoly(const Matrix<F>& a) {
    const size_t n = a.size();
    std::vector<F> c{F(1)};  // coefficients, highest degree first
    for (size_t k = 0; k < n; ++k) {
        // Leading (k+1)x(k+1) block: A_k = [[a_kk ... ]]; build Toeplitz column.
        std::vector<F> col;
        col.reserve(k + 2);
        col.push_back(F(1));
        col.push_back(-a[k][k]);
        std::vector<F> rowv(a[k].begin(), a[k].begin() + static_cast<long>(k));  // R
        std::vector<F> colv(k);                                                  // S
        for (size_t i = 0; i < k; ++i) colv[i] = a[i][k];
        std::vector<F> v = colv;
        for (size_t j = 0; j < k; ++j) {
            F s(0);
            for (size_t i = 0; i < k; ++i) s = s + rowv[i] * v[i];
            col.push_back(-s);
            std::vector<F> nv(k, F(0));
            for (size_t i = 0; i < k; ++i)
                for (size_t l = 0; l < k; ++l) nv[i] = nv[i] + a[i][l] * v[l];
            v = std::move(nv);
        }
        std::vector<F> next(k + 2, F(0));
        for (size_t i = 0; i < k + 2; ++i)
            for (size_t j = 0; j <= i && j < c.size(); ++j) next[i] = next[i] + col[i - j] * c[j];
        c = std::move(next);
    }
    std::vector<F> low(c.rbegin(), c.rend());
    return Poly<F>(std::move(low));
}

}  // namespace poizat
