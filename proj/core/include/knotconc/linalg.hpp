#pragma once

#include <vector>

#include "knotconc/laurent.hpp"

namespace knotconc {

template <typename T>
using Mat = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) determinant of a Laurent-polynomial matrix; the
/// interior divisions are exact by the Sylvester identity.
template <typename C>
LaurentPoly<C> laurent_det(Mat<LaurentPoly<C>> m) {
    using P = LaurentPoly<C>;
    std::size_t n = m.size();
    if (n == 0) return P(C(1));
    P prev(C(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == k) return P();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            bool li = !m[i][k].is_zero();
            for (std::size_t j = k + 1; j < n; ++j) {
                P num = m[i][j] * m[k][k];
                if (li && !m[k][j].is_zero()) num = num - m[i][k] * m[k][j];
                m[i][j] = poly_divexact(num, prev);
            }
            m[i][k] = P();
        }
        prev = m[k][k];
    }
    P d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

/// Adjugate matrix: adj(M)_{ij} = (-1)^{i+j} det(M with row j, column i
/// removed), so that M * adj(M) = det(M) * I.
template <typename C>
Mat<LaurentPoly<C>> laurent_adjugate(const Mat<LaurentPoly<C>>& m) {
    using P = LaurentPoly<C>;
    std::size_t n = m.size();
    Mat<P> adj(n, std::vector<P>(n));
    if (n == 0) return adj;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Mat<P> minor(n - 1, std::vector<P>(n - 1));
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc] = m[r][c];
                    ++cc;
                }
                ++rr;
            }
            P d = laurent_det(std::move(minor));
            adj[i][j] = ((i + j) % 2) ? -d : d;
        }
    }
    return adj;
}

template <typename T>
Mat<T> mat_identity(std::size_t n, const T& one, const T& zero) {
    Mat<T> m(n, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
    return m;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Mat<T> r(n, std::vector<T>(m, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    return r;
}

}  // namespace knotconc
