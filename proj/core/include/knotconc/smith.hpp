#pragma once

#include <optional>

#include "knotconc/linalg.hpp"

namespace knotconc {

/// Smith normal form over R[t^{+-1}], R a field, so the ring is a PID with
/// Euclidean size span().  The factorization satisfies presentation = U D V
/// with U, V products of elementary matrices (unit determinant: a nonzero
/// element of R times a power of t), D diagonal with d_1 | d_2 | ... and each
/// nonzero d_i monic with lowest exponent 0.
template <typename C>
struct LaurentSmith {
    Mat<LaurentPoly<C>> u, uinv, v, vinv, d;
    std::vector<LaurentPoly<C>> diag;  // length = #rows, zero-padded
};

template <typename C>
LaurentSmith<C> smith_normal_form(const Mat<LaurentPoly<C>>& input) {
    using P = LaurentPoly<C>;
    std::size_t rows = input.size();
    std::size_t cols = rows ? input[0].size() : 0;
    LaurentSmith<C> s;
    s.d = input;
    P one(C(1)), zero;
    s.u = mat_identity<P>(rows, one, zero);
    s.uinv = mat_identity<P>(rows, one, zero);
    s.v = mat_identity<P>(cols, one, zero);
    s.vinv = mat_identity<P>(cols, one, zero);

    auto& d = s.d;
    // row ops act as D <- E D; maintain U <- U E^{-1}, Uinv <- E Uinv
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.uinv[i], s.uinv[j]);
        for (std::size_t k = 0; k < rows; ++k) std::swap(s.u[k][i], s.u[k][j]);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const P& f) {
        // row_i += f * row_j
        for (std::size_t k = 0; k < cols; ++k) d[i][k] = d[i][k] + f * d[j][k];
        for (std::size_t k = 0; k < rows; ++k)
            s.uinv[i][k] = s.uinv[i][k] + f * s.uinv[j][k];
        for (std::size_t k = 0; k < rows; ++k) s.u[k][j] = s.u[k][j] - f * s.u[k][i];
    };
    auto row_scale = [&](std::size_t i, const P& unit, const P& unit_inv) {
        for (std::size_t k = 0; k < cols; ++k) d[i][k] = unit * d[i][k];
        for (std::size_t k = 0; k < rows; ++k) s.uinv[i][k] = unit * s.uinv[i][k];
        for (std::size_t k = 0; k < rows; ++k) s.u[k][i] = unit_inv * s.u[k][i];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
        for (std::size_t k = 0; k < cols; ++k) std::swap(s.vinv[k][i], s.vinv[k][j]);
        std::swap(s.v[i], s.v[j]);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const P& f) {
        // col_i += f * col_j
        for (std::size_t k = 0; k < rows; ++k) d[k][i] = d[k][i] + f * d[k][j];
        for (std::size_t k = 0; k < cols; ++k)
            s.vinv[k][i] = s.vinv[k][i] + f * s.vinv[k][j];
        for (std::size_t k = 0; k < cols; ++k) s.v[j][k] = s.v[j][k] - f * s.v[i][k];
    };

    std::size_t limit = std::min(rows, cols);
    for (std::size_t k = 0; k < limit; ++k) {
        for (;;) {
            // minimal-span nonzero pivot in the trailing submatrix
            std::optional<std::pair<std::size_t, std::size_t>> piv;
            long best = -1;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (!d[i][j].is_zero() && (best < 0 || d[i][j].span() < best)) {
                        best = d[i][j].span();
                        piv = {i, j};
                    }
            if (!piv) break;
            if (piv->first != k) row_swap(k, piv->first);
            if (piv->second != k) col_swap(k, piv->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d[i][k].is_zero()) continue;
                P q = poly_divmod(d[i][k], d[k][k]).first;
                row_add(i, k, -q);
                if (!d[i][k].is_zero()) clean = false;  // remainder became pivot candidate
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d[k][j].is_zero()) continue;
                P q = poly_divmod(d[k][j], d[k][k]).first;
                col_add(j, k, -q);
                if (!d[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // enforce the divisibility chain d_k | everything below-right
            bool chain_ok = true;
            for (std::size_t i = k + 1; i < rows && chain_ok; ++i)
                for (std::size_t j = k + 1; j < cols && chain_ok; ++j)
                    if (!d[i][j].is_zero() &&
                        !poly_divmod(d[i][j], d[k][k]).second.is_zero()) {
                        row_add(k, i, P(C(1)));
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        if (d[k][k].is_zero()) break;
        // unit-normalize the pivot: monic with lowest exponent 0
        const P& p = d[k][k];
        long sh = p.min_exp();
        C lead = p.leading_coeff();
        P unit = P::monomial(-sh, C(1) / lead);
        P unit_inv = P::monomial(sh, lead);
        row_scale(k, unit, unit_inv);
    }

    s.diag.assign(rows, P());
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) s.diag[i] = d[i][i];
    return s;
}

/// Basis of the right kernel {x : M x = 0} from the Smith data of M:
/// columns of Vinv at the zero-diagonal indices.
template <typename C>
Mat<LaurentPoly<C>> laurent_kernel_basis(const Mat<LaurentPoly<C>>& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    LaurentSmith<C> s = smith_normal_form(m);
    Mat<LaurentPoly<C>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero_diag = (j >= rows) || s.diag[j].is_zero();
        if (!zero_diag) continue;
        std::vector<LaurentPoly<C>> col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = s.vinv[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace knotconc
