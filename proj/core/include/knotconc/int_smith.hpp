#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "knotconc/linalg.hpp"

namespace knotconc {

using ZMat = std::vector<std::vector<mpz_class>>;

/// Integer Smith normal form: input = U D V with U, V unimodular and D
/// diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct IntSmith {
    ZMat u, uinv, v, vinv, d;
    std::vector<mpz_class> diag;  // length = #rows, zero-padded
};

inline IntSmith int_smith(const ZMat& input) {
    std::size_t rows = input.size();
    std::size_t cols = rows ? input[0].size() : 0;
    IntSmith s;
    s.d = input;
    mpz_class one(1), zero(0);
    s.u = mat_identity<mpz_class>(rows, one, zero);
    s.uinv = mat_identity<mpz_class>(rows, one, zero);
    s.v = mat_identity<mpz_class>(cols, one, zero);
    s.vinv = mat_identity<mpz_class>(cols, one, zero);
    auto& d = s.d;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.uinv[i], s.uinv[j]);
        for (std::size_t k = 0; k < rows; ++k) std::swap(s.u[k][i], s.u[k][j]);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const mpz_class& f) {
        for (std::size_t k = 0; k < cols; ++k) d[i][k] += f * d[j][k];
        for (std::size_t k = 0; k < rows; ++k) s.uinv[i][k] += f * s.uinv[j][k];
        for (std::size_t k = 0; k < rows; ++k) s.u[k][j] -= f * s.u[k][i];
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) d[i][k] = -d[i][k];
        for (std::size_t k = 0; k < rows; ++k) s.uinv[i][k] = -s.uinv[i][k];
        for (std::size_t k = 0; k < rows; ++k) s.u[k][i] = -s.u[k][i];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
        for (std::size_t k = 0; k < cols; ++k) std::swap(s.vinv[k][i], s.vinv[k][j]);
        std::swap(s.v[i], s.v[j]);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const mpz_class& f) {
        for (std::size_t k = 0; k < rows; ++k) d[k][i] += f * d[k][j];
        for (std::size_t k = 0; k < cols; ++k) s.vinv[k][i] += f * s.vinv[k][j];
        for (std::size_t k = 0; k < cols; ++k) s.v[j][k] -= f * s.v[i][k];
    };

    std::size_t limit = std::min(rows, cols);
    for (std::size_t k = 0; k < limit; ++k) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> piv;
            mpz_class best(0);
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (d[i][j] != 0 && (best == 0 || abs(d[i][j]) < best)) {
                        best = abs(d[i][j]);
                        piv = {i, j};
                    }
            if (!piv) break;
            if (piv->first != k) row_swap(k, piv->first);
            if (piv->second != k) col_swap(k, piv->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d[i][k] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[i][k].get_mpz_t(), d[k][k].get_mpz_t());
                row_add(i, k, -q);
                if (d[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d[k][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[k][j].get_mpz_t(), d[k][k].get_mpz_t());
                col_add(j, k, -q);
                if (d[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            bool chain_ok = true;
            for (std::size_t i = k + 1; i < rows && chain_ok; ++i)
                for (std::size_t j = k + 1; j < cols && chain_ok; ++j)
                    if (d[i][j] % d[k][k] != 0) {
                        row_add(k, i, mpz_class(1));
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        if (d[k][k] == 0) break;
        if (d[k][k] < 0) row_negate(k);
    }

    s.diag.assign(rows, mpz_class(0));
    for (std::size_t i = 0; i < limit; ++i) s.diag[i] = d[i][i];
    return s;
}

/// Basis of the right kernel {x in Z^cols : M x = 0}, as columns of Vinv at
/// the zero-diagonal indices.
inline ZMat int_kernel_basis(const ZMat& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    IntSmith s = int_smith(m);
    ZMat basis;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero_diag = (j >= rows) || s.diag[j] == 0;
        if (!zero_diag) continue;
        std::vector<mpz_class> col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = s.vinv[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace knotconc
