#include "knotconc/hermitian.hpp"

#include <stdexcept>

#include "knotconc/errors.hpp"

namespace knotconc {

namespace {

// Dense polynomial in lambda with cyclotomic coefficients, ascending order,
// no trailing zeros.
using LPoly = std::vector<Cyclotomic>;

void lp_trim(LPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool lp_is_zero(const LPoly& p) { return p.empty(); }

LPoly lp_mul(const LPoly& a, const LPoly& b) {
    if (a.empty() || b.empty()) return {};
    LPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    lp_trim(r);
    return r;
}

LPoly lp_sub(const LPoly& a, const LPoly& b) {
    LPoly r = a;
    r.resize(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    lp_trim(r);
    return r;
}

// Exact division; the Bareiss identity guarantees divisibility.
LPoly lp_divexact(LPoly a, const LPoly& b) {
    if (b.empty()) throw std::logic_error("lp_divexact: division by zero");
    lp_trim(a);
    if (a.empty()) return {};
    Cyclotomic lead_inv = b.back().inverse();
    LPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        Cyclotomic f = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
        lp_trim(a);
        if (a.size() >= b.size() && !a.empty() && a.back().is_zero()) lp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("lp_divexact: inexact division");
    lp_trim(q);
    return q;
}

}  // namespace

bool is_hermitian(const CycloMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!(m[i][j] == m[j][i].conj())) return false;
    return true;
}

std::vector<Cyclotomic> char_poly(const CycloMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return {Cyclotomic(mpq_class(1))};
    // E = lambda I - M
    std::vector<std::vector<LPoly>> e(n, std::vector<LPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LPoly p{-m[i][j]};
            if (i == j) p.push_back(Cyclotomic(mpq_class(1)));
            lp_trim(p);
            e[i][j] = std::move(p);
        }

    int sign = 1;
    LPoly prev{Cyclotomic(mpq_class(1))};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (lp_is_zero(e[k][k])) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!lp_is_zero(e[i][k])) {
                    piv = i;
                    break;
                }
            if (piv == k) return {};  // zero column: determinant vanishes identically
            std::swap(e[k], e[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            bool li = !lp_is_zero(e[i][k]);
            for (std::size_t j = k + 1; j < n; ++j) {
                LPoly num = lp_mul(e[i][j], e[k][k]);
                if (li && !lp_is_zero(e[k][j]))
                    num = lp_sub(num, lp_mul(e[i][k], e[k][j]));
                e[i][j] = lp_divexact(std::move(num), prev);
            }
            e[i][k].clear();
        }
        prev = e[k][k];
    }
    LPoly det = e[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    det.resize(n + 1);
    return det;
}

int hermitian_signature(const CycloMatrix& m) {
    if (!is_hermitian(m))
        throw NonHermitianInput("hermitian_signature: matrix is not hermitian");
    std::size_t n = m.size();
    if (n == 0) return 0;

    std::vector<Cyclotomic> chi = char_poly(m);
    std::vector<int> s(chi.size(), 0);
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (chi[j].is_zero()) continue;
        if (!chi[j].is_real())
            throw NonHermitianInput(
                "hermitian_signature: characteristic polynomial is not real");
        s[j] = certified_sign(chi[j]);
    }

    // All roots are real, so Descartes' count is exact with multiplicity.
    auto variations = [](const std::vector<int>& v) {
        int last = 0, count = 0;
        for (int x : v) {
            if (x == 0) continue;
            if (last != 0 && x != last) ++count;
            last = x;
        }
        return count;
    };
    std::vector<int> pos_seq, neg_seq;
    for (std::size_t j = 0; j < s.size(); ++j) {
        pos_seq.push_back(s[j]);
        neg_seq.push_back((j % 2) ? -s[j] : s[j]);
    }
    return variations(pos_seq) - variations(neg_seq);
}

}  // namespace knotconc
