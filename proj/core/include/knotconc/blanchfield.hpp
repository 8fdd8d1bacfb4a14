#pragma once

#include <string>
#include <vector>

#include "knotconc/errors.hpp"
#include "knotconc/seifert.hpp"
#include "knotconc/smith.hpp"

namespace knotconc {

template <typename C>
C make_coeff(const C& sample, long v);
inline mpq_class make_coeff(const mpq_class&, long v) { return mpq_class(v); }
inline Zp make_coeff(const Zp& sample, long v) {
    return sample.bound() ? Zp(v, sample.modulus()) : Zp(v);
}

/// Finitely presented module over R[t^{+-1}] (R = Q or Z_p) with its Smith
/// normal form.  Rows of the presentation matrix index generators, columns
/// index relations; the module is R[t^{+-1}]^rows / (column span).
template <typename C>
class AlexanderModule {
public:
    using P = LaurentPoly<C>;

    static AlexanderModule from_presentation(Mat<P> pres) {
        AlexanderModule m;
        m.pres_ = std::move(pres);
        m.smith_ = smith_normal_form(m.pres_);
        for (const auto& p : m.smith_.diag)
            if (!p.is_zero() && !is_laurent_unit(p))
                m.factors_.push_back(poly_monic(p));
        for (const auto& p : m.smith_.diag)
            if (p.is_zero()) ++m.free_rank_;
        return m;
    }

    const Mat<P>& presentation() const { return pres_; }
    const LaurentSmith<C>& smith() const { return smith_; }
    /// Non-unit invariant factors, monic with lowest exponent 0, in chain
    /// order d_1 | d_2 | ...
    const std::vector<P>& invariant_factors() const { return factors_; }
    long free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

    long generator_count() const { return static_cast<long>(pres_.size()); }

    /// Coordinates of a class in the Smith decomposition: Uinv x, with
    /// component i meaningful mod diag[i].
    std::vector<P> smith_coords(const std::vector<P>& x) const {
        std::size_t n = pres_.size();
        if (x.size() != n)
            throw std::invalid_argument("smith_coords: wrong vector length");
        std::vector<P> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            P acc;
            for (std::size_t j = 0; j < n; ++j) acc = acc + smith_.uinv[i][j] * x[j];
            if (!smith_.diag[i].is_zero())
                acc = poly_divmod(acc, smith_.diag[i]).second;
            y[i] = acc;
        }
        return y;
    }

private:
    Mat<P> pres_;
    LaurentSmith<C> smith_;
    std::vector<P> factors_;
    long free_rank_ = 0;
};

/// Presentation matrix t A - A^T of the Alexander module of a knot with
/// Seifert matrix A, over the coefficient field carried by `one`.
template <typename C>
Mat<LaurentPoly<C>> seifert_presentation(const SeifertMatrix& a, const C& one) {
    using P = LaurentPoly<C>;
    long n = a.size();
    Mat<P> m(n, std::vector<P>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            P e;
            e.add_term(1, make_coeff(one, a.entry(i, j)));
            e.add_term(0, make_coeff(one, -a.entry(j, i)));
            m[i][j] = e;
        }
    return m;
}

template <typename C>
AlexanderModule<C> module_from_seifert(const SeifertMatrix& a, const C& one) {
    auto pres = seifert_presentation(a, one);
    if (a.size() > 0 && laurent_det(pres).is_zero())
        throw SingularPresentation(
            "module_from_seifert: det(tA - A^T) vanishes over this ring");
    return AlexanderModule<C>::from_presentation(std::move(pres));
}

/// Class in Frac(R[t^{+-1}]) / R[t^{+-1}], stored as a reduced fraction with
/// the representative normalized: denominator monic with nonzero constant
/// term, numerator a polynomial of smaller degree.  The class is zero iff
/// the numerator is.
template <typename C>
class BlanchfieldValue {
public:
    using P = LaurentPoly<C>;

    BlanchfieldValue() : num_(), den_(P(C(1))) {}

    static BlanchfieldValue from_fraction(P num, P den) {
        if (den.is_zero())
            throw std::domain_error("BlanchfieldValue: zero denominator");
        BlanchfieldValue v;
        if (num.is_zero()) return v;
        P g = poly_gcd(num, den);
        if (g.span() > 0) {
            num = poly_divexact(num, g);
            den = poly_divexact(den, g);
        }
        long shift = den.min_exp();  // t-power units move to the numerator side
        den = den.shifted(-shift);
        num = num.shifted(-shift);
        C lead = den.leading_coeff();
        den = (C(1) / lead) * den;
        num = (C(1) / lead) * num;
        if (den.span() == 0) return v;  // value lies in the ring: class is zero
        v.den_ = den;
        v.num_ = reduce_representative(num, den);
        if (v.num_.is_zero()) v.den_ = P(C(1));
        return v;
    }

    bool is_zero() const { return num_.is_zero(); }
    const P& num() const { return num_; }
    const P& den() const { return den_; }

    friend BlanchfieldValue operator+(const BlanchfieldValue& a,
                                      const BlanchfieldValue& b) {
        return from_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BlanchfieldValue operator-(const BlanchfieldValue& a,
                                      const BlanchfieldValue& b) {
        return from_fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const BlanchfieldValue& a, const BlanchfieldValue& b) {
        return (a - b).is_zero();
    }

    /// Module action: the class of f * value.
    BlanchfieldValue scaled(const P& f) const { return from_fraction(f * num_, den_); }

    /// t -> 1/t on a representative.
    BlanchfieldValue conj() const {
        return from_fraction(num_.substitute_inverse(), den_.substitute_inverse());
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    P num_, den_;

    // canonical representative of num/den mod R[t^{+-1}]: fold negative
    // powers of t through t^{-1} = -(den - den(0)) / (t den(0)) mod den,
    // then reduce mod den
    static P reduce_representative(const P& num, const P& den) {
        C c0 = den.coeff(0);
        P tinv;
        for (const auto& [e, c] : den.terms())
            if (e >= 1) tinv.add_term(e - 1, -(c / c0));
        P acc;
        P result;
        for (const auto& [e, c] : num.terms()) {
            if (e >= 0) {
                result.add_term(e, c);
                continue;
            }
            P part = P::monomial(0, c);
            for (long i = 0; i < -e; ++i)
                part = poly_divmod(part * tinv, den).second;
            result = result + part;
        }
        (void)acc;
        return poly_divmod(result, den).second;
    }
};

/// The classical linking form on the Alexander module, realized on coordinate
/// vectors over R[t^{+-1}] by (1-t) xbar^T (tA - A^T)^{-1} y where xbar
/// applies t -> 1/t to the entries of x.
template <typename C>
BlanchfieldValue<C> blanchfield_pair(const SeifertMatrix& a, const C& one,
                                     const std::vector<LaurentPoly<C>>& x,
                                     const std::vector<LaurentPoly<C>>& y) {
    using P = LaurentPoly<C>;
    long n = a.size();
    if (static_cast<long>(x.size()) != n || static_cast<long>(y.size()) != n)
        throw std::invalid_argument("blanchfield_pair: wrong vector length");
    if (n == 0) return BlanchfieldValue<C>();
    Mat<P> pres = seifert_presentation(a, one);
    P det = laurent_det(pres);
    if (det.is_zero())
        throw SingularPresentation("blanchfield_pair: singular presentation");
    Mat<P> adj = laurent_adjugate(pres);
    P s;
    for (long i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        P xb = x[i].substitute_inverse();
        for (long j = 0; j < n; ++j) {
            if (y[j].is_zero() || adj[i][j].is_zero()) continue;
            s = s + xb * adj[i][j] * y[j];
        }
    }
    P one_minus_t;
    one_minus_t.add_term(0, one);
    one_minus_t.add_term(1, -one);
    return BlanchfieldValue<C>::from_fraction(one_minus_t * s, det);
}

namespace detail {

// Lift of d * value into the ring; exact because d annihilates the class.
template <typename C>
LaurentPoly<C> annihilated_lift(const BlanchfieldValue<C>& v, const LaurentPoly<C>& d) {
    if (v.is_zero()) return LaurentPoly<C>();
    return poly_divexact(d * v.num(), v.den());
}

}  // namespace detail

/// Nonsingularity of the Blanchfield form: the adjoint map into
/// Hom(H, Frac/R[t^{+-1}]) has trivial kernel.  Decided in Smith coordinates:
/// the solutions z of  z . (d_j Bl(g_i, g_j))_{ij} = 0  mod (d_j)  must all be
/// trivial mod (conj d_i).
template <typename C>
bool is_nonsingular(const SeifertMatrix& a, const C& one) {
    using P = LaurentPoly<C>;
    AlexanderModule<C> mod = module_from_seifert(a, one);
    std::vector<std::size_t> idx;  // indices of non-unit invariant factors
    const auto& diag = mod.smith().diag;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (!diag[i].is_zero() && !is_laurent_unit(diag[i])) idx.push_back(i);
    if (idx.empty()) return true;  // trivial module, vacuously nonsingular
    std::size_t m = idx.size();
    long n = mod.generator_count();

    // generators with Smith coordinates e_i: columns of U
    auto generator = [&](std::size_t col) {
        std::vector<P> g(n);
        for (long r = 0; r < n; ++r) g[r] = mod.smith().u[r][col];
        return g;
    };

    Mat<P> h(m, std::vector<P>(m));
    for (std::size_t bi = 0; bi < m; ++bi) {
        auto gi = generator(idx[bi]);
        for (std::size_t bj = 0; bj < m; ++bj) {
            auto gj = generator(idx[bj]);
            BlanchfieldValue<C> b = blanchfield_pair(a, one, gi, gj);
            h[bi][bj] = detail::annihilated_lift(b, diag[idx[bj]]);
        }
    }

    // left kernel of [H; diag(d_j)]: right kernel of the transpose
    Mat<P> stacked_t(m, std::vector<P>(2 * m));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) stacked_t[j][i] = h[i][j];
        for (std::size_t i = 0; i < m; ++i)
            stacked_t[j][m + i] = (i == j) ? diag[idx[j]] : P();
    }
    Mat<P> kernel = laurent_kernel_basis(stacked_t);
    for (const auto& vec : kernel) {
        for (std::size_t i = 0; i < m; ++i) {
            P di_bar = diag[idx[i]].substitute_inverse();
            if (!poly_divides(di_bar, vec[i])) return false;
        }
    }
    return true;
}

/// Does the class of x generate the whole module?  In Smith coordinates this
/// requires at most one non-unit invariant factor and a coordinate coprime
/// to it.
template <typename C>
bool generates(const SeifertMatrix& a, const C& one,
               const std::vector<LaurentPoly<C>>& x) {
    AlexanderModule<C> mod = module_from_seifert(a, one);
    if (mod.is_trivial()) return true;
    if (mod.invariant_factors().size() > 1 || mod.free_rank() > 0) return false;
    const auto& diag = mod.smith().diag;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (!diag[i].is_zero() && !is_laurent_unit(diag[i])) pivot = i;
    auto coords = mod.smith_coords(x);
    if (coords[pivot].is_zero()) return false;
    return poly_gcd(coords[pivot], diag[pivot]).span() == 0;
}

/// Bl(P, P) = 0 for the submodule spanned by the given coordinate vectors.
template <typename C>
bool self_annihilating(const SeifertMatrix& a, const C& one,
                       const Mat<LaurentPoly<C>>& submodule_generators) {
    for (const auto& x : submodule_generators)
        for (const auto& y : submodule_generators)
            if (!blanchfield_pair(a, one, x, y).is_zero()) return false;
    return true;
}

/// The Alexander polynomial stays a nonunit in Z_p[t^{+-1}]: at least two
/// terms survive reduction mod p.
bool mod_p_nontrivial(const SeifertMatrix& a, long p);

using AlexanderModuleQ = AlexanderModule<mpq_class>;
using AlexanderModuleZp = AlexanderModule<Zp>;

}  // namespace knotconc
