#pragma once

#include <gmpxx.h>

#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/unit_circle.hpp"

namespace knotconc {

/// Element of the cyclotomic field Q(zeta_q), stored as a rational vector in
/// the power basis 1, zeta, ..., zeta^{phi(q)-1} modulo the q-th cyclotomic
/// polynomial.  The conductor is fixed per value; binary operations on mixed
/// conductors lift both sides to the least common multiple.
class Cyclotomic {
public:
    Cyclotomic() : q_(1), c_(1, mpq_class(0)) {}
    explicit Cyclotomic(const mpq_class& rational) : q_(1), c_(1, rational) {}
    Cyclotomic(long conductor, std::vector<mpq_class> coords);

    /// zeta_q^k (k arbitrary, reduced mod q and into the power basis).
    static Cyclotomic root_power(long q, long k);
    /// The point w itself as a field element of conductor w.order.
    static Cyclotomic from_point(const UnitCirclePoint& w) {
        return root_power(w.order, w.num);
    }

    long conductor() const { return q_; }
    long degree() const { return static_cast<long>(c_.size()); }
    const std::vector<mpq_class>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()

    Cyclotomic lifted_to(long conductor) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    friend Cyclotomic operator*(const mpq_class& s, const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Complex conjugate: zeta -> zeta^{q-1}.
    Cyclotomic conj() const;
    /// Fixed under conjugation, i.e. lies in the real subfield.
    bool is_real() const { return *this == conj(); }

    /// Multiplicative inverse (extended Euclid against the cyclotomic
    /// polynomial).  Throws on zero.
    Cyclotomic inverse() const;

    /// Certified rational enclosure of the value as a real number.  Only
    /// meaningful for elements of the real subfield; level controls the
    /// series precision and the width shrinks as level grows.
    std::pair<mpq_class, mpq_class> real_enclosure(int level) const;

    std::string str() const;

private:
    long q_;
    std::vector<mpq_class> c_;  // length phi(q_)
};

/// Exact evaluation Sum c_k zeta^{k r mod q} of a Laurent polynomial at the
/// unit-circle point w = e^{2 pi i r/q}.  Coefficients must embed in Q.
Cyclotomic eval_at_root(const Laurent& p, const UnitCirclePoint& w);

/// Exact sign of an element of the real subfield: -1, 0, +1.  Zero is decided
/// algebraically (zero coordinate vector); nonzero signs come from rational
/// interval arithmetic refined until the enclosure excludes zero.
int certified_sign(const Cyclotomic& x);

/// Cyclotomic polynomial Phi_q as an integral Laurent polynomial in t.
Laurent cyclotomic_polynomial(long q);

long euler_phi(long q);

}  // namespace knotconc
