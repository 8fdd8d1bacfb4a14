#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotconc/ring.hpp"

namespace knotconc {

/// Laurent polynomial Sum c_e t^e with coefficients in C (mpq_class or Zp).
/// No zero coefficients are stored.
template <typename C>
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const C& constant) {
        if (!coeff_is_zero(constant)) c_[0] = constant;
    }

    static LaurentPoly monomial(long e, const C& c) {
        LaurentPoly p;
        if (!coeff_is_zero(c)) p.c_[e] = c;
        return p;
    }
    static LaurentPoly t() { return monomial(1, C(1)); }

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    std::size_t term_count() const { return c_.size(); }

    long min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
        return c_.begin()->first;
    }
    long max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
        return c_.rbegin()->first;
    }
    /// max_exp - min_exp; the degree of the associated honest polynomial.
    long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    C coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? C(0) : it->second;
    }
    const std::map<long, C>& terms() const { return c_; }

    void add_term(long e, const C& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!coeff_is_zero(c)) c_[e] = c;
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) c_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(const C& s, const LaurentPoly& a) {
        LaurentPoly r;
        if (coeff_is_zero(s)) return r;
        for (const auto& [e, c] : a.c_) {
            C v = s * c;
            if (!coeff_is_zero(v)) r.c_[e] = v;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        auto it = o.c_.begin();
        for (const auto& [e, c] : c_) {
            if (e != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by t^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }
    /// t -> t^r, r >= 1.
    LaurentPoly substitute_power(long r) const {
        if (r < 1) throw std::invalid_argument("substitute_power: r must be >= 1");
        LaurentPoly q;
        for (const auto& [e, c] : c_) q.c_[e * r] = c;
        return q;
    }
    /// t -> t^{-1}.
    LaurentPoly substitute_inverse() const {
        LaurentPoly q;
        for (const auto& [e, c] : c_) q.c_[-e] = c;
        return q;
    }

    C value_at_one() const {
        C s(0);
        for (const auto& [e, c] : c_) s = s + c;
        return s;
    }
    C value_at_minus_one() const {
        C s(0);
        for (const auto& [e, c] : c_) s = s + ((e % 2) ? -c : c);
        return s;
    }

    C leading_coeff() const { return is_zero() ? C(0) : c_.rbegin()->second; }
    C trailing_coeff() const { return is_zero() ? C(0) : c_.begin()->second; }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            std::string cs = coeff_str(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-", cs = cs.substr(1);
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            long e = it->first;
            if (e == 0) {
                os << cs;
            } else {
                if (cs != "1") os << cs << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<long, C> c_;
};

using Laurent = LaurentPoly<mpq_class>;
using LaurentZp = LaurentPoly<Zp>;

/// Division with remainder in the Laurent ring over a field: a = q*b + r
/// where, after shifting both operands to honest polynomials, deg r < deg b.
template <typename C>
std::pair<LaurentPoly<C>, LaurentPoly<C>> poly_divmod(const LaurentPoly<C>& a,
                                                      const LaurentPoly<C>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    if (a.is_zero()) return {LaurentPoly<C>(), LaurentPoly<C>()};
    long alpha = a.min_exp(), beta = b.min_exp();
    LaurentPoly<C> r = a.shifted(-alpha);
    LaurentPoly<C> d = b.shifted(-beta);
    LaurentPoly<C> q;
    long degd = d.max_exp();
    C lead = d.leading_coeff();
    while (!r.is_zero() && r.max_exp() >= degd) {
        long e = r.max_exp() - degd;
        C f = r.leading_coeff() / lead;
        q.add_term(e, f);
        r = r - LaurentPoly<C>::monomial(e, f) * d;
    }
    return {q.shifted(alpha - beta), r.shifted(alpha)};
}

template <typename C>
bool poly_divides(const LaurentPoly<C>& d, const LaurentPoly<C>& a) {
    if (a.is_zero()) return true;
    return poly_divmod(a, d).second.is_zero();
}

template <typename C>
LaurentPoly<C> poly_divexact(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly_divexact: inexact division");
    return q;
}

/// Shift so the lowest exponent is 0 and divide by the leading coefficient.
/// Canonical unit-normal form over a field.
template <typename C>
LaurentPoly<C> poly_monic(const LaurentPoly<C>& a) {
    if (a.is_zero()) return a;
    LaurentPoly<C> r = a.shifted(-a.min_exp());
    C lead = r.leading_coeff();
    return (C(1) / lead) * r;
}

/// gcd over a field, returned monic with lowest exponent 0.
template <typename C>
LaurentPoly<C> poly_gcd(LaurentPoly<C> a, LaurentPoly<C> b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return poly_monic(a);
}

/// A unit in R[t^{+-1}]: a single term with invertible coefficient.
template <typename C>
bool is_laurent_unit(const LaurentPoly<C>& a) {
    return a.is_monomial();
}
inline bool is_laurent_unit_integral(const Laurent& a) {
    if (!a.is_monomial()) return false;
    mpq_class c = a.trailing_coeff();
    return c == 1 || c == -1;
}

/// Alexander normalization for integral/rational polynomials: lowest exponent
/// 0 with positive value at t = 1.  Falls back to a positive leading
/// coefficient when the value at 1 vanishes.
inline Laurent alexander_normalize(const Laurent& p) {
    if (p.is_zero()) return p;
    Laurent r = p.shifted(-p.min_exp());
    mpq_class at1 = r.value_at_one();
    if (sgn(at1) < 0 || (sgn(at1) == 0 && sgn(r.leading_coeff()) < 0)) r = -r;
    return r;
}
inline LaurentZp alexander_normalize(const LaurentZp& p) {
    if (p.is_zero()) return p;
    return p.shifted(-p.min_exp());
}

inline bool is_alexander_normalized(const Laurent& p) {
    return p.is_zero() || (p.min_exp() == 0 && sgn(p.value_at_one()) > 0);
}

inline LaurentZp reduce_mod(const Laurent& p, long q) {
    LaurentZp r;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1)
            throw std::domain_error("reduce_mod: non-integral coefficient");
        mpz_class num = c.get_num() % q;
        r.add_term(e, Zp(num.get_si(), q));
    }
    return r;
}

}  // namespace knotconc
