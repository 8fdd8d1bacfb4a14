#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotconc {

/// Coefficient ring selector used at API boundaries (CLI, group series).
struct RingTag {
    enum class Kind { Integers, Rationals, ModP };
    Kind kind = Kind::Integers;
    long p = 0;  // set when kind == ModP

    static RingTag integers() { return {Kind::Integers, 0}; }
    static RingTag rationals() { return {Kind::Rationals, 0}; }
    static RingTag mod(long p) { return {Kind::ModP, p}; }

    bool operator==(const RingTag&) const = default;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime field element with runtime modulus.  A value with p == 0 is an
/// unbound small integer; it picks up the modulus on first contact with a
/// bound value, so Zp(0) and Zp(1) work as generic zero/one literals.
class Zp {
public:
    Zp() = default;
    Zp(long long v) : v_(v) {}
    Zp(long long v, long long p) : v_(v), p_(p) {
        if (p_ < 2) throw std::invalid_argument("Zp: modulus must be >= 2");
        reduce();
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool bound() const { return p_ != 0; }

    friend Zp operator+(const Zp& a, const Zp& b) {
        auto [x, y, p] = align(a, b);
        return make(x + y, p);
    }
    friend Zp operator-(const Zp& a, const Zp& b) {
        auto [x, y, p] = align(a, b);
        return make(x - y, p);
    }
    friend Zp operator*(const Zp& a, const Zp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Zp(x * y);
        return make(static_cast<long long>(static_cast<__int128>(x) * y % p), p);
    }
    Zp operator-() const { return p_ ? make(-v_, p_) : Zp(-v_); }

    Zp inverse() const {
        if (!bound()) throw std::logic_error("Zp::inverse: unbound element");
        if (v_ == 0) throw std::domain_error("Zp::inverse: zero");
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw std::domain_error("Zp::inverse: not invertible");
        return make(t, p_);
    }
    friend Zp operator/(const Zp& a, const Zp& b) {
        Zp bb = b;
        if (!bb.bound() && a.bound()) bb = Zp(b.v_, a.p_);
        return a * bb.inverse();
    }

    friend bool operator==(const Zp& a, const Zp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return x == y;
        return (x - y) % p == 0;
    }

    std::string str() const { return std::to_string(v_); }

private:
    long long v_ = 0;
    long long p_ = 0;

    void reduce() {
        if (p_) {
            v_ %= p_;
            if (v_ < 0) v_ += p_;
        }
    }
    static Zp make(long long v, long long p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        z.reduce();
        return z;
    }
    static std::tuple<long long, long long, long long> align(const Zp& a, const Zp& b) {
        long long p = a.p_ ? a.p_ : b.p_;
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw std::logic_error("Zp: mixed moduli");
        long long x = a.v_, y = b.v_;
        if (p) {
            x %= p;
            y %= p;
        }
        return {x, y, p};
    }
};

inline bool coeff_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const Zp& x) {
    return x.bound() ? (x.value() % x.modulus() == 0) : x.value() == 0;
}

inline std::string coeff_str(const mpq_class& x) { return x.get_str(); }
inline std::string coeff_str(const Zp& x) { return x.str(); }

inline mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace knotconc
