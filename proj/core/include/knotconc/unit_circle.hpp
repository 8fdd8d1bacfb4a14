#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace knotconc {

/// Exact point e^{2 pi i r/q} on the unit circle, with gcd(r, q) = 1 and
/// 0 <= r < q.  q is the multiplicative order of the point.
struct UnitCirclePoint {
    long order = 1;  // q
    long num = 0;    // r

    UnitCirclePoint() = default;
    UnitCirclePoint(long q, long r) {
        if (q < 1) throw std::invalid_argument("UnitCirclePoint: order must be positive");
        r %= q;
        if (r < 0) r += q;
        long g = std::gcd(r, q);
        if (g == 0) g = q;  // r == 0
        order = q / g;
        num = r / g;
        if (order == 1) num = 0;
    }

    static UnitCirclePoint one() { return UnitCirclePoint(1, 0); }
    static UnitCirclePoint minus_one() { return UnitCirclePoint(2, 1); }

    bool is_one() const { return order == 1; }

    UnitCirclePoint conj() const { return UnitCirclePoint(order, order - num); }
    UnitCirclePoint pow(long k) const {
        // (r k) mod q can overflow for large inputs; orders here are small.
        long r = static_cast<long>((static_cast<__int128>(num) * k) % order);
        return UnitCirclePoint(order, r);
    }

    /// Angle as a fraction of a full turn, in [0, 1).
    mpq_class turns() const {
        mpq_class t(num, order);
        t.canonicalize();
        return t;
    }
    bool in_open_upper_semicircle() const { return 2 * num > 0 && 2 * num < order; }
    bool is_minus_one() const { return order == 2; }

    /// Fold into the closed upper semicircle by conjugating if necessary.
    UnitCirclePoint upper() const {
        return (2 * num > order) ? conj() : *this;
    }

    bool prime_power_order() const {
        long q = order;
        if (q < 2) return false;
        long p = 0;
        for (long d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) return true;  // q prime
        while (q % p == 0) q /= p;
        return q == 1;
    }

    bool operator==(const UnitCirclePoint&) const = default;
    bool operator<(const UnitCirclePoint& o) const {
        // order by angle
        return static_cast<__int128>(num) * o.order <
               static_cast<__int128>(o.num) * order;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(order); }

    /// Parse "r/q" (the point e^{2 pi i r/q}).
    static UnitCirclePoint parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("UnitCirclePoint: expected r/q, got " + s);
        long r = std::stol(s.substr(0, slash));
        long q = std::stol(s.substr(slash + 1));
        return UnitCirclePoint(q, r);
    }
};

}  // namespace knotconc
