#include "knotconc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotconc {

namespace {

// Dense integer polynomial, ascending coefficients, used for the cyclotomic
// polynomial tables.
using ZVec = std::vector<mpz_class>;

void zvec_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Exact division of x^q - 1 style products; divisor must be monic.
ZVec zvec_divexact(ZVec a, const ZVec& b) {
    zvec_trim(a);
    ZVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size()) {
        mpz_class f = a.back();  // b monic
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        zvec_trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) zvec_trim(a);
    }
    if (!a.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    zvec_trim(q);
    return q;
}

const ZVec& phi_poly(long q);

std::map<long, ZVec> g_phi_cache;
std::mutex g_phi_mutex;

ZVec compute_phi_poly(long q) {
    if (q == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    ZVec num(q + 1, mpz_class(0));                     // x^q - 1
    num[0] = -1;
    num[q] = 1;
    for (long d = 1; d < q; ++d)
        if (q % d == 0) num = zvec_divexact(num, phi_poly(d));
    return num;
}

const ZVec& phi_poly(long q) {
    // callers hold g_phi_mutex via table(); recursion re-enters here
    auto it = g_phi_cache.find(q);
    if (it != g_phi_cache.end()) return it->second;
    ZVec v = compute_phi_poly(q);
    return g_phi_cache.emplace(q, std::move(v)).first->second;
}

// Per-conductor data: phi(q) and the power basis image of zeta^m for every
// m in [0, q).
struct CycloTable {
    long q = 1;
    long deg = 1;
    std::vector<ZVec> power;  // power[m], length deg
};

std::map<long, CycloTable> g_table_cache;
std::mutex g_table_mutex;

const CycloTable& table(long q) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_cache.find(q);
    if (it != g_table_cache.end()) return it->second;

    ZVec phi;
    {
        std::lock_guard<std::mutex> lock2(g_phi_mutex);
        phi = phi_poly(q);
    }
    CycloTable t;
    t.q = q;
    t.deg = static_cast<long>(phi.size()) - 1;
    t.power.resize(q);
    ZVec cur(t.deg, mpz_class(0));
    if (t.deg > 0) cur[0] = 1;
    t.power[0] = cur;
    for (long m = 1; m < q; ++m) {
        // cur <- t * cur reduced mod phi
        ZVec next(t.deg, mpz_class(0));
        mpz_class top = cur.empty() ? mpz_class(0) : cur[t.deg - 1];
        for (long i = t.deg - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (long i = 0; i < t.deg; ++i) next[i] -= top * phi[i];
        t.power[m] = next;
        cur = next;
    }
    return g_table_cache.emplace(q, std::move(t)).first->second;
}

}  // namespace

long euler_phi(long q) {
    long result = q;
    long n = q;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Laurent cyclotomic_polynomial(long q) {
    ZVec v;
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        v = phi_poly(q);
    }
    Laurent p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(static_cast<long>(i), mpq_class(v[i]));
    return p;
}

Cyclotomic::Cyclotomic(long conductor, std::vector<mpq_class> coords) : q_(conductor) {
    const CycloTable& t = table(q_);
    if (static_cast<long>(coords.size()) != t.deg)
        throw std::invalid_argument("Cyclotomic: coordinate length must be phi(q)");
    c_ = std::move(coords);
}

Cyclotomic Cyclotomic::root_power(long q, long k) {
    const CycloTable& t = table(q);
    k %= q;
    if (k < 0) k += q;
    std::vector<mpq_class> c(t.deg);
    for (long i = 0; i < t.deg; ++i) c[i] = mpq_class(t.power[k][i]);
    Cyclotomic z;
    z.q_ = q;
    z.c_ = std::move(c);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("Cyclotomic: not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::lifted_to(long conductor) const {
    if (conductor == q_) return *this;
    if (conductor % q_ != 0)
        throw std::invalid_argument("Cyclotomic: conductor lift must be to a multiple");
    const CycloTable& t = table(conductor);
    long step = conductor / q_;
    std::vector<mpq_class> out(t.deg, mpq_class(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        const ZVec& rep = t.power[(static_cast<long>(k) * step) % conductor];
        for (long i = 0; i < t.deg; ++i)
            if (rep[i] != 0) out[i] += c_[k] * mpq_class(rep[i]);
    }
    Cyclotomic z;
    z.q_ = conductor;
    z.c_ = std::move(out);
    return z;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long l = std::lcm(a.q_, b.q_);
    Cyclotomic x = a.lifted_to(l), y = b.lifted_to(l);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    long l = std::lcm(a.q_, b.q_);
    Cyclotomic x = a.lifted_to(l), y = b.lifted_to(l);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

Cyclotomic operator*(const mpq_class& s, const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& v : x.c_) v *= s;
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long l = std::lcm(a.q_, b.q_);
    Cyclotomic x = a.lifted_to(l), y = b.lifted_to(l);
    const CycloTable& t = table(l);
    long deg = t.deg;
    // raw convolution up to degree 2 deg - 2, then fold via the power table
    std::vector<mpq_class> raw(2 * deg - 1, mpq_class(0));
    for (long i = 0; i < deg; ++i) {
        if (sgn(x.c_[i]) == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (sgn(y.c_[j]) == 0) continue;
            raw[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::vector<mpq_class> out(deg, mpq_class(0));
    for (long i = 0; i < deg && i < static_cast<long>(raw.size()); ++i) out[i] = raw[i];
    for (long m = deg; m < static_cast<long>(raw.size()); ++m) {
        if (sgn(raw[m]) == 0) continue;
        const ZVec& rep = t.power[m % l];
        for (long i = 0; i < deg; ++i)
            if (rep[i] != 0) out[i] += raw[m] * mpq_class(rep[i]);
    }
    Cyclotomic z;
    z.q_ = l;
    z.c_ = std::move(out);
    return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    long l = std::lcm(a.q_, b.q_);
    Cyclotomic x = a.lifted_to(l), y = b.lifted_to(l);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
        if (x.c_[i] != y.c_[i]) return false;
    return true;
}

Cyclotomic Cyclotomic::conj() const {
    const CycloTable& t = table(q_);
    std::vector<mpq_class> out(t.deg, mpq_class(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        long m = (q_ - static_cast<long>(k)) % q_;
        const ZVec& rep = t.power[m];
        for (long i = 0; i < t.deg; ++i)
            if (rep[i] != 0) out[i] += c_[k] * mpq_class(rep[i]);
    }
    Cyclotomic z;
    z.q_ = q_;
    z.c_ = std::move(out);
    return z;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero");
    // extended Euclid in Q[x] between the coordinate polynomial and Phi_q
    using QV = std::vector<mpq_class>;
    auto trim = [](QV& v) {
        while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    };
    const CycloTable& t = table(q_);
    ZVec phi;
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        phi = phi_poly(q_);
    }
    QV r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = mpq_class(phi[i]);
    QV r1 = c_;
    trim(r1);
    QV s0{}, s1{mpq_class(1)};  // s tracks the coefficient of this element
    while (!r1.empty()) {
        // divide r0 by r1
        QV q, rem = r0;
        trim(rem);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class f = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q s1)
        QV s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1)
        throw std::logic_error("Cyclotomic::inverse: gcd with Phi_q not constant");
    mpq_class lead = r0[0];
    std::vector<mpq_class> out(t.deg, mpq_class(0));
    // s0 may exceed deg: fold through the power table
    for (std::size_t k = 0; k < s0.size(); ++k) {
        if (sgn(s0[k]) == 0) continue;
        mpq_class v = s0[k] / lead;
        if (static_cast<long>(k) < t.deg) {
            out[k] += v;
        } else {
            const ZVec& rep = t.power[static_cast<long>(k) % q_];
            for (long i = 0; i < t.deg; ++i)
                if (rep[i] != 0) out[i] += v * mpq_class(rep[i]);
        }
    }
    Cyclotomic z;
    z.q_ = q_;
    z.c_ = std::move(out);
    return z;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "[q=" << q_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

Cyclotomic eval_at_root(const Laurent& p, const UnitCirclePoint& w) {
    long q = w.order;
    const CycloTable& t = table(q);
    std::vector<mpq_class> out(t.deg, mpq_class(0));
    for (const auto& [e, c] : p.terms()) {
        long m = static_cast<long>(((static_cast<__int128>(e) * w.num) % q + q) % q);
        const ZVec& rep = t.power[m];
        for (long i = 0; i < t.deg; ++i)
            if (rep[i] != 0) out[i] += c * mpq_class(rep[i]);
    }
    return Cyclotomic(q, std::move(out));
}

// ---------------------------------------------------------------------------
// Certified sign via rational interval arithmetic.  cos(2 pi k/q) is enclosed
// with exact rational endpoints: pi from the Machin formula with alternating
// series tails, cosine from a Taylor partial sum with the Lagrange remainder
// bound.  No floating point is involved anywhere.

namespace {

struct QInterval {
    mpq_class lo, hi;
};

QInterval pi_enclosure(int level) {
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    auto arctan_inv = [](long u, int terms) {
        mpq_class lo(0), hi(0), sum(0);
        mpq_class u2 = mpq_class(u) * u;
        mpq_class pw(1, u);  // u^{-(2j+1)} running power
        for (int j = 0; j < terms; ++j) {
            mpq_class term = pw / (2 * j + 1);
            if (j % 2 == 0)
                sum += term;
            else
                sum -= term;
            pw /= u2;
        }
        // alternating series: the limit lies between consecutive partial sums
        mpq_class nxt = pw / (2 * terms + 1);
        if (terms % 2 == 0) {
            lo = sum;
            hi = sum + nxt;
        } else {
            lo = sum - nxt;
            hi = sum;
        }
        return QInterval{lo, hi};
    };
    int terms = 10 + 6 * level;
    QInterval a = arctan_inv(5, terms);
    QInterval b = arctan_inv(239, terms / 2 + 2);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

// cos(2 pi f) for rational f in [0, 1/4]; theta = 2 pi f <= pi/2.
QInterval cos_reduced(const mpq_class& f, int level) {
    QInterval pi = pi_enclosure(level);
    mpq_class m = f * (pi.lo + pi.hi);       // midpoint of 2 pi f
    mpq_class halfw = f * (pi.hi - pi.lo);   // interval half width (times 2/2)
    int terms = 10 + 4 * level;
    mpq_class m2 = m * m;
    mpq_class term(1), sum(0);
    for (int j = 0; j < terms; ++j) {
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
        term = term * m2 / ((2 * j + 1) * (2 * j + 2));
    }
    // Lagrange remainder plus Lipschitz slack for the angle width
    mpq_class delta = term + halfw;
    return {sum - delta, sum + delta};
}

QInterval cos2pi(long k, long q, int level) {
    mpq_class f(k % q, q);
    f.canonicalize();
    if (f < 0) f += 1;
    bool neg = false;
    if (f > mpq_class(1, 2)) f = 1 - f;
    if (f > mpq_class(1, 4)) {
        f = mpq_class(1, 2) - f;
        neg = true;
    }
    QInterval c = cos_reduced(f, level);
    if (neg) return {-c.hi, -c.lo};
    return c;
}

std::map<std::pair<long, int>, std::vector<QInterval>> g_cos_cache;
std::mutex g_cos_mutex;

const std::vector<QInterval>& cos_table(long q, int level) {
    std::lock_guard<std::mutex> lock(g_cos_mutex);
    auto key = std::make_pair(q, level);
    auto it = g_cos_cache.find(key);
    if (it != g_cos_cache.end()) return it->second;
    std::vector<QInterval> v(q);
    for (long k = 0; k < q; ++k) v[k] = cos2pi(k, q, level);
    return g_cos_cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

std::pair<mpq_class, mpq_class> Cyclotomic::real_enclosure(int level) const {
    // Re(x) = Sum c_k cos(2 pi k/q); for real x this equals x.
    const auto& cos = cos_table(q_, level);
    mpq_class lo(0), hi(0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        if (sgn(c_[k]) > 0) {
            lo += c_[k] * cos[k].lo;
            hi += c_[k] * cos[k].hi;
        } else {
            lo += c_[k] * cos[k].hi;
            hi += c_[k] * cos[k].lo;
        }
    }
    return {lo, hi};
}

int certified_sign(const Cyclotomic& x) {
    if (x.is_zero()) return 0;
    if (!x.is_real())
        throw std::domain_error("certified_sign: element is not in the real subfield");
    if (x.is_rational()) return sgn(x.rational_value());
    for (int level = 0; level < 64; ++level) {
        auto [lo, hi] = x.real_enclosure(level);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
    throw std::logic_error("certified_sign: enclosure failed to separate from zero");
}

}  // namespace knotconc
