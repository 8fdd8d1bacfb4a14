#include "knotconc/step_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotconc/cyclotomic.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {

namespace {

// Dense rational polynomial helpers for the Sturm machinery.
using QPoly = std::vector<mpq_class>;  // ascending coefficients

void qp_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpq_class qp_eval(const QPoly& p, const mpq_class& x) {
    mpq_class v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

QPoly qp_deriv(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(long(i)) * p[i]);
    qp_trim(d);
    return d;
}

QPoly qp_rem(QPoly a, const QPoly& b) {
    qp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    return a;
}

QPoly qp_divexact(QPoly a, const QPoly& b) {
    qp_trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("qp_divexact: inexact division");
    qp_trim(q);
    return q;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

QPoly qp_squarefree(const QPoly& p) {
    QPoly g = qp_gcd(p, qp_deriv(p));
    if (g.size() <= 1) return p;
    return qp_divexact(p, g);
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, qp_deriv(p)};
    while (chain.back().size() > 1) {
        QPoly r = qp_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int last = 0, count = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(qp_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// number of distinct real roots in (a, b]; a, b must not be roots
int sturm_count(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Isolate the distinct real roots of square-free p in (a, b); p(a), p(b) != 0.
std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const QPoly& p,
                                                           const mpq_class& a,
                                                           const mpq_class& b) {
    auto chain = sturm_chain(p);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    std::vector<std::pair<mpq_class, mpq_class>> work{{a, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = sturm_count(chain, lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        while (sgn(qp_eval(p, mid)) == 0) mid = (lo + mid) / 2;  // nudge off a root
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// Certified comparison of 2 cos(2 pi f) against a rational xi, for rational
// turns f = k/n: the sign of zeta_n^k + zeta_n^{-k} - xi.
int compare_two_cos(const mpq_class& f, const mpq_class& xi) {
    long n = static_cast<long>(f.get_den().get_si());
    long k = static_cast<long>(f.get_num().get_si());
    Cyclotomic v =
        Cyclotomic::root_power(n, k) + Cyclotomic::root_power(n, -k) - Cyclotomic(xi);
    return certified_sign(v);
}

mpq_class mediant(const mpq_class& a, const mpq_class& b) {
    mpq_class m(a.get_num() + b.get_num(), a.get_den() + b.get_den());
    m.canonicalize();
    return m;
}

UnitCirclePoint point_from_turns(const mpq_class& f) {
    return UnitCirclePoint(static_cast<long>(f.get_den().get_si()),
                           static_cast<long>(f.get_num().get_si()));
}

}  // namespace

bool StepFunction::identically_zero() const {
    if (!zones_.empty()) return false;
    for (const auto& a : arcs_)
        if (a.value != 0) return false;
    for (const auto& j : jumps_)
        if (j.before != 0 || j.at_value != 0 || j.after != 0) return false;
    return true;
}

int StepFunction::value_at(const UnitCirclePoint& w) const {
    if (w.is_one()) return 0;
    UnitCirclePoint u = w.upper();
    mpq_class f = u.turns();
    for (const auto& j : jumps_)
        if (j.location == u) return j.at_value;
    for (const auto& z : zones_)
        if (f > z.lo_turns && f < z.hi_turns)
            throw IrrationalJumpAngle(
                "value_at: point lies inside an uncertain zone of a sampled step "
                "function");
    for (const auto& a : arcs_)
        if (f > a.lo && f <= a.hi) return a.value;
    // zone boundary points fall through to the adjacent arc test above; a
    // point exactly on a zone boundary that is not covered is a logic error
    throw std::logic_error("StepFunction::value_at: no covering arc");
}

int StepFunction::value_at_minus_one() const {
    return value_at(UnitCirclePoint::minus_one());
}

StepFunction StepFunction::negated() const {
    StepFunction g = *this;
    for (auto& j : g.jumps_) {
        j.before = -j.before;
        j.at_value = -j.at_value;
        j.after = -j.after;
    }
    for (auto& z : g.zones_) {
        z.before = -z.before;
        z.after = -z.after;
    }
    for (auto& a : g.arcs_) a.value = -a.value;
    return g;
}

StepFunction build_step_function(
    std::vector<UnitCirclePoint> jump_locations,
    std::vector<std::pair<mpq_class, mpq_class>> zone_bounds,
    const std::function<int(const UnitCirclePoint&)>& sigma,
    bool prune_degenerate) {
    std::sort(jump_locations.begin(), jump_locations.end());
    jump_locations.erase(std::unique(jump_locations.begin(), jump_locations.end()),
                         jump_locations.end());

    // merged breakpoint list over turns in (0, 1/2]
    struct Breakpoint {
        mpq_class lo, hi;  // equal for a jump
        bool is_zone;
        std::size_t index;
    };
    std::vector<Breakpoint> bps;
    for (std::size_t i = 0; i < jump_locations.size(); ++i) {
        mpq_class f = jump_locations[i].turns();
        bps.push_back({f, f, false, i});
    }
    for (std::size_t i = 0; i < zone_bounds.size(); ++i)
        bps.push_back({zone_bounds[i].first, zone_bounds[i].second, true, i});
    std::sort(bps.begin(), bps.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
        if (!(bps[i].hi < bps[i + 1].lo))
            throw std::logic_error("build_step_function: overlapping breakpoints");

    const mpq_class half(1, 2);
    std::vector<StepFunction::Arc> arcs;
    // value of the arc immediately before breakpoint i (index bps.size() for
    // the final arc ending at 1/2)
    std::vector<int> arc_value(bps.size() + 1, 0);
    mpq_class prev_hi(0);
    for (std::size_t i = 0; i <= bps.size(); ++i) {
        mpq_class lo = prev_hi;
        mpq_class hi = (i < bps.size()) ? bps[i].lo : half;
        if (lo < hi) {
            mpq_class sample = mediant(lo, hi);
            int v = sigma(point_from_turns(sample));
            arcs.push_back({lo, hi, v});
            arc_value[i] = v;
        } else {
            arc_value[i] = (i > 0 && !arcs.empty()) ? arcs.back().value : 0;
        }
        if (i < bps.size()) prev_hi = bps[i].hi;
    }

    StepFunction f;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        int before = arc_value[i];
        int after = arc_value[i + 1];
        if (bps[i].is_zone) {
            f.zones_.push_back({bps[i].lo, bps[i].hi, before, after});
        } else {
            const UnitCirclePoint& loc = jump_locations[bps[i].index];
            int at = sigma(loc);
            if (prune_degenerate && before == at && at == after) continue;
            f.jumps_.push_back({loc, before, at, after});
        }
    }
    f.arcs_ = std::move(arcs);
    return f;
}

CircleRoots unit_circle_roots(const Laurent& poly) {
    CircleRoots out;
    if (poly.is_zero())
        throw std::invalid_argument("unit_circle_roots: zero polynomial");
    Laurent rem = alexander_normalize(poly);
    long d = rem.span();
    if (d == 0) return out;

    // rational-angle roots come from cyclotomic factors
    for (long q = 1; q <= 2 * d * d + 6; ++q) {
        if (euler_phi(q) > d) continue;
        Laurent phi = cyclotomic_polynomial(q);
        bool divided = false;
        while (poly_divides(phi, rem)) {
            rem = poly_divexact(rem, phi);
            divided = true;
        }
        if (!divided) continue;
        if (q == 1) continue;  // t = 1 is the base point, never a jump
        for (long r = 1; 2 * r <= q; ++r)
            if (std::gcd(r, q) == 1) out.rational_angle.push_back(UnitCirclePoint(q, r));
        if (rem.span() == 0) break;
    }
    std::sort(out.rational_angle.begin(), out.rational_angle.end());
    if (rem.span() == 0) return out;

    // any remaining unit-circle roots are at irrational angles; they are
    // among the roots of the reciprocal part gcd(rem, rem(1/t))
    Laurent sym = poly_gcd(rem, rem.substitute_inverse());
    if (sym.span() == 0) return out;
    long sd = sym.span();
    if (sd % 2 != 0)
        throw std::logic_error("unit_circle_roots: odd reciprocal factor");

    // substitute x = t + 1/t:  t^{-c} sym = a_0 + Sum_j a_j (t^j + t^{-j})
    long c = sym.min_exp() + sd / 2;
    QPoly P{sym.coeff(c)};
    QPoly vprev{mpq_class(2)};            // t^0 + t^0
    QPoly vcur{mpq_class(0), mpq_class(1)};  // t + 1/t
    for (long j = 1; j <= sd / 2; ++j) {
        mpq_class aj = sym.coeff(c + j);
        if (sgn(aj) != 0) {
            P.resize(std::max(P.size(), vcur.size()), mpq_class(0));
            for (std::size_t i = 0; i < vcur.size(); ++i) P[i] += aj * vcur[i];
        }
        QPoly vnext(vcur.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < vcur.size(); ++i) vnext[i + 1] = vcur[i];
        for (std::size_t i = 0; i < vprev.size(); ++i) vnext[i] -= vprev[i];
        vprev = std::move(vcur);
        vcur = std::move(vnext);
    }
    qp_trim(P);
    if (P.size() <= 1) return out;
    P = qp_squarefree(P);

    if (sgn(qp_eval(P, mpq_class(-2))) == 0 || sgn(qp_eval(P, mpq_class(2))) == 0)
        throw std::logic_error("unit_circle_roots: root at t = +-1 not extracted");
    auto xroots = isolate_roots(P, mpq_class(-2), mpq_class(2));
    if (xroots.empty()) return out;

    // tighten the x intervals, then bracket each root in rational turns
    auto chain = sturm_chain(P);
    for (auto& [xlo, xhi] : xroots) {
        for (int it = 0; it < 16; ++it) {
            mpq_class mid = (xlo + xhi) / 2;
            if (sgn(qp_eval(P, mid)) == 0) {
                mid = (xlo + 2 * xhi) / 3;
                if (sgn(qp_eval(P, mid)) == 0) break;
            }
            if (sturm_count(chain, xlo, mid) == 1)
                xhi = mid;
            else
                xlo = mid;
        }
    }

    std::vector<mpq_class> jump_turns;
    for (const auto& w : out.rational_angle) jump_turns.push_back(w.turns());

    for (long n = 64;; n *= 2) {
        if (n > (1L << 22))
            throw std::logic_error("unit_circle_roots: zone bracketing failed");
        std::vector<std::pair<mpq_class, mpq_class>> zones;
        bool ok = true;
        for (const auto& [xlo, xhi] : xroots) {
            // x(f) = 2 cos(2 pi f) is strictly decreasing for f in (0, 1/2)
            long a = 0, b = n / 2;
            while (a < b) {  // largest k with x(k/n) >= xhi
                long m = (a + b + 1) / 2;
                mpq_class f(m, n);
                f.canonicalize();
                if (compare_two_cos(f, xhi) >= 0)
                    a = m;
                else
                    b = m - 1;
            }
            long lo_k = a;
            a = lo_k;
            b = n / 2;
            while (a < b) {  // smallest k with x(k/n) <= xlo
                long m = (a + b) / 2;
                mpq_class f(m, n);
                f.canonicalize();
                if (compare_two_cos(f, xlo) <= 0)
                    b = m;
                else
                    a = m + 1;
            }
            long hi_k = b;
            if (lo_k >= hi_k || lo_k == 0) {
                ok = false;
                break;
            }
            mpq_class flo(lo_k, n), fhi(hi_k, n);
            flo.canonicalize();
            fhi.canonicalize();
            for (const auto& jt : jump_turns)
                if (jt > flo && jt < fhi) ok = false;
            zones.emplace_back(flo, fhi);
        }
        if (ok)
            for (std::size_t i = 0; i + 1 < zones.size(); ++i)
                if (!(zones[i].second < zones[i + 1].first)) ok = false;
        if (ok) {
            out.zones = std::move(zones);
            return out;
        }
    }
}

StepFunction signature_function(const SeifertMatrix& a) {
    Laurent delta = alexander_poly(a);
    CircleRoots roots = unit_circle_roots(delta);
    auto sampler = [&a](const UnitCirclePoint& w) { return levine_tristram(a, w); };
    return build_step_function(roots.rational_angle, roots.zones, sampler,
                               /*prune_degenerate=*/false);
}

mpq_class signature_integral(const StepFunction& f) {
    if (!f.exact())
        throw IrrationalJumpAngle(
            "signature_integral: step function has uncertain zones; exact integral "
            "unavailable");
    mpq_class total(0);
    for (const auto& arc : f.arcs())
        total += mpq_class(2 * arc.value) * (arc.hi - arc.lo);
    return total;
}

}  // namespace knotconc
