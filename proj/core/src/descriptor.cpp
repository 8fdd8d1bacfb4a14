#include "knotconc/descriptor.hpp"

#include <cctype>
#include <sstream>

#include "knotconc/cyclotomic.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {

KnotDescriptor KnotDescriptor::atom(SeifertMatrix a) {
    KnotDescriptor k;
    k.node_ = std::make_shared<Node>(Node{Kind::Atom, std::move(a), {}, 0, 0});
    return k;
}

KnotDescriptor KnotDescriptor::sum(std::vector<KnotDescriptor> parts) {
    if (parts.empty()) throw std::invalid_argument("sum: empty part list");
    if (parts.size() == 1) return parts[0];
    KnotDescriptor k;
    k.node_ = std::make_shared<Node>(Node{Kind::Sum, {}, std::move(parts), 0, 0});
    return k;
}

KnotDescriptor KnotDescriptor::mirror(KnotDescriptor inner) {
    KnotDescriptor k;
    k.node_ = std::make_shared<Node>(Node{Kind::Mirror, {}, {std::move(inner)}, 0, 0});
    return k;
}

KnotDescriptor KnotDescriptor::cable(long r, KnotDescriptor inner) {
    if (r < 1) throw std::invalid_argument("cable: r must be >= 1");
    KnotDescriptor k;
    k.node_ = std::make_shared<Node>(Node{Kind::Cable, {}, {std::move(inner)}, r, 0});
    return k;
}

KnotDescriptor KnotDescriptor::infect(KnotDescriptor carrier, int depth_tag,
                                      KnotDescriptor infected) {
    if (depth_tag < 0) throw std::invalid_argument("infect: depth tag must be >= 0");
    KnotDescriptor k;
    k.node_ = std::make_shared<Node>(
        Node{Kind::Infection, {}, {std::move(carrier), std::move(infected)}, 0, depth_tag});
    return k;
}

bool KnotDescriptor::contains_infection() const {
    if (kind() == Kind::Infection) return true;
    for (const auto& c : node_->children)
        if (c.contains_infection()) return true;
    return false;
}

std::string KnotDescriptor::str() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Atom:
            os << (node_->atom.name().empty() ? "<matrix>" : node_->atom.name());
            break;
        case Kind::Sum: {
            os << "sum(";
            for (std::size_t i = 0; i < children().size(); ++i) {
                if (i) os << ",";
                os << children()[i].str();
            }
            os << ")";
            break;
        }
        case Kind::Mirror:
            os << "mirror(" << children()[0].str() << ")";
            break;
        case Kind::Cable:
            os << "cable(" << cable_r() << "," << children()[0].str() << ")";
            break;
        case Kind::Infection:
            os << "infect(" << carrier().str() << ",eta" << infection_depth() << ","
               << infected().str() << ")";
            break;
    }
    return os.str();
}

AtomResolver catalog_resolver() {
    return [](const std::string& name) {
        auto m = catalog_lookup(name);
        if (!m) throw ParseError("unknown atom: " + name);
        return *m;
    };
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const AtomResolver& resolve;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos) + " in: " + s);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected name at position " +
                                           std::to_string(pos) + " in: " + s);
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer at position " +
                                           std::to_string(pos));
        return std::stol(s.substr(start, pos - start));
    }

    KnotDescriptor expr() {
        std::string name = ident();
        if (name == "sum") {
            expect('(');
            std::vector<KnotDescriptor> parts{expr()};
            while (consume(',')) parts.push_back(expr());
            expect(')');
            if (parts.size() < 2) throw ParseError("sum requires at least two summands");
            return KnotDescriptor::sum(std::move(parts));
        }
        if (name == "mirror") {
            expect('(');
            KnotDescriptor inner = expr();
            expect(')');
            return KnotDescriptor::mirror(std::move(inner));
        }
        if (name == "cable") {
            expect('(');
            long r = integer();
            if (r < 1) throw ParseError("cable winding must be >= 1");
            expect(',');
            KnotDescriptor inner = expr();
            expect(')');
            return KnotDescriptor::cable(r, std::move(inner));
        }
        if (name == "infect") {
            expect('(');
            KnotDescriptor carrier = expr();
            expect(',');
            std::string tag = ident();
            if (tag.rfind("eta", 0) != 0)
                throw ParseError("infect: expected eta<k> axis tag, got " + tag);
            long depth = std::stol(tag.substr(3));
            expect(',');
            KnotDescriptor infected = expr();
            expect(')');
            return KnotDescriptor::infect(std::move(carrier), static_cast<int>(depth),
                                          std::move(infected));
        }
        return KnotDescriptor::atom(resolve(name));
    }
};

// Alexander polynomial treating Infection nodes as transparent (sound at the
// abelian level because the axis has linking number zero); used internally
// for the generic-point validity check and the Arf criterion.
Laurent alex_abelian(const KnotDescriptor& k) {
    using Kind = KnotDescriptor::Kind;
    switch (k.kind()) {
        case Kind::Atom:
            return alexander_poly(k.atom_matrix());
        case Kind::Sum: {
            Laurent p(mpq_class(1));
            for (const auto& c : k.children()) p = p * alex_abelian(c);
            return alexander_normalize(p);
        }
        case Kind::Mirror:
            return alexander_normalize(alex_abelian(k.children()[0]).substitute_inverse());
        case Kind::Cable:
            return alexander_normalize(
                alex_abelian(k.children()[0]).substitute_power(k.cable_r()));
        case Kind::Infection:
            return alex_abelian(k.carrier());
    }
    throw std::logic_error("alex_abelian: bad node");
}

// Jump candidate locations (upper semicircle) for the step function,
// structurally: atoms report their exact root sets, cables pull back.
std::vector<UnitCirclePoint> jump_candidates(const KnotDescriptor& k) {
    using Kind = KnotDescriptor::Kind;
    switch (k.kind()) {
        case Kind::Atom: {
            CircleRoots roots = unit_circle_roots(alexander_poly(k.atom_matrix()));
            if (!roots.zones.empty())
                throw IrrationalJumpAngle(
                    "signature_step: atom " + k.atom_matrix().name() +
                    " has unit-circle roots at irrational angles");
            return roots.rational_angle;
        }
        case Kind::Sum: {
            std::vector<UnitCirclePoint> all;
            for (const auto& c : k.children()) {
                auto v = jump_candidates(c);
                all.insert(all.end(), v.begin(), v.end());
            }
            return all;
        }
        case Kind::Mirror:
            return jump_candidates(k.children()[0]);
        case Kind::Cable: {
            long r = k.cable_r();
            std::vector<UnitCirclePoint> out;
            for (const auto& u : jump_candidates(k.children()[0])) {
                for (const UnitCirclePoint& v : {u, u.conj()}) {
                    // solutions of w^r = v: angles (v.num + j v.order)/(r v.order)
                    for (long j = 0; j < r; ++j) {
                        UnitCirclePoint w(r * v.order, v.num + j * v.order);
                        if (!w.is_one()) out.push_back(w.upper());
                    }
                }
            }
            return out;
        }
        case Kind::Infection:
            throw UnsupportedNode("signature_step: infection nodes are not supported");
    }
    throw std::logic_error("jump_candidates: bad node");
}

}  // namespace

KnotDescriptor parse_descriptor(const std::string& text, const AtomResolver& resolver) {
    Parser p{text, 0, resolver};
    KnotDescriptor k = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input at position " + std::to_string(p.pos) +
                         " in: " + text);
    return k;
}

namespace {

int sigma_eval_impl(const KnotDescriptor& k, const UnitCirclePoint& w, bool checked) {
    using Kind = KnotDescriptor::Kind;
    if (w.is_one()) return 0;
    switch (k.kind()) {
        case Kind::Atom:
            return levine_tristram(k.atom_matrix(), w);
        case Kind::Sum: {
            int s = 0;
            for (const auto& c : k.children()) s += sigma_eval_impl(c, w, checked);
            return s;
        }
        case Kind::Mirror:
            return -sigma_eval_impl(k.children()[0], w, checked);
        case Kind::Cable: {
            UnitCirclePoint wr = w.pow(k.cable_r());
            if (checked && !w.prime_power_order()) {
                Laurent delta = alex_abelian(k.children()[0]);
                if (!wr.is_one() && eval_at_root(delta, wr).is_zero())
                    throw ExceptionalPoint(
                        "sigma_eval: cable reparametrization at " + w.str() +
                        " lands on a root of the Alexander polynomial; evaluation "
                        "is only guaranteed at prime-power orders");
            }
            return sigma_eval_impl(k.children()[0], wr, checked);
        }
        case Kind::Infection:
            return sigma_eval_impl(k.carrier(), w, checked);
    }
    throw std::logic_error("sigma_eval: bad node");
}

}  // namespace

int sigma_eval(const KnotDescriptor& k, const UnitCirclePoint& w) {
    return sigma_eval_impl(k, w, /*checked=*/true);
}

Laurent alex_eval(const KnotDescriptor& k) {
    if (k.contains_infection())
        throw UnsupportedNode("alex_eval: infection nodes are not supported");
    return alex_abelian(k);
}

LaurentZp alex_eval_mod(const KnotDescriptor& k, long p) {
    if (!is_prime(p)) throw std::invalid_argument("alex_eval_mod: p must be prime");
    return alexander_normalize(reduce_mod(alex_eval(k), p));
}

StepFunction signature_step(const KnotDescriptor& k) {
    std::vector<UnitCirclePoint> candidates = jump_candidates(k);
    // Arc samples avoid the pulled-back root set, so the checked evaluator
    // never refuses there.  At the jump points themselves cables are read
    // through the reparametrization w -> w^r regardless of the order of w;
    // that pullback value is what the step function carries.
    auto sampler = [&k](const UnitCirclePoint& w) {
        return sigma_eval_impl(k, w, /*checked=*/false);
    };
    return build_step_function(std::move(candidates), {}, sampler,
                               /*prune_degenerate=*/true);
}

int descriptor_arf(const KnotDescriptor& k) {
    mpq_class v = alex_abelian(k).value_at_minus_one();
    mpz_class d = abs(v.get_num()) % 8;
    return (d == 1 || d == 7) ? 0 : 1;
}

mpq_class rho_abelian(const KnotDescriptor& k, const OrderSpec& order) {
    if (order.infinite) return signature_integral(signature_step(k));
    mpq_class total(0);
    for (long r = 0; r < order.d; ++r)
        total += sigma_eval(k, UnitCirclePoint(order.d, r));
    return total;
}

mpq_class infection_rho(const KnotDescriptor& carrier, const OrderSpec& eta_order,
                        const KnotDescriptor& j) {
    (void)carrier;  // sliceness is the caller's assertion; rho does not see K
    if (descriptor_arf(j) != 0)
        throw ArfNonzero("infection_rho: Arf(J) must vanish");
    return rho_abelian(j, eta_order);
}

}  // namespace knotconc
