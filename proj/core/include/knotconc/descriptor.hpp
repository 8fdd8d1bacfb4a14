#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "knotconc/seifert.hpp"
#include "knotconc/step_function.hpp"
#include "knotconc/unit_circle.hpp"

namespace knotconc {

/// Order of a group element: a positive integer d or infinite.
struct OrderSpec {
    bool infinite = false;
    long d = 1;

    static OrderSpec finite(long d) {
        if (d < 1) throw std::invalid_argument("OrderSpec: d must be >= 1");
        return {false, d};
    }
    static OrderSpec inf() { return {true, 0}; }

    bool operator==(const OrderSpec&) const = default;
};

/// Immutable expression tree over Seifert-matrix atoms, closed under
/// connected sum, mirror image, (r,1)-cable and infection along an axis of
/// linking number zero with a declared derived-series depth tag.
class KnotDescriptor {
public:
    enum class Kind { Atom, Sum, Mirror, Cable, Infection };

    static KnotDescriptor atom(SeifertMatrix a);
    static KnotDescriptor sum(std::vector<KnotDescriptor> parts);
    static KnotDescriptor mirror(KnotDescriptor k);
    static KnotDescriptor cable(long r, KnotDescriptor k);
    static KnotDescriptor infect(KnotDescriptor carrier, int depth_tag,
                                 KnotDescriptor infected);

    Kind kind() const { return node_->kind; }
    const SeifertMatrix& atom_matrix() const { return node_->atom; }
    const std::vector<KnotDescriptor>& children() const { return node_->children; }
    long cable_r() const { return node_->r; }
    int infection_depth() const { return node_->depth; }
    const KnotDescriptor& carrier() const { return node_->children[0]; }
    const KnotDescriptor& infected() const { return node_->children[1]; }

    bool contains_infection() const;

    std::string str() const;

private:
    struct Node {
        Kind kind;
        SeifertMatrix atom;
        std::vector<KnotDescriptor> children;
        long r = 0;
        int depth = 0;
    };
    std::shared_ptr<const Node> node_;
};

/// Name resolution for the textual grammar; defaults to the built-in catalog.
using AtomResolver = std::function<SeifertMatrix(const std::string&)>;
AtomResolver catalog_resolver();

/// expr := name | "sum(" expr ("," expr)+ ")" | "mirror(" expr ")"
///       | "cable(" int "," expr ")" | "infect(" expr ",eta" int "," expr ")"
KnotDescriptor parse_descriptor(const std::string& text,
                                const AtomResolver& resolver = catalog_resolver());

/// Levine-Tristram signature of the described knot at w, exactly.  Cable
/// nodes reparametrize w -> w^r; this is unconditional at prime-power orders
/// and otherwise requires w^r to avoid the unit-circle roots of the
/// sub-descriptor's Alexander polynomial (ExceptionalPoint otherwise).
/// Infection along a linking-number-zero axis is signature-transparent.
int sigma_eval(const KnotDescriptor& k, const UnitCirclePoint& w);

/// Alexander polynomial of the described knot (no Infection nodes:
/// UnsupportedNode).  Sum multiplies, Mirror substitutes t -> 1/t, Cable(r)
/// substitutes t -> t^r; the result is Alexander-normalized.
Laurent alex_eval(const KnotDescriptor& k);
LaurentZp alex_eval_mod(const KnotDescriptor& k, long p);

/// Full signature step function; atoms must have rational-angle jumps and
/// Infection nodes are rejected.  Jump candidates with no actual jump (sums
/// cancelling) are pruned.
StepFunction signature_step(const KnotDescriptor& k);

/// Arf invariant of the described knot via the determinant criterion;
/// infection-transparent.
int descriptor_arf(const KnotDescriptor& k);

/// Abelian rho invariant: the finite sum  Sum_{r<d} sigma(e^{2 pi i r/d})
/// for finite order d, or the exact normalized signature integral for
/// infinite order.
mpq_class rho_abelian(const KnotDescriptor& k, const OrderSpec& order);

/// rho of the satellite with slice carrier, axis of the given order, and
/// infection knot J: equals rho_abelian(J, order).  Requires Arf(J) = 0
/// (ArfNonzero otherwise).  The carrier's sliceness is the caller's
/// assertion and is not (and cannot be) verified here.
mpq_class infection_rho(const KnotDescriptor& carrier, const OrderSpec& eta_order,
                        const KnotDescriptor& j);

}  // namespace knotconc
