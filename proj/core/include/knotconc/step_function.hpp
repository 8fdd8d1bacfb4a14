#pragma once

#include <functional>
#include <vector>

#include "knotconc/seifert.hpp"
#include "knotconc/unit_circle.hpp"

namespace knotconc {

/// Conjugation-symmetric integer step function on the unit circle with value
/// 0 at 1.  Only the upper semicircle is stored; angles are fractions of a
/// full turn, so the stored breakpoints live in (0, 1/2].  A jump keeps the
/// arc value before, the value at the point itself (the form is singular
/// there), and the arc value after.  When the defining polynomial has
/// unit-circle roots at irrational angles the function is only available in
/// sampled form: each such root is confined to an uncertain zone with
/// rational-angle bounds and certified arc values outside; exact-integral
/// queries are then refused.
struct JumpPoint {
    UnitCirclePoint location;
    int before = 0;
    int at_value = 0;
    int after = 0;
};

struct UncertainZone {
    mpq_class lo_turns, hi_turns;  // open interval in (0, 1/2)
    int before = 0;
    int after = 0;
};

class StepFunction {
public:
    struct Arc {
        mpq_class lo, hi;  // turns, 0 <= lo < hi <= 1/2
        int value = 0;
    };

    bool exact() const { return zones_.empty(); }
    bool identically_zero() const;

    const std::vector<JumpPoint>& jumps() const { return jumps_; }
    const std::vector<UncertainZone>& zones() const { return zones_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Value at an exact point; folds into the upper semicircle first.
    /// Throws IrrationalJumpAngle for points inside an uncertain zone.
    int value_at(const UnitCirclePoint& w) const;

    int value_at_minus_one() const;

    StepFunction negated() const;

    friend StepFunction build_step_function(
        std::vector<UnitCirclePoint> jump_locations,
        std::vector<std::pair<mpq_class, mpq_class>> zone_bounds,
        const std::function<int(const UnitCirclePoint&)>& sigma,
        bool prune_degenerate);

private:
    std::vector<JumpPoint> jumps_;
    std::vector<UncertainZone> zones_;
    std::vector<Arc> arcs_;
};

/// Assemble a step function from breakpoint data, sampling arc values with
/// the supplied exact evaluator at rational mediant angles.
StepFunction build_step_function(
    std::vector<UnitCirclePoint> jump_locations,
    std::vector<std::pair<mpq_class, mpq_class>> zone_bounds,
    const std::function<int(const UnitCirclePoint&)>& sigma,
    bool prune_degenerate = false);

/// Unit-circle root analysis of an integral Laurent polynomial: the roots at
/// rational angles (roots of unity, from cyclotomic factors) plus isolating
/// turn intervals for any remaining unit-circle roots at irrational angles.
struct CircleRoots {
    std::vector<UnitCirclePoint> rational_angle;            // upper semicircle
    std::vector<std::pair<mpq_class, mpq_class>> zones;     // turns intervals
};
CircleRoots unit_circle_roots(const Laurent& poly);

/// Full Levine-Tristram signature step function of a Seifert matrix.  Jump
/// set is the unit-circle root set of the Alexander polynomial; arc and jump
/// values are exact signatures at rational-angle sample points.  If some root
/// is not a root of unity the result is in sampled form (zones non-empty).
StepFunction signature_function(const SeifertMatrix& a);

/// Exact normalized Haar integral of a step function (total measure 1).
/// Throws IrrationalJumpAngle when the function is only known in sampled
/// form.
mpq_class signature_integral(const StepFunction& f);

}  // namespace knotconc
