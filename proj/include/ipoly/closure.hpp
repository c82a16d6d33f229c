#pragma once

#include "ipoly/core.hpp"
#include "ipoly/ops.hpp"

namespace ipoly {

/// Result of a fixpoint closure sweep.
struct ClosureResult {
    PointSet closed_set;
    int iterations = 0;            // sweeps performed, incl. the confirming one
    long long generators_added = 0;

    ClosureResult() : closed_set(1) {}
};

/// Least superset of S closed under all ops simultaneously, computed by
/// sweep-to-fixpoint. Every op must be componentwise bounded, which keeps
/// all generated points inside bounding_box(S); a point escaping the box
/// aborts with a diagnostic.
ClosureResult closure_under(const PointSet& s, const std::vector<TotalOp>& ops,
                            const Budget& budget = default_budget());

/// The integer bounding box of S: the tightest SVPI system's solutions.
PointSet svpi_closure(const PointSet& s, const Budget& budget = default_budget());

/// Integer solutions of the tightest difference-constraint system over S.
PointSet dc_closure(const PointSet& s, const Budget& budget = default_budget());

/// Integer solutions of the tightest unit-two-variable system: every
/// direction with entries in {-1,0,+1} and at most two nonzeros is
/// tightened to its minimum over S.
PointSet utvpi_closure(const PointSet& s, const Budget& budget = default_budget());

/// conv(S) ∩ Z^2 for a 2-D set, via exact hull facets and box enumeration.
PointSet pairwise_integer_hull(const PointSet& s2, const Budget& budget = default_budget());

/// Join over all coordinate pairs of the pairwise integer hulls of the
/// projections; dim >= 2.
PointSet tvpi_closure(const PointSet& s, const Budget& budget = default_budget());

/// One facet a1*x1 + a2*x2 >= b of a 2-D hull, gcd-normalized.
struct Facet2D {
    Int a1, a2, b;
};

/// Facet inequalities of conv(points) for a nonempty 2-D set. Degenerate
/// hulls (single point, segment) yield the equality pair plus caps.
std::vector<Facet2D> hull_facets_2d(const PointSet& s2);

}  // namespace ipoly
