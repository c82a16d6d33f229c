#pragma once

#include "ipoly/core.hpp"
#include "ipoly/ops.hpp"

namespace ipoly {

/// Hull-membership query: is target a convex combination of generators?
struct HullQuery {
    RationalPoint target;
    PointSet generators;
};

/// Integer points within strict distance 1 of x in every coordinate:
/// the singleton {x_j} at integral coordinates, {floor, ceil} otherwise.
PointSet integer_neighborhood(const RationalPoint& x);

/// Exact rational feasibility: nonnegative weights summing to one that
/// reproduce the target.
bool in_convex_hull(const HullQuery& q);

/// For every pair x,y in S, N((x+y)/2) must be contained in S.
CheckResult is_midpoint_neighbor_closed(const PointSet& s);

/// Integral convexity via the pairwise criterion: every pair at
/// l_inf-distance >= 2 has its midpoint in conv(S ∩ N(midpoint)).
/// The witness carries the violating pair.
CheckResult is_integrally_convex(const PointSet& s);

/// True iff every integer point of conv(S) lies in S; the witness carries
/// the lexicographically smallest hole.
CheckResult is_hole_free(const PointSet& s, const Budget& budget = default_budget());

}  // namespace ipoly
