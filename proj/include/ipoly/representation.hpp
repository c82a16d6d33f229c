#pragma once

#include "ipoly/closure.hpp"
#include "ipoly/core.hpp"

#include <optional>

namespace ipoly {

/// Evidence for a representability verdict: the tightest system when
/// representable, otherwise a hole (a point of the class closure that is
/// absent from S).
struct ReprCertificate {
    bool representable = false;
    std::optional<LinearSystem> system;
    std::optional<Point> hole;
};

/// The tightest system of the class containing S: one inequality per
/// admissible direction for SVPI/DC/UTVPI, pairwise hull facets lifted to
/// n variables for TVPI.
LinearSystem synthesize_system(const PointSet& s, IneqClass cls);

/// Exact check of every row at x.
bool evaluate_system(const LinearSystem& sys, const Point& x);

/// All integer points of the box satisfying the system.
PointSet integer_solutions(const LinearSystem& sys, const Box& box,
                           const Budget& budget = default_budget());

/// The class closure used by is_representable.
PointSet class_closure(const PointSet& s, IneqClass cls,
                       const Budget& budget = default_budget());

/// S is representable by a system of the class iff the class closure adds
/// nothing.
ReprCertificate is_representable(const PointSet& s, IneqClass cls,
                                 const Budget& budget = default_budget());

}  // namespace ipoly
