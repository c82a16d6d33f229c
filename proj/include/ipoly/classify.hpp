#pragma once

#include "ipoly/convexity.hpp"
#include "ipoly/core.hpp"
#include "ipoly/decomp.hpp"
#include "ipoly/ops.hpp"
#include "ipoly/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipoly {

/// Full property profile of a set. Every implication theorem applicable
/// to the set's dimension is re-checked; any entry in `consistency` is an
/// implementation bug.
struct ClassReport {
    int dim = 0;

    bool midpoint_neighbor = false;
    bool gh_closed = false;
    bool mu_closed = false;
    bool median_closed = false;
    bool integrally_convex = false;
    bool hole_free = false;
    // decomposability notions need dim >= 2
    std::optional<bool> two_decomposable;
    std::optional<bool> weak_maj_p;
    std::optional<bool> strong_maj_p;
    bool repr_svpi = false;
    bool repr_dc = false;
    bool repr_utvpi = false;
    bool repr_tvpi = false;

    std::map<std::string, Witness> witnesses;       // property -> failure evidence
    std::map<std::string, LinearSystem> systems;    // property -> synthesized system
    std::map<std::string, Point> holes;             // property -> closure hole
    std::map<std::string, std::string> notes;
    std::vector<std::string> consistency;           // violated implication arrows
};

ClassReport classify(const PointSet& s, const Budget& budget = default_budget());

}  // namespace ipoly
