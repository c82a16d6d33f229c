#pragma once

#include "ipoly/closure.hpp"
#include "ipoly/core.hpp"
#include "ipoly/ops.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ipoly {

/// Outcome of a 2-decomposability test. missing_point is present exactly
/// when decomposable is false and is the lexicographically smallest point
/// of the join that is absent from S.
struct DecompReport {
    bool decomposable = true;
    std::optional<Point> missing_point;
    std::map<IndexPair, PointSet> projections;
};

/// Restriction of every vector of S to the given 1-based, strictly
/// increasing index set.
PointSet project(const PointSet& s, const std::vector<int>& indices);

/// All integer points of the box whose every pairwise projection lies in
/// the corresponding part. Every pair over 1..dim must be present; an
/// empty part makes the join empty. When no box is given, the parts'
/// componentwise bounds are used.
PointSet join(const std::map<IndexPair, PointSet>& parts, int dim,
              const std::optional<Box>& bbox = std::nullopt,
              const Budget& budget = default_budget());

DecompReport is_2_decomposable(const PointSet& s, const Budget& budget = default_budget());

enum class PairClosureKind { Mu, Gh, Median, Hull };

/// Join over pairs of the chosen 2-D closure of each pairwise projection.
PointSet join_of_closures(const PointSet& s, PairClosureKind kind,
                          const Budget& budget = default_budget());

enum class HereditaryPredicate { TwoDecomposable, WeakMajP, StrongMajP };

struct HereditaryReport {
    bool holds = true;
    std::optional<std::vector<int>> failing_indices;  // 1-based index set
    std::optional<Witness> witness;                   // for the maj_p predicates
    std::optional<Point> missing_point;               // for 2-decomposability
};

/// True iff every projection of S onto an index set of size >= 2
/// satisfies the predicate. Index sets are scanned by size, then
/// lexicographically.
HereditaryReport hereditary_check(const PointSet& s, HereditaryPredicate predicate,
                                  const Budget& budget = default_budget());

/// Weak closedness under f^(k) for all 2 <= k <= k_max. Refuses when
/// |S|^C(k,2) exceeds the budget.
CheckResult is_weakly_F_closed(const PointSet& s, int k_max,
                               const Budget& budget = default_budget());

}  // namespace ipoly
