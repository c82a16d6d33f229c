#pragma once

#include "ipoly/core.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipoly {

/// Built-in operation kinds; Custom carries an arbitrary eval function.
/// The closedness/closure kernels use the kind to pick a fast scan path,
/// the generic path handles everything.
enum class OpKind { Median, Mu, CeilMid, FloorMid, Custom };

/// A total operation Z^arity -> Z, applied componentwise to points.
struct TotalOp {
    std::string name;
    int arity = 0;
    OpKind kind = OpKind::Custom;
    /// Output stays within [min(args), max(args)]; required by closure
    /// fixpoints for termination. All built-ins satisfy it.
    bool componentwise_bounded = false;
    std::function<Int(const std::vector<Int>&)> eval;

    Int operator()(const std::vector<Int>& args) const { return eval(args); }
};

TotalOp median_total();
TotalOp mu_total();
TotalOp ceil_mid_total();
TotalOp floor_mid_total();

/// Named built-in lookup: "median", "mu", "ceil-mid", "floor-mid".
std::optional<TotalOp> total_op_by_name(const std::string& name);

/// A partial operation: eval returns nullopt where undefined.
struct PartialOp {
    std::string name;
    int arity = 0;
    std::function<std::optional<Int>(const std::vector<Int>&)> eval;
};

/// The partial majority operation maj_p.
PartialOp maj_p_partial();

/// The pair-indexed partial operation f^(k). Arguments are indexed by the
/// two-element subsets of {1..k} in lexicographic order:
/// {1,2},{1,3},...,{1,k},{2,3},...,{k-1,k}.
PartialOp fk_partial(int k);

/// f^(k) over an explicit pair->value map; rejects a wrong index set.
std::optional<Int> fk_eval(int k, const std::map<IndexPair, Int>& args);

/// One operation per coordinate, all of one arity.
struct CoordinateFamily {
    int dim = 0;
    std::vector<TotalOp> ops;  // size dim

    int arity() const { return ops.empty() ? 0 : ops.front().arity; }
};

enum class WitnessReason { NOT_IN_SET, NO_AGREEING_MEMBER };

/// Certificate for a failed closedness check: the violating input tuple
/// and its (possibly partial) componentwise image.
struct Witness {
    std::vector<Point> inputs;
    std::vector<std::optional<Int>> produced;
    WitnessReason reason = WitnessReason::NOT_IN_SET;

    /// All coordinates defined (valid for total-op witnesses).
    Point produced_point() const;
};

/// Verdict plus optional lexicographically-smallest witness.
struct CheckResult {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

/// Componentwise application; arity and dimensions must match.
Point apply_componentwise(const TotalOp& op, const std::vector<Point>& args);

/// True iff every arity-tuple (with repetition) from S maps into S.
/// Witness is the lexicographically smallest violating tuple.
CheckResult is_closed(const PointSet& s, const TotalOp& op);

/// Convenience: closed under every op in the list.
CheckResult is_closed_all(const PointSet& s, const std::vector<TotalOp>& ops);

/// Weak closedness: tuples whose image is defined at every coordinate must
/// map into S.
CheckResult is_weakly_closed(const PointSet& s, const PartialOp& op);

/// Strong closedness: every tuple admits a member of S agreeing with the
/// partial image at every defined coordinate.
CheckResult is_strongly_closed(const PointSet& s, const PartialOp& op);

/// Closedness under a per-coordinate family (f_i).
CheckResult is_closed_family(const PointSet& s, const CoordinateFamily& fam);

}  // namespace ipoly
