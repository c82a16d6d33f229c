#include "ipoly/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ipoly {

PointSet project(const PointSet& s, const std::vector<int>& indices) {
    if (indices.empty()) throw error("projection index set must be nonempty");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 1 || indices[k] > s.dim()) {
            throw error("projection index " + std::to_string(indices[k]) +
                        " out of range 1.." + std::to_string(s.dim()));
        }
        if (k > 0 && indices[k] <= indices[k - 1]) {
            throw error("projection indices must be strictly increasing");
        }
    }
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (const Point& p : s) {
        std::vector<Int> c;
        c.reserve(indices.size());
        for (int i : indices) c.push_back(p.coords[static_cast<std::size_t>(i - 1)]);
        pts.emplace_back(std::move(c));
    }
    return PointSet(static_cast<int>(indices.size()), std::move(pts));
}

namespace {

std::map<IndexPair, PointSet> pairwise_projections(const PointSet& s) {
    std::map<IndexPair, PointSet> out;
    for (int i = 1; i <= s.dim(); ++i) {
        for (int j = i + 1; j <= s.dim(); ++j) {
            out.emplace(IndexPair(i, j), project(s, {i, j}));
        }
    }
    return out;
}

}  // namespace

PointSet join(const std::map<IndexPair, PointSet>& parts, int dim,
              const std::optional<Box>& bbox, const Budget& budget) {
    if (dim < 2) throw error("join requires dimension >= 2");
    for (int i = 1; i <= dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
            auto it = parts.find(IndexPair(i, j));
            if (it == parts.end()) {
                throw error("join is missing part for pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
            }
            if (it->second.dim() != 2) throw error("join parts must be 2-dimensional");
            if (it->second.empty()) return PointSet(dim);  // empty join, not an error
        }
    }

    Box box{Point(std::vector<Int>(static_cast<std::size_t>(dim))),
            Point(std::vector<Int>(static_cast<std::size_t>(dim)))};
    if (bbox) {
        box = *bbox;
    } else {
        // per coordinate, intersect the column ranges of every part touching it
        std::vector<bool> seen(static_cast<std::size_t>(dim), false);
        for (const auto& [pair, part] : parts) {
            Box pb = bounding_box(part);
            for (int side = 0; side < 2; ++side) {
                int coord = side == 0 ? pair.i : pair.j;
                std::size_t k = static_cast<std::size_t>(coord - 1);
                if (!seen[k]) {
                    box.lo.coords[k] = pb.lo.coords[side];
                    box.hi.coords[k] = pb.hi.coords[side];
                    seen[k] = true;
                } else {
                    box.lo.coords[k] = std::max(box.lo.coords[k], pb.lo.coords[side]);
                    box.hi.coords[k] = std::min(box.hi.coords[k], pb.hi.coords[side]);
                }
            }
        }
    }

    std::vector<Point> pts;
    box.for_each([&](const Point& p) {
        for (const auto& [pair, part] : parts) {
            Point proj({p.coords[static_cast<std::size_t>(pair.i - 1)],
                        p.coords[static_cast<std::size_t>(pair.j - 1)]});
            if (!part.contains(proj)) return true;
        }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(dim, std::move(pts));
}

DecompReport is_2_decomposable(const PointSet& s, const Budget& budget) {
    if (s.dim() < 2) throw error("2-decomposability requires dimension >= 2");
    DecompReport report;
    report.projections = pairwise_projections(s);
    if (s.empty()) return report;
    PointSet joined = join(report.projections, s.dim(), bounding_box(s), budget);
    for (const Point& p : joined) {  // lexicographic scan
        if (!s.contains(p)) {
            report.decomposable = false;
            report.missing_point = p;
            break;
        }
    }
    return report;
}

PointSet join_of_closures(const PointSet& s, PairClosureKind kind, const Budget& budget) {
    if (s.dim() < 2) throw error("join_of_closures requires dimension >= 2");
    if (s.empty()) throw error("join_of_closures of empty set");
    std::map<IndexPair, PointSet> parts;
    for (auto& [pair, proj] : pairwise_projections(s)) {
        switch (kind) {
            case PairClosureKind::Mu:
                parts.emplace(pair, closure_under(proj, {mu_total()}, budget).closed_set);
                break;
            case PairClosureKind::Gh:
                parts.emplace(pair, closure_under(proj, {ceil_mid_total(), floor_mid_total()},
                                                  budget).closed_set);
                break;
            case PairClosureKind::Median:
                parts.emplace(pair, closure_under(proj, {median_total()}, budget).closed_set);
                break;
            case PairClosureKind::Hull:
                parts.emplace(pair, pairwise_integer_hull(proj, budget));
                break;
        }
    }
    return join(parts, s.dim(), bounding_box(s), budget);
}

namespace {

// Index subsets of size >= 2, ordered by size then lexicographically.
std::vector<std::vector<int>> index_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int size = 2; size <= n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == size) {
                out.push_back(pick);
                return;
            }
            for (int v = start; v <= n; ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(1, 0);
    }
    return out;
}

}  // namespace

HereditaryReport hereditary_check(const PointSet& s, HereditaryPredicate predicate,
                                  const Budget& budget) {
    HereditaryReport report;
    if (s.dim() < 2) return report;  // size-1 projections are vacuous
    for (const auto& indices : index_subsets(s.dim())) {
        PointSet proj = project(s, indices);
        switch (predicate) {
            case HereditaryPredicate::TwoDecomposable: {
                DecompReport d = is_2_decomposable(proj, budget);
                if (!d.decomposable) {
                    report.holds = false;
                    report.failing_indices = indices;
                    report.missing_point = d.missing_point;
                    return report;
                }
                break;
            }
            case HereditaryPredicate::WeakMajP: {
                CheckResult r = is_weakly_closed(proj, maj_p_partial());
                if (!r.holds) {
                    report.holds = false;
                    report.failing_indices = indices;
                    report.witness = r.witness;
                    return report;
                }
                break;
            }
            case HereditaryPredicate::StrongMajP: {
                CheckResult r = is_strongly_closed(proj, maj_p_partial());
                if (!r.holds) {
                    report.holds = false;
                    report.failing_indices = indices;
                    report.witness = r.witness;
                    return report;
                }
                break;
            }
        }
    }
    return report;
}

CheckResult is_weakly_F_closed(const PointSet& s, int k_max, const Budget& budget) {
    if (s.dim() < 2) throw error("weak F-closedness requires dimension >= 2");
    if (k_max < s.dim()) {
        throw error("k_max must be at least the dimension " + std::to_string(s.dim()));
    }
    if (s.empty()) return {true, std::nullopt};
    for (int k = 2; k <= k_max; ++k) {
        int args = k * (k - 1) / 2;
        // tuple-count guard: |S|^C(k,2)
        Int tuples = 1;
        for (int t = 0; t < args; ++t) {
            tuples *= Int(s.size());
            if (tuples > budget.max_enumeration) {
                std::ostringstream msg;
                msg << "weak F-closedness at k=" << k << " needs |S|^" << args << " = "
                    << s.size() << "^" << args << " tuples, over budget "
                    << budget.max_enumeration;
                throw budget_error(msg.str());
            }
        }
        CheckResult r = is_weakly_closed(s, fk_partial(k));
        if (!r.holds) return r;
    }
    return {true, std::nullopt};
}

}  // namespace ipoly
