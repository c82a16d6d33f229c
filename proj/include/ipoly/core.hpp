#pragma once

#include "ipoly/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipoly {

/// A vector in Z^n. Immutable after construction; compares coordinate-wise
/// (lexicographic ordering is used everywhere a deterministic scan order is
/// promised).
struct Point {
    std::vector<Int> coords;

    Point() = default;
    explicit Point(std::vector<Int> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    auto operator<=>(const Point&) const = default;
};

/// A vector of exact rationals (midpoints, hull-membership targets).
struct RationalPoint {
    std::vector<Rat> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rat> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    auto operator<=>(const RationalPoint&) const = default;
};

RationalPoint to_rational(const Point& p);

/// A finite, deduplicated set of points of one dimension. Points are kept
/// sorted, so iteration order is the lexicographic order promised by the
/// witness contracts.
class PointSet {
public:
    explicit PointSet(int dim);
    PointSet(int dim, std::vector<Point> pts);

    int dim() const { return dim_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const;

    /// Returns a copy with p added (no-op if already present).
    PointSet with(const Point& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const PointSet& other) const = default;

    bool is_subset_of(const PointSet& other) const;

private:
    int dim_ = 0;
    std::vector<Point> points_;  // sorted, unique
};

/// Ordered coordinate pair 1 <= i < j <= dim, the index set of pi_{i,j}.
struct IndexPair {
    int i = 1;
    int j = 2;

    IndexPair(int i_, int j_);

    auto operator<=>(const IndexPair&) const = default;
};

/// Syntactic row classes, from strongest to weakest.
enum class IneqClass { SVPI, DC, UTVPI, TVPI, GENERAL };

const char* ineq_class_name(IneqClass c);
std::optional<IneqClass> ineq_class_from_name(const std::string& name);

/// One row a.x >= b with a class tag.
struct Inequality {
    std::vector<Rat> coeffs;
    Rat rhs;
    IneqClass class_tag = IneqClass::GENERAL;

    int dim() const { return static_cast<int>(coeffs.size()); }
};

/// True iff coeffs satisfy class_tag's syntactic constraint. A row valid
/// for a stronger tag validates for every weaker one.
bool validate_class(const Inequality& ineq);

/// A finite conjunction of rows over one dimension; represents Ax >= b.
struct LinearSystem {
    int dim = 0;
    std::vector<Inequality> rows;

    /// Weakest class_tag among the rows (SVPI for an empty system).
    IneqClass system_class() const;
};

/// Inclusive integer box [lo, hi], the enumeration universe of every
/// fixpoint and solution scan.
struct Box {
    Point lo;
    Point hi;

    int dim() const { return lo.dim(); }
    bool contains(const Point& p) const;
    Int volume() const;  // number of integer points, 0 if empty

    /// Grown by `pad` on every side.
    Box padded(const Int& pad) const;

    /// Visits every integer point in lexicographic order. The visitor
    /// returns false to stop early.
    void for_each(const std::function<bool(const Point&)>& visit,
                  const Budget& budget = default_budget()) const;
};

/// Smallest box containing both.
Box box_union(const Box& a, const Box& b);

/// Builds a deduplicated set, rejecting rows of the wrong length with the
/// offending row index.
PointSet point_set_from_rows(int dim, const std::vector<std::vector<Int>>& rows);

/// Componentwise (min, max) over a nonempty set.
Box bounding_box(const PointSet& s);

}  // namespace ipoly
