#include "ipoly/core.hpp"

#include <algorithm>
#include <sstream>

namespace ipoly {

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw error("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw error("cannot parse rational '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const Rat& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

RationalPoint to_rational(const Point& p) {
    std::vector<Rat> c;
    c.reserve(p.coords.size());
    for (const Int& v : p.coords) c.emplace_back(v);
    return RationalPoint(std::move(c));
}

PointSet::PointSet(int dim) : dim_(dim) {
    if (dim < 1) throw error("point set dimension must be >= 1");
}

PointSet::PointSet(int dim, std::vector<Point> pts) : dim_(dim) {
    if (dim < 1) throw error("point set dimension must be >= 1");
    for (std::size_t r = 0; r < pts.size(); ++r) {
        if (pts[r].dim() != dim) {
            throw error("row " + std::to_string(r) + " has length " +
                        std::to_string(pts[r].dim()) + ", expected " +
                        std::to_string(dim));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    points_ = std::move(pts);
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::with(const Point& p) const {
    if (contains(p)) return *this;
    std::vector<Point> pts = points_;
    pts.insert(std::upper_bound(pts.begin(), pts.end(), p), p);
    PointSet out(dim_);
    out.points_ = std::move(pts);
    return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(),
                         points_.begin(), points_.end());
}

IndexPair::IndexPair(int i_, int j_) : i(i_), j(j_) {
    if (!(1 <= i && i < j)) {
        throw error("index pair requires 1 <= i < j, got (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

const char* ineq_class_name(IneqClass c) {
    switch (c) {
        case IneqClass::SVPI: return "SVPI";
        case IneqClass::DC: return "DC";
        case IneqClass::UTVPI: return "UTVPI";
        case IneqClass::TVPI: return "TVPI";
        case IneqClass::GENERAL: return "GENERAL";
    }
    return "GENERAL";
}

std::optional<IneqClass> ineq_class_from_name(const std::string& name) {
    std::string up;
    for (char ch : name) up.push_back(static_cast<char>(std::toupper(ch)));
    if (up == "SVPI") return IneqClass::SVPI;
    if (up == "DC") return IneqClass::DC;
    if (up == "UTVPI") return IneqClass::UTVPI;
    if (up == "TVPI") return IneqClass::TVPI;
    if (up == "GENERAL") return IneqClass::GENERAL;
    return std::nullopt;
}

bool validate_class(const Inequality& ineq) {
    int nonzero = 0;
    int plus_ones = 0, minus_ones = 0;
    bool all_unit = true;
    for (const Rat& c : ineq.coeffs) {
        if (c == 0) continue;
        ++nonzero;
        if (c == 1) ++plus_ones;
        else if (c == -1) ++minus_ones;
        else all_unit = false;
    }
    switch (ineq.class_tag) {
        case IneqClass::SVPI:
            return all_unit && nonzero <= 1;
        case IneqClass::DC:
            return all_unit && plus_ones <= 1 && minus_ones <= 1;
        case IneqClass::UTVPI:
            return all_unit && nonzero <= 2;
        case IneqClass::TVPI:
            return nonzero <= 2;
        case IneqClass::GENERAL:
            return true;
    }
    return true;
}

IneqClass LinearSystem::system_class() const {
    IneqClass weakest = IneqClass::SVPI;
    for (const Inequality& row : rows) {
        if (static_cast<int>(row.class_tag) > static_cast<int>(weakest)) {
            weakest = row.class_tag;
        }
    }
    return weakest;
}

bool Box::contains(const Point& p) const {
    for (int k = 0; k < dim(); ++k) {
        if (p.coords[k] < lo.coords[k] || p.coords[k] > hi.coords[k]) return false;
    }
    return true;
}

Int Box::volume() const {
    Int v = 1;
    for (int k = 0; k < dim(); ++k) {
        Int side = hi.coords[k] - lo.coords[k] + 1;
        if (side <= 0) return 0;
        v *= side;
    }
    return v;
}

Box Box::padded(const Int& pad) const {
    Box out = *this;
    for (int k = 0; k < dim(); ++k) {
        out.lo.coords[k] -= pad;
        out.hi.coords[k] += pad;
    }
    return out;
}

void Box::for_each(const std::function<bool(const Point&)>& visit,
                   const Budget& budget) const {
    Int v = volume();
    if (v == 0) return;
    if (v > budget.max_enumeration) {
        std::ostringstream msg;
        msg << "box enumeration of " << v << " points exceeds budget "
            << budget.max_enumeration;
        throw budget_error(msg.str());
    }
    Point cur = lo;
    const int n = dim();
    for (;;) {
        if (!visit(cur)) return;
        int k = n - 1;
        while (k >= 0) {
            if (cur.coords[k] < hi.coords[k]) {
                ++cur.coords[k];
                break;
            }
            cur.coords[k] = lo.coords[k];
            --k;
        }
        if (k < 0) return;
    }
}

Box box_union(const Box& a, const Box& b) {
    Box out = a;
    for (int k = 0; k < a.dim(); ++k) {
        out.lo.coords[k] = std::min(a.lo.coords[k], b.lo.coords[k]);
        out.hi.coords[k] = std::max(a.hi.coords[k], b.hi.coords[k]);
    }
    return out;
}

PointSet point_set_from_rows(int dim, const std::vector<std::vector<Int>>& rows) {
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != dim) {
            throw error("row " + std::to_string(r) + " has length " +
                        std::to_string(rows[r].size()) + ", expected " +
                        std::to_string(dim));
        }
        pts.emplace_back(rows[r]);
    }
    return PointSet(dim, std::move(pts));
}

Box bounding_box(const PointSet& s) {
    if (s.empty()) throw error("bounding_box of empty set");
    Point lo = s[0], hi = s[0];
    for (const Point& p : s) {
        for (int k = 0; k < s.dim(); ++k) {
            if (p.coords[k] < lo.coords[k]) lo.coords[k] = p.coords[k];
            if (p.coords[k] > hi.coords[k]) hi.coords[k] = p.coords[k];
        }
    }
    return Box{lo, hi};
}

}  // namespace ipoly
