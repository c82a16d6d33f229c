#include "ipoly/convexity.hpp"

#include <algorithm>

namespace ipoly {

namespace {

// Phase-1 simplex with Bland's rule, dense exact-rational tableau.
// Decides feasibility of: G^T lambda = t, sum lambda = 1, lambda >= 0.
bool convex_combination_exists(const RationalPoint& target, const PointSet& generators) {
    const int n = target.dim();
    const std::size_t m = generators.size();
    const std::size_t rows = static_cast<std::size_t>(n) + 1;
    const std::size_t cols = m + rows + 1;  // lambdas, artificials, rhs

    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        Rat rhs = (r < static_cast<std::size_t>(n)) ? target.coords[r] : Rat(1);
        for (std::size_t c = 0; c < m; ++c) {
            tab[r][c] = (r < static_cast<std::size_t>(n))
                            ? Rat(generators[c].coords[r])
                            : Rat(1);
        }
        if (rhs < 0) {
            for (std::size_t c = 0; c < m; ++c) tab[r][c] = -tab[r][c];
            rhs = -rhs;
        }
        tab[r][m + r] = 1;  // artificial
        tab[r][cols - 1] = rhs;
    }

    // objective: minimize the artificial sum; reduced costs start as the
    // negated column sums over the constraint rows
    std::vector<Rat> obj(cols, Rat(0));
    for (std::size_t c = 0; c < cols; ++c) {
        if (c >= m && c < m + rows) continue;  // artificials cost 1, reduced 0
        Rat sum(0);
        for (std::size_t r = 0; r < rows; ++r) sum += tab[r][c];
        obj[c] = -sum;
    }
    Rat obj_value(0);
    for (std::size_t r = 0; r < rows; ++r) obj_value -= tab[r][cols - 1];

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    for (;;) {
        // Bland: smallest-index improving column
        std::size_t enter = cols;
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            if (obj[c] < 0) { enter = c; break; }
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rat best_ratio(0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][cols - 1] / tab[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot happen here

        // pivot
        Rat piv = tab[leave][enter];
        for (std::size_t c = 0; c < cols; ++c) tab[leave][c] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (std::size_t c = 0; c < cols; ++c) tab[r][c] -= f * tab[leave][c];
        }
        Rat fo = obj[enter];
        if (fo != 0) {
            for (std::size_t c = 0; c < cols; ++c) obj[c] -= fo * tab[leave][c];
            obj_value -= fo * tab[leave][cols - 1];
        }
        basis[leave] = enter;
    }

    return obj_value == 0;
}

}  // namespace

PointSet integer_neighborhood(const RationalPoint& x) {
    const int n = x.dim();
    std::vector<std::vector<Int>> choices(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Rat& v = x.coords[k];
        Int fl = numerator(v) / denominator(v);
        if (Rat(fl) > v) fl -= 1;  // floor for negatives
        if (Rat(fl) == v) {
            choices[static_cast<std::size_t>(k)] = {fl};
        } else {
            choices[static_cast<std::size_t>(k)] = {fl, fl + 1};
        }
    }
    std::vector<Point> pts;
    std::vector<Int> cur(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            pts.emplace_back(cur);
            return;
        }
        for (const Int& v : choices[static_cast<std::size_t>(k)]) {
            cur[static_cast<std::size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return PointSet(n, std::move(pts));
}

bool in_convex_hull(const HullQuery& q) {
    if (q.generators.empty()) throw error("in_convex_hull needs nonempty generators");
    if (q.target.dim() != q.generators.dim()) {
        throw error("hull query dimension mismatch");
    }
    // cheap separation: outside the generator bounding box is outside the hull
    Box box = bounding_box(q.generators);
    for (int k = 0; k < q.target.dim(); ++k) {
        if (q.target.coords[k] < Rat(box.lo.coords[k]) ||
            q.target.coords[k] > Rat(box.hi.coords[k])) {
            return false;
        }
    }
    return convex_combination_exists(q.target, q.generators);
}

namespace {

RationalPoint midpoint(const Point& x, const Point& y) {
    std::vector<Rat> c(static_cast<std::size_t>(x.dim()));
    for (int k = 0; k < x.dim(); ++k) {
        c[static_cast<std::size_t>(k)] = Rat(x.coords[k] + y.coords[k], 2);
    }
    return RationalPoint(std::move(c));
}

Witness pair_witness(const Point& x, const Point& y, const RationalPoint& mid) {
    Witness w;
    w.inputs = {x, y};
    w.produced.resize(mid.coords.size());
    for (std::size_t k = 0; k < mid.coords.size(); ++k) {
        const Rat& v = mid.coords[k];
        if (denominator(v) == 1) w.produced[k] = numerator(v);
    }
    w.reason = WitnessReason::NOT_IN_SET;
    return w;
}

}  // namespace

CheckResult is_midpoint_neighbor_closed(const PointSet& s) {
    if (s.size() <= 1) return {true, std::nullopt};
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            RationalPoint mid = midpoint(s[i], s[j]);
            for (const Point& z : integer_neighborhood(mid)) {
                if (!s.contains(z)) {
                    Witness w;
                    w.inputs = {s[i], s[j]};
                    w.produced.reserve(z.coords.size());
                    for (const Int& v : z.coords) w.produced.emplace_back(v);
                    w.reason = WitnessReason::NOT_IN_SET;
                    return {false, std::move(w)};
                }
            }
        }
    }
    return {true, std::nullopt};
}

CheckResult is_integrally_convex(const PointSet& s) {
    if (s.size() <= 1) return {true, std::nullopt};
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Int dist = 0;
            for (int k = 0; k < s.dim(); ++k) {
                Int d = abs(s[i].coords[k] - s[j].coords[k]);
                if (d > dist) dist = d;
            }
            if (dist < 2) continue;
            RationalPoint mid = midpoint(s[i], s[j]);
            std::vector<Point> near;
            for (const Point& z : integer_neighborhood(mid)) {
                if (s.contains(z)) near.push_back(z);
            }
            if (near.empty() ||
                !in_convex_hull({mid, PointSet(s.dim(), std::move(near))})) {
                return {false, pair_witness(s[i], s[j], mid)};
            }
        }
    }
    return {true, std::nullopt};
}

CheckResult is_hole_free(const PointSet& s, const Budget& budget) {
    if (s.empty()) throw error("is_hole_free of empty set");
    std::optional<Witness> hole;
    bounding_box(s).for_each([&](const Point& p) {
        if (s.contains(p)) return true;
        if (in_convex_hull({to_rational(p), s})) {
            Witness w;
            w.produced.reserve(p.coords.size());
            for (const Int& v : p.coords) w.produced.emplace_back(v);
            w.reason = WitnessReason::NOT_IN_SET;
            hole = std::move(w);
            return false;  // box scan is lexicographic: first hole is smallest
        }
        return true;
    }, budget);
    if (hole) return {false, std::move(hole)};
    return {true, std::nullopt};
}

}  // namespace ipoly
