#include "ipoly/closure.hpp"

#include "grid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ipoly {

namespace {

void require_bounded(const std::vector<TotalOp>& ops) {
    for (const TotalOp& op : ops) {
        if (op.kind == OpKind::Custom && !op.componentwise_bounded) {
            throw error("closure_under cannot certify termination for operation '" +
                        op.name + "': not componentwise bounded");
        }
    }
}

// Semi-naive sweep in the compact int64 kernel. Each round processes
// exactly the tuples containing at least one point discovered in the
// previous round.
ClosureResult closure_fast(const PointSet& s, detail::CompactSet cs,
                           const std::vector<TotalOp>& ops) {
    const int n = cs.dim;
    std::vector<std::int64_t> img(static_cast<std::size_t>(n));

    auto apply2 = [&](OpKind kind, const std::int64_t* x, const std::int64_t* y) {
        switch (kind) {
            case OpKind::Mu:
                for (int k = 0; k < n; ++k) img[k] = detail::mu64(x[k], y[k]);
                break;
            case OpKind::CeilMid:
                for (int k = 0; k < n; ++k) img[k] = detail::ceil_mid64(x[k], y[k]);
                break;
            case OpKind::FloorMid:
                for (int k = 0; k < n; ++k) img[k] = detail::floor_mid64(x[k], y[k]);
                break;
            default:
                throw error("unexpected binary op kind");
        }
        cs.insert(img.data());
    };

    std::size_t old = 0;
    int iterations = 0;
    const std::size_t start = cs.count();
    while (old < cs.count()) {
        const std::size_t snap = cs.count();
        ++iterations;
        for (const TotalOp& op : ops) {
            if (op.kind == OpKind::Median) {
                for (std::size_t i = 0; i < old; ++i)
                    for (std::size_t j = 0; j < old; ++j)
                        for (std::size_t l = old; l < snap; ++l) {
                            const std::int64_t *x = cs.at(i), *y = cs.at(j), *z = cs.at(l);
                            for (int k = 0; k < n; ++k) img[k] = detail::median64(x[k], y[k], z[k]);
                            cs.insert(img.data());
                        }
                for (std::size_t i = 0; i < old; ++i)
                    for (std::size_t j = old; j < snap; ++j)
                        for (std::size_t l = 0; l < snap; ++l) {
                            const std::int64_t *x = cs.at(i), *y = cs.at(j), *z = cs.at(l);
                            for (int k = 0; k < n; ++k) img[k] = detail::median64(x[k], y[k], z[k]);
                            cs.insert(img.data());
                        }
                for (std::size_t i = old; i < snap; ++i)
                    for (std::size_t j = 0; j < snap; ++j)
                        for (std::size_t l = 0; l < snap; ++l) {
                            const std::int64_t *x = cs.at(i), *y = cs.at(j), *z = cs.at(l);
                            for (int k = 0; k < n; ++k) img[k] = detail::median64(x[k], y[k], z[k]);
                            cs.insert(img.data());
                        }
            } else {
                for (std::size_t i = 0; i < old; ++i)
                    for (std::size_t j = old; j < snap; ++j) apply2(op.kind, cs.at(i), cs.at(j));
                for (std::size_t i = old; i < snap; ++i)
                    for (std::size_t j = 0; j < snap; ++j) apply2(op.kind, cs.at(i), cs.at(j));
            }
        }
        old = snap;
    }

    std::vector<Point> pts;
    pts.reserve(cs.count());
    for (std::size_t i = 0; i < cs.count(); ++i) pts.push_back(cs.decode(i));
    ClosureResult out;
    out.closed_set = PointSet(s.dim(), std::move(pts));
    out.iterations = iterations;
    out.generators_added = static_cast<long long>(cs.count() - start);
    return out;
}

ClosureResult closure_generic(const PointSet& s, const std::vector<TotalOp>& ops) {
    const Box box = bounding_box(s);
    std::set<Point> members(s.begin(), s.end());
    std::vector<Point> order(s.begin(), s.end());

    std::size_t old = 0;
    int iterations = 0;
    while (old < order.size()) {
        const std::size_t snap = order.size();
        ++iterations;
        for (const TotalOp& op : ops) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(op.arity), 0);
            std::vector<Int> args(static_cast<std::size_t>(op.arity));
            do {
                bool touches_frontier = false;
                for (std::size_t i : idx) {
                    if (i >= old) { touches_frontier = true; break; }
                }
                if (!touches_frontier) continue;
                if (*std::max_element(idx.begin(), idx.end()) >= snap) continue;
                std::vector<Int> image(static_cast<std::size_t>(s.dim()));
                for (int k = 0; k < s.dim(); ++k) {
                    for (std::size_t a = 0; a < idx.size(); ++a) args[a] = order[idx[a]].coords[k];
                    image[static_cast<std::size_t>(k)] = op.eval(args);
                }
                Point img(std::move(image));
                if (!box.contains(img)) {
                    std::ostringstream msg;
                    msg << "closure_under: operation '" << op.name
                        << "' generated a point outside the bounding box; "
                           "cannot certify termination";
                    throw error(msg.str());
                }
                if (members.insert(img).second) order.push_back(img);
            } while ([&] {
                for (std::size_t pos = idx.size(); pos-- > 0;) {
                    if (++idx[pos] < snap) return true;
                    idx[pos] = 0;
                }
                return false;
            }());
        }
        old = snap;
    }

    ClosureResult out;
    out.closed_set = PointSet(s.dim(), std::vector<Point>(members.begin(), members.end()));
    out.iterations = iterations;
    out.generators_added = static_cast<long long>(members.size() - s.size());
    return out;
}

}  // namespace

ClosureResult closure_under(const PointSet& s, const std::vector<TotalOp>& ops,
                            const Budget& budget) {
    if (s.empty()) throw error("closure_under of empty set");
    require_bounded(ops);
    bool all_builtin = std::all_of(ops.begin(), ops.end(), [](const TotalOp& op) {
        return op.kind != OpKind::Custom;
    });
    if (all_builtin) {
        auto cs = detail::compact_from_set(s, budget.max_enumeration);
        if (cs) return closure_fast(s, std::move(*cs), ops);
    }
    return closure_generic(s, ops);
}

PointSet svpi_closure(const PointSet& s, const Budget& budget) {
    if (s.empty()) throw error("svpi_closure of empty set");
    std::vector<Point> pts;
    bounding_box(s).for_each([&](const Point& p) {
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(s.dim(), std::move(pts));
}

PointSet dc_closure(const PointSet& s, const Budget& budget) {
    if (s.empty()) throw error("dc_closure of empty set");
    const int n = s.dim();
    // tightest bound for each direction x_i - x_j
    std::vector<std::vector<Int>> diff_min(static_cast<std::size_t>(n),
                                           std::vector<Int>(static_cast<std::size_t>(n)));
    bool first = true;
    for (const Point& p : s) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Int d = p.coords[i] - p.coords[j];
                auto& slot = diff_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (first || d < slot) slot = d;
            }
        first = false;
    }
    std::vector<Point> pts;
    bounding_box(s).for_each([&](const Point& p) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (p.coords[i] - p.coords[j] <
                    diff_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    return true;
                }
            }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(n, std::move(pts));
}

PointSet utvpi_closure(const PointSet& s, const Budget& budget) {
    if (s.empty()) throw error("utvpi_closure of empty set");
    const int n = s.dim();
    // directions e_i*si + e_j*sj for i < j and the four sign combinations;
    // single-variable directions are the bounding box itself
    struct Dir { int i, j, si, sj; Int min; };
    std::vector<Dir> dirs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) dirs.push_back({i, j, si, sj, Int()});
    for (auto& d : dirs) {
        bool first = true;
        for (const Point& p : s) {
            Int v = d.si * p.coords[d.i] + d.sj * p.coords[d.j];
            if (first || v < d.min) d.min = v;
            first = false;
        }
    }
    std::vector<Point> pts;
    bounding_box(s).for_each([&](const Point& p) {
        for (const auto& d : dirs) {
            if (d.si * p.coords[d.i] + d.sj * p.coords[d.j] < d.min) return true;
        }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(n, std::move(pts));
}

namespace {

Int cross(const Int& ox, const Int& oy, const Int& ax, const Int& ay,
          const Int& bx, const Int& by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

void push_facet(std::vector<Facet2D>& out, Int a1, Int a2, Int b) {
    Int g = gcd(gcd(abs(a1), abs(a2)), abs(b));
    if (g > 1) { a1 /= g; a2 /= g; b /= g; }
    out.push_back({std::move(a1), std::move(a2), std::move(b)});
}

}  // namespace

std::vector<Facet2D> hull_facets_2d(const PointSet& s2) {
    if (s2.dim() != 2) throw error("hull_facets_2d requires dimension 2");
    if (s2.empty()) throw error("hull of empty set");

    std::vector<Facet2D> out;
    const auto& pts = s2.points();  // already sorted lexicographically

    if (pts.size() == 1) {
        const Point& p = pts[0];
        push_facet(out, 1, 0, p.coords[0]);
        push_facet(out, -1, 0, -p.coords[0]);
        push_facet(out, 0, 1, p.coords[1]);
        push_facet(out, 0, -1, -p.coords[1]);
        return out;
    }

    // Andrew monotone chain; strict turns drop collinear interior points.
    auto build_chain = [&](bool lower) {
        std::vector<Point> chain;
        auto scan = [&](const Point& p) {
            while (chain.size() >= 2) {
                const Point& a = chain[chain.size() - 2];
                const Point& b = chain[chain.size() - 1];
                Int c = cross(a.coords[0], a.coords[1], b.coords[0], b.coords[1],
                              p.coords[0], p.coords[1]);
                if (c <= 0) chain.pop_back();
                else break;
            }
            chain.push_back(p);
        };
        if (lower) for (auto it = pts.begin(); it != pts.end(); ++it) scan(*it);
        else for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
        return chain;
    };

    std::vector<Point> lower = build_chain(true);
    std::vector<Point> upper = build_chain(false);

    std::vector<Point> hull = lower;
    hull.pop_back();
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);

    if (hull.size() <= 2) {
        // all points collinear: the segment between the extremes
        const Point& p = pts.front();
        const Point& q = pts.back();
        Int dx = q.coords[0] - p.coords[0];
        Int dy = q.coords[1] - p.coords[1];
        push_facet(out, -dy, dx, -dy * p.coords[0] + dx * p.coords[1]);
        push_facet(out, dy, -dx, dy * p.coords[0] - dx * p.coords[1]);
        push_facet(out, dx, dy, dx * p.coords[0] + dy * p.coords[1]);
        push_facet(out, -dx, -dy, -dx * q.coords[0] - dy * q.coords[1]);
        return out;
    }

    // counterclockwise polygon: interior is left of each directed edge
    for (std::size_t t = 0; t < hull.size(); ++t) {
        const Point& v = hull[t];
        const Point& w = hull[(t + 1) % hull.size()];
        Int dx = w.coords[0] - v.coords[0];
        Int dy = w.coords[1] - v.coords[1];
        push_facet(out, -dy, dx, -dy * v.coords[0] + dx * v.coords[1]);
    }
    return out;
}

PointSet pairwise_integer_hull(const PointSet& s2, const Budget& budget) {
    if (s2.dim() != 2) throw error("pairwise_integer_hull requires dimension 2");
    if (s2.empty()) throw error("pairwise_integer_hull of empty set");
    if (s2.size() == 1) return s2;
    std::vector<Facet2D> facets = hull_facets_2d(s2);
    std::vector<Point> pts;
    bounding_box(s2).for_each([&](const Point& p) {
        for (const Facet2D& f : facets) {
            if (f.a1 * p.coords[0] + f.a2 * p.coords[1] < f.b) return true;
        }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(2, std::move(pts));
}

PointSet tvpi_closure(const PointSet& s, const Budget& budget) {
    if (s.empty()) throw error("tvpi_closure of empty set");
    if (s.dim() < 2) throw error("tvpi_closure requires dimension >= 2");
    const int n = s.dim();

    struct PairFacets { int i, j; std::vector<Facet2D> facets; };
    std::vector<PairFacets> all;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<Point> proj;
            proj.reserve(s.size());
            for (const Point& p : s) proj.push_back(Point({p.coords[i], p.coords[j]}));
            all.push_back({i, j, hull_facets_2d(PointSet(2, std::move(proj)))});
        }
    }
    std::vector<Point> pts;
    bounding_box(s).for_each([&](const Point& p) {
        for (const auto& pf : all) {
            for (const Facet2D& f : pf.facets) {
                if (f.a1 * p.coords[pf.i] + f.a2 * p.coords[pf.j] < f.b) return true;
            }
        }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(n, std::move(pts));
}

}  // namespace ipoly
