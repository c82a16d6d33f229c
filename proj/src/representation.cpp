#include "ipoly/representation.hpp"

#include <algorithm>

namespace ipoly {

namespace {

Inequality unit_row(int dim, int i, int si, int j, int sj, const Int& rhs, IneqClass tag) {
    Inequality row;
    row.coeffs.assign(static_cast<std::size_t>(dim), Rat(0));
    row.coeffs[static_cast<std::size_t>(i)] = si;
    if (j >= 0) row.coeffs[static_cast<std::size_t>(j)] = sj;
    row.rhs = Rat(rhs);
    row.class_tag = tag;
    return row;
}

Int direction_min(const PointSet& s, int i, int si, int j, int sj) {
    Int best;
    bool first = true;
    for (const Point& p : s) {
        Int v = si * p.coords[i];
        if (j >= 0) v += sj * p.coords[j];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

}  // namespace

LinearSystem synthesize_system(const PointSet& s, IneqClass cls) {
    if (s.empty()) throw error("synthesize_system of empty set");
    const int n = s.dim();
    LinearSystem sys;
    sys.dim = n;

    // box rows belong to every class
    for (int i = 0; i < n; ++i) {
        sys.rows.push_back(unit_row(n, i, 1, -1, 0, direction_min(s, i, 1, -1, 0), cls));
        sys.rows.push_back(unit_row(n, i, -1, -1, 0, direction_min(s, i, -1, -1, 0), cls));
    }
    switch (cls) {
        case IneqClass::SVPI:
            break;
        case IneqClass::DC:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    sys.rows.push_back(
                        unit_row(n, i, 1, j, -1, direction_min(s, i, 1, j, -1), cls));
                }
            break;
        case IneqClass::UTVPI:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            sys.rows.push_back(unit_row(
                                n, i, si, j, sj, direction_min(s, i, si, j, sj), cls));
                        }
            break;
        case IneqClass::TVPI: {
            if (n == 1) break;  // the box rows are the 1-D hull
            sys.rows.clear();   // hull facets subsume the box
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    std::vector<Point> proj;
                    proj.reserve(s.size());
                    for (const Point& p : s) proj.push_back(Point({p.coords[i], p.coords[j]}));
                    for (const Facet2D& f : hull_facets_2d(PointSet(2, std::move(proj)))) {
                        Inequality row;
                        row.coeffs.assign(static_cast<std::size_t>(n), Rat(0));
                        row.coeffs[static_cast<std::size_t>(i)] = Rat(f.a1);
                        row.coeffs[static_cast<std::size_t>(j)] = Rat(f.a2);
                        row.rhs = Rat(f.b);
                        row.class_tag = IneqClass::TVPI;
                        sys.rows.push_back(std::move(row));
                    }
                }
            }
            break;
        }
        case IneqClass::GENERAL:
            throw error("synthesize_system supports SVPI, DC, UTVPI, TVPI");
    }
    return sys;
}

bool evaluate_system(const LinearSystem& sys, const Point& x) {
    if (x.dim() != sys.dim) throw error("evaluate_system dimension mismatch");
    for (const Inequality& row : sys.rows) {
        Rat lhs(0);
        for (int k = 0; k < sys.dim; ++k) {
            if (row.coeffs[static_cast<std::size_t>(k)] != 0) {
                lhs += row.coeffs[static_cast<std::size_t>(k)] * Rat(x.coords[k]);
            }
        }
        if (lhs < row.rhs) return false;
    }
    return true;
}

PointSet integer_solutions(const LinearSystem& sys, const Box& box, const Budget& budget) {
    if (box.dim() != sys.dim) throw error("integer_solutions box dimension mismatch");
    // pre-scale rows to integer coefficients so the scan stays in Int
    struct IntRow {
        std::vector<Int> coeffs;
        Int rhs;
    };
    std::vector<IntRow> rows;
    rows.reserve(sys.rows.size());
    for (const Inequality& row : sys.rows) {
        Int lcm_den = 1;
        for (const Rat& c : row.coeffs) lcm_den = lcm(lcm_den, denominator(c));
        lcm_den = lcm(lcm_den, denominator(row.rhs));
        IntRow ir;
        ir.coeffs.reserve(row.coeffs.size());
        for (const Rat& c : row.coeffs) {
            ir.coeffs.push_back(numerator(c) * (lcm_den / denominator(c)));
        }
        ir.rhs = numerator(row.rhs) * (lcm_den / denominator(row.rhs));
        rows.push_back(std::move(ir));
    }
    std::vector<Point> pts;
    box.for_each([&](const Point& p) {
        for (const IntRow& row : rows) {
            Int lhs = 0;
            for (int k = 0; k < sys.dim; ++k) {
                if (row.coeffs[static_cast<std::size_t>(k)] != 0) {
                    lhs += row.coeffs[static_cast<std::size_t>(k)] * p.coords[k];
                }
            }
            if (lhs < row.rhs) return true;
        }
        pts.push_back(p);
        return true;
    }, budget);
    return PointSet(sys.dim, std::move(pts));
}

PointSet class_closure(const PointSet& s, IneqClass cls, const Budget& budget) {
    switch (cls) {
        case IneqClass::SVPI: return svpi_closure(s, budget);
        case IneqClass::DC: return dc_closure(s, budget);
        case IneqClass::UTVPI: return utvpi_closure(s, budget);
        case IneqClass::TVPI:
            if (s.dim() == 1) return svpi_closure(s, budget);
            return tvpi_closure(s, budget);
        case IneqClass::GENERAL: break;
    }
    throw error("class_closure supports SVPI, DC, UTVPI, TVPI");
}

ReprCertificate is_representable(const PointSet& s, IneqClass cls, const Budget& budget) {
    if (s.empty()) throw error("is_representable of empty set");
    PointSet closed = class_closure(s, cls, budget);
    ReprCertificate cert;
    if (closed == s) {
        cert.representable = true;
        cert.system = synthesize_system(s, cls);
    } else {
        cert.representable = false;
        for (const Point& p : closed) {  // lexicographic
            if (!s.contains(p)) {
                cert.hole = p;
                break;
            }
        }
    }
    return cert;
}

}  // namespace ipoly
