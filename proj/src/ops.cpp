#include "ipoly/ops.hpp"

#include "grid.hpp"

#include <algorithm>

namespace ipoly {

namespace {

Witness make_total_witness(std::vector<Point> inputs, const Point& image) {
    Witness w;
    w.inputs = std::move(inputs);
    w.produced.reserve(image.coords.size());
    for (const Int& v : image.coords) w.produced.emplace_back(v);
    w.reason = WitnessReason::NOT_IN_SET;
    return w;
}

// Lexicographic odometer over `arity` indices into [0, n). Returns false
// when the enumeration wraps around.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
        if (++idx[pos] < n) return true;
        idx[pos] = 0;
    }
    return false;
}

CheckResult closed_generic(const PointSet& s, const TotalOp& op) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(op.arity), 0);
    std::vector<Point> tuple(static_cast<std::size_t>(op.arity));
    std::vector<Int> args(static_cast<std::size_t>(op.arity));
    do {
        for (std::size_t a = 0; a < idx.size(); ++a) tuple[a] = s[idx[a]];
        std::vector<Int> image(static_cast<std::size_t>(s.dim()));
        for (int k = 0; k < s.dim(); ++k) {
            for (std::size_t a = 0; a < idx.size(); ++a) args[a] = tuple[a].coords[k];
            image[static_cast<std::size_t>(k)] = op.eval(args);
        }
        Point img(std::move(image));
        if (!s.contains(img)) {
            return {false, make_total_witness(tuple, img)};
        }
    } while (next_tuple(idx, s.size()));
    return {true, std::nullopt};
}

CheckResult closed_fast(const PointSet& s, const detail::CompactSet& cs, OpKind kind) {
    const int n = cs.dim;
    const std::size_t m = cs.count();
    std::vector<std::int64_t> img(static_cast<std::size_t>(n));
    auto witness2 = [&](std::size_t i, std::size_t j) {
        std::vector<Int> c(img.begin(), img.end());
        return make_total_witness({cs.decode(i), cs.decode(j)}, Point(std::move(c)));
    };
    if (kind == OpKind::Median) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::int64_t* x = cs.at(i);
            for (std::size_t j = 0; j < m; ++j) {
                const std::int64_t* y = cs.at(j);
                for (std::size_t l = 0; l < m; ++l) {
                    const std::int64_t* z = cs.at(l);
                    for (int k = 0; k < n; ++k) img[k] = detail::median64(x[k], y[k], z[k]);
                    if (!cs.contains(img.data())) {
                        std::vector<Int> c(img.begin(), img.end());
                        return CheckResult{false, make_total_witness(
                            {cs.decode(i), cs.decode(j), cs.decode(l)}, Point(std::move(c)))};
                    }
                }
            }
        }
        return {true, std::nullopt};
    }
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t* x = cs.at(i);
        for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t* y = cs.at(j);
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
                    throw error("unexpected op kind in fast scan");
            }
            if (!cs.contains(img.data())) return {false, witness2(i, j)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

TotalOp median_total() {
    return TotalOp{"median", 3, OpKind::Median, true,
                   [](const std::vector<Int>& a) { return median_op(a[0], a[1], a[2]); }};
}

TotalOp mu_total() {
    return TotalOp{"mu", 2, OpKind::Mu, true,
                   [](const std::vector<Int>& a) { return mu_op(a[0], a[1]); }};
}

TotalOp ceil_mid_total() {
    return TotalOp{"ceil-mid", 2, OpKind::CeilMid, true,
                   [](const std::vector<Int>& a) { return ceil_mid(a[0], a[1]); }};
}

TotalOp floor_mid_total() {
    return TotalOp{"floor-mid", 2, OpKind::FloorMid, true,
                   [](const std::vector<Int>& a) { return floor_mid(a[0], a[1]); }};
}

std::optional<TotalOp> total_op_by_name(const std::string& name) {
    if (name == "median") return median_total();
    if (name == "mu") return mu_total();
    if (name == "ceil-mid") return ceil_mid_total();
    if (name == "floor-mid") return floor_mid_total();
    return std::nullopt;
}

PartialOp maj_p_partial() {
    return PartialOp{"maj-p", 3, [](const std::vector<Int>& a) {
        return maj_p_eval(a[0], a[1], a[2]);
    }};
}

namespace {

// Canonical lexicographic listing of the two-element subsets of {1..k}.
std::vector<IndexPair> pairs_of(int k) {
    std::vector<IndexPair> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.emplace_back(i, j);
    return out;
}

// Star evaluation shared by fk_partial and fk_eval: the value d constant
// on some star S_l = { {l,m} : m != l }, or nullopt.
std::optional<Int> fk_star_value(int k, const std::function<const Int&(int, int)>& value_at) {
    for (int l = 1; l <= k; ++l) {
        bool constant = true;
        const Int* d = nullptr;
        for (int m = 1; m <= k && constant; ++m) {
            if (m == l) continue;
            const Int& v = value_at(std::min(l, m), std::max(l, m));
            if (d == nullptr) d = &v;
            else if (*d != v) constant = false;
        }
        if (constant && d != nullptr) return *d;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Int> fk_eval(int k, const std::map<IndexPair, Int>& args) {
    if (k < 2) throw error("f^(k) requires k >= 2");
    auto expected = pairs_of(k);
    if (args.size() != expected.size()) {
        throw error("f^(" + std::to_string(k) + ") expects " +
                    std::to_string(expected.size()) + " arguments, got " +
                    std::to_string(args.size()));
    }
    for (const IndexPair& p : expected) {
        if (!args.count(p)) {
            throw error("f^(" + std::to_string(k) + ") argument map is missing pair (" +
                        std::to_string(p.i) + "," + std::to_string(p.j) + ")");
        }
    }
    return fk_star_value(k, [&](int i, int j) -> const Int& {
        return args.at(IndexPair(i, j));
    });
}

PartialOp fk_partial(int k) {
    if (k < 2) throw error("f^(k) requires k >= 2");
    int arity = k * (k - 1) / 2;
    // index of pair (i,j), i<j, in the canonical lexicographic order
    auto pair_index = [k](int i, int j) {
        return (i - 1) * (2 * k - i) / 2 + (j - i - 1);
    };
    return PartialOp{"fk:" + std::to_string(k), arity,
                     [k, arity, pair_index](const std::vector<Int>& a) -> std::optional<Int> {
                         if (static_cast<int>(a.size()) != arity) {
                             throw error("f^(k) arity mismatch");
                         }
                         return fk_star_value(k, [&](int i, int j) -> const Int& {
                             return a[static_cast<std::size_t>(pair_index(i, j))];
                         });
                     }};
}

Point Witness::produced_point() const {
    std::vector<Int> c;
    c.reserve(produced.size());
    for (const auto& v : produced) {
        if (!v) throw error("witness image is partial");
        c.push_back(*v);
    }
    return Point(std::move(c));
}

Point apply_componentwise(const TotalOp& op, const std::vector<Point>& args) {
    if (static_cast<int>(args.size()) != op.arity) {
        throw error("operation '" + op.name + "' has arity " + std::to_string(op.arity) +
                    ", got " + std::to_string(args.size()) + " arguments");
    }
    if (args.empty()) throw error("componentwise application needs at least one argument");
    const int n = args.front().dim();
    for (const Point& p : args) {
        if (p.dim() != n) throw error("componentwise application over mixed dimensions");
    }
    std::vector<Int> image(static_cast<std::size_t>(n));
    std::vector<Int> slot(args.size());
    for (int k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < args.size(); ++a) slot[a] = args[a].coords[k];
        image[static_cast<std::size_t>(k)] = op.eval(slot);
    }
    return Point(std::move(image));
}

CheckResult is_closed(const PointSet& s, const TotalOp& op) {
    if (s.empty()) return {true, std::nullopt};
    if (op.kind != OpKind::Custom) {
        auto cs = detail::compact_from_set(s, default_budget().max_enumeration);
        if (cs) return closed_fast(s, *cs, op.kind);
    }
    return closed_generic(s, op);
}

CheckResult is_closed_all(const PointSet& s, const std::vector<TotalOp>& ops) {
    for (const TotalOp& op : ops) {
        CheckResult r = is_closed(s, op);
        if (!r.holds) return r;
    }
    return {true, std::nullopt};
}

CheckResult is_weakly_closed(const PointSet& s, const PartialOp& op) {
    if (s.empty()) return {true, std::nullopt};
    std::vector<std::size_t> idx(static_cast<std::size_t>(op.arity), 0);
    std::vector<Int> args(static_cast<std::size_t>(op.arity));
    do {
        std::vector<Int> image(static_cast<std::size_t>(s.dim()));
        bool defined_everywhere = true;
        for (int k = 0; k < s.dim() && defined_everywhere; ++k) {
            for (std::size_t a = 0; a < idx.size(); ++a) args[a] = s[idx[a]].coords[k];
            auto v = op.eval(args);
            if (!v) defined_everywhere = false;
            else image[static_cast<std::size_t>(k)] = *v;
        }
        if (!defined_everywhere) continue;
        Point img(std::move(image));
        if (!s.contains(img)) {
            std::vector<Point> tuple;
            tuple.reserve(idx.size());
            for (std::size_t i : idx) tuple.push_back(s[i]);
            return {false, make_total_witness(std::move(tuple), img)};
        }
    } while (next_tuple(idx, s.size()));
    return {true, std::nullopt};
}

CheckResult is_strongly_closed(const PointSet& s, const PartialOp& op) {
    if (s.empty()) return {true, std::nullopt};
    std::vector<std::size_t> idx(static_cast<std::size_t>(op.arity), 0);
    std::vector<Int> args(static_cast<std::size_t>(op.arity));
    do {
        std::vector<std::optional<Int>> image(static_cast<std::size_t>(s.dim()));
        for (int k = 0; k < s.dim(); ++k) {
            for (std::size_t a = 0; a < idx.size(); ++a) args[a] = s[idx[a]].coords[k];
            image[static_cast<std::size_t>(k)] = op.eval(args);
        }
        bool agrees = false;
        for (const Point& cand : s) {
            bool ok = true;
            for (int k = 0; k < s.dim() && ok; ++k) {
                if (image[static_cast<std::size_t>(k)] &&
                    cand.coords[k] != *image[static_cast<std::size_t>(k)]) {
                    ok = false;
                }
            }
            if (ok) { agrees = true; break; }
        }
        if (!agrees) {
            Witness w;
            for (std::size_t i : idx) w.inputs.push_back(s[i]);
            w.produced = std::move(image);
            w.reason = WitnessReason::NO_AGREEING_MEMBER;
            return {false, std::move(w)};
        }
    } while (next_tuple(idx, s.size()));
    return {true, std::nullopt};
}

CheckResult is_closed_family(const PointSet& s, const CoordinateFamily& fam) {
    if (fam.dim != s.dim()) {
        throw error("coordinate family dimension " + std::to_string(fam.dim) +
                    " does not match set dimension " + std::to_string(s.dim()));
    }
    if (static_cast<int>(fam.ops.size()) != fam.dim) {
        throw error("coordinate family must supply one operation per coordinate");
    }
    const int arity = fam.arity();
    for (const TotalOp& op : fam.ops) {
        if (op.arity != arity) throw error("coordinate family operations must share one arity");
    }
    if (s.empty()) return {true, std::nullopt};
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    std::vector<Int> args(static_cast<std::size_t>(arity));
    do {
        std::vector<Int> image(static_cast<std::size_t>(s.dim()));
        for (int k = 0; k < s.dim(); ++k) {
            for (std::size_t a = 0; a < idx.size(); ++a) args[a] = s[idx[a]].coords[k];
            image[static_cast<std::size_t>(k)] = fam.ops[static_cast<std::size_t>(k)].eval(args);
        }
        Point img(std::move(image));
        if (!s.contains(img)) {
            std::vector<Point> tuple;
            for (std::size_t i : idx) tuple.push_back(s[i]);
            return {false, make_total_witness(std::move(tuple), img)};
        }
    } while (next_tuple(idx, s.size()));
    return {true, std::nullopt};
}

}  // namespace ipoly
