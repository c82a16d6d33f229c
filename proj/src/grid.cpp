#include "grid.hpp"

namespace ipoly::detail {

namespace {
// Leaves headroom so sums of three coordinates stay inside int64.
const Int kCoordLimit = Int(1) << 60;
}  // namespace

std::optional<CompactBox> make_compact_box(const Box& box, unsigned long long max_cells) {
    CompactBox cb;
    cb.dim = box.dim();
    Int cells = 1;
    for (int k = 0; k < cb.dim; ++k) {
        const Int& l = box.lo.coords[k];
        const Int& h = box.hi.coords[k];
        if (l < -kCoordLimit || h > kCoordLimit || h < l) return std::nullopt;
        cells *= h - l + 1;
        if (cells > max_cells) return std::nullopt;
        cb.lo.push_back(static_cast<std::int64_t>(l));
        cb.extent.push_back(static_cast<std::int64_t>(h - l + 1));
    }
    cb.cells = static_cast<std::size_t>(cells);
    cb.stride.assign(cb.dim, 1);
    for (int k = cb.dim - 2; k >= 0; --k) {
        cb.stride[k] = cb.stride[k + 1] * cb.extent[k + 1];
    }
    return cb;
}

CompactSet::CompactSet(CompactBox b) : box(std::move(b)), dim(box.dim) {
    member.assign(box.cells, 0);
}

long long CompactSet::offset(const std::int64_t* p) const {
    long long off = 0;
    for (int k = 0; k < dim; ++k) {
        std::int64_t d = p[k] - box.lo[k];
        if (d < 0 || d >= box.extent[k]) return -1;
        off += d * box.stride[k];
    }
    return off;
}

bool CompactSet::contains(const std::int64_t* p) const {
    long long off = offset(p);
    return off >= 0 && member[static_cast<std::size_t>(off)] != 0;
}

bool CompactSet::insert(const std::int64_t* p) {
    long long off = offset(p);
    if (off < 0) throw error("compact kernel: point escaped its bounding box");
    auto& cell = member[static_cast<std::size_t>(off)];
    if (cell) return false;
    cell = 1;
    flat.insert(flat.end(), p, p + dim);
    return true;
}

Point CompactSet::decode(std::size_t i) const {
    std::vector<Int> c(static_cast<std::size_t>(dim));
    const std::int64_t* p = at(i);
    for (int k = 0; k < dim; ++k) c[static_cast<std::size_t>(k)] = p[k];
    return Point(std::move(c));
}

std::optional<CompactSet> compact_from_set(const PointSet& s, unsigned long long max_cells) {
    if (s.empty()) return std::nullopt;
    auto cb = make_compact_box(bounding_box(s), max_cells);
    if (!cb) return std::nullopt;
    CompactSet out(std::move(*cb));
    std::vector<std::int64_t> buf(static_cast<std::size_t>(s.dim()));
    for (const Point& p : s) {
        for (int k = 0; k < s.dim(); ++k) {
            buf[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(p.coords[k]);
        }
        out.insert(buf.data());
    }
    return out;
}

}  // namespace ipoly::detail
