#pragma once

// Internal compact int64 kernel for the hot closedness/closure scans.
// Sets whose coordinates fit comfortably in int64 are flattened into a
// dense membership bitmap over their bounding box; everything else takes
// the generic exact path. Results are identical either way.

#include "ipoly/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ipoly::detail {

struct CompactBox {
    int dim = 0;
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> extent;
    std::vector<std::int64_t> stride;
    std::size_t cells = 0;
};

// nullopt when a coordinate is too large for the int64 kernel or the box
// has more cells than the budget allows.
std::optional<CompactBox> make_compact_box(const Box& box, unsigned long long max_cells);

struct CompactSet {
    CompactBox box;
    int dim = 0;
    std::vector<std::int64_t> flat;   // dim coords per point, insertion order
    std::vector<std::uint8_t> member; // bitmap over box cells

    explicit CompactSet(CompactBox b);

    std::size_t count() const { return flat.size() / static_cast<std::size_t>(dim); }
    const std::int64_t* at(std::size_t i) const { return flat.data() + i * static_cast<std::size_t>(dim); }

    // -1 when p lies outside the box.
    long long offset(const std::int64_t* p) const;
    bool contains(const std::int64_t* p) const;
    bool insert(const std::int64_t* p);  // true if new; p must be in the box

    Point decode(std::size_t i) const;
};

// Flattens s into a CompactSet over bounding_box(s); nullopt when the
// kernel does not apply. Points keep their sorted (lexicographic) order.
std::optional<CompactSet> compact_from_set(const PointSet& s, unsigned long long max_cells);

inline std::int64_t floor_mid64(std::int64_t a, std::int64_t b) {
    std::int64_t s = a + b;
    if (s % 2 != 0) s -= 1;
    return s / 2;
}

inline std::int64_t ceil_mid64(std::int64_t a, std::int64_t b) {
    std::int64_t s = a + b;
    if (s % 2 != 0) s += 1;
    return s / 2;
}

inline std::int64_t mu64(std::int64_t a, std::int64_t b) {
    return a >= b ? ceil_mid64(a, b) : floor_mid64(a, b);
}

inline std::int64_t median64(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t lo = a < b ? a : b;
    if (c < lo) lo = c;
    std::int64_t hi = a > b ? a : b;
    if (c > hi) hi = c;
    return a + b + c - lo - hi;
}

}  // namespace ipoly::detail
