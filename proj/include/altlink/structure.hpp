#pragma once

#include <array>
#include <vector>

#include "altlink/bitset.hpp"
#include "altlink/squares.hpp"

namespace altlink::structure {

using altlink::CrossSet;

// One complementary region of the characteristic collection: the free
// crossings lying in it plus its boundary circles. Each boundary entry names
// a collection square and the side hidden from the region (the far side, i.e.
// the tangle that the circle wraps from the region's viewpoint).
struct Region {
    CrossSet free;
    std::vector<std::array<int, 2>> boundary;  // (square, far side), sorted

    bool operator==(const Region& o) const { return free == o.free && boundary == o.boundary; }
};

// Region directly inside the given side of a collection square: bounded by
// that square and by the subsides maximal under it.
Region region_of_side(const squares::Collection& col, int square, int side, int n);

// All complementary regions; |collection| + 1 of them on the sphere, or the
// single whole-diagram region when the collection is empty.
std::vector<Region> complement_regions(const squares::Collection& col, int n);

}  // namespace altlink::structure
