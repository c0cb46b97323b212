#pragma once

#include <array>
#include <utility>
#include <vector>

#include "altlink/bitset.hpp"
#include "altlink/model.hpp"

namespace altlink::squares {

using altlink::CrossSet;

// A simple closed curve meeting the diagram in four edge points, recorded by
// its traversal: the curve crosses edges[i] and then travels through faces[i];
// faces[3] is also the face where the traversal starts. in_darts[i] is the
// dart of edges[i] whose crossing lies left of the travel direction, so
// side_left collects the crossings left of the curve.
struct SquareClass {
    std::array<int, 4> edges;
    std::array<int, 4> faces;
    std::array<int, 4> in_darts;
    std::array<int, 4> out_darts;
    CrossSet side_left;
    CrossSet side_right;
    std::vector<int> key;  // lex-min (edge,face) interleaving over 4 rotations x 2 directions

    const CrossSet& side(int s) const { return s == 0 ? side_left : side_right; }
    // Partition with the lexicographically smaller crossing set first.
    std::pair<CrossSet, CrossSet> partition() const {
        if (side_left < side_right) return {side_left, side_right};
        return {side_right, side_left};
    }
};

// All essential squares (>= 2 crossings on each side), one entry per curve
// class, sorted by key. Requires a connected reduced prime alternating
// diagram with n >= 2.
std::vector<SquareClass> enumerate_essential_squares(const model::Diagram& d,
                                                     const model::MapInfo& info, int jobs = 1);

// True when the crossing partitions cannot be nested either way round, i.e.
// the curves cannot be pushed off each other.
bool interleave(const SquareClass& s1, const SquareClass& s2);

struct Collection {
    std::vector<SquareClass> squares;      // essential, pairwise non-interleaving, one per partition
    std::vector<std::array<int, 2>> level; // per square: depth label of side 0 / side 1 (1-based)
    // Containment forest over the 2*|squares| sides: parent[i][s] is the
    // (square, side) whose crossing set minimally contains side s of square i,
    // or {-1,-1} at a root.
    std::vector<std::array<std::array<int, 2>, 2>> parent;
    int max_level = 0;
};

Collection characteristic_collection(const model::Diagram& d, const model::MapInfo& info,
                                     int jobs = 1);

// Sides of collection members strictly contained in X and maximal with that
// property, excluding both sides of square `exclude` (pass -1 to keep all).
std::vector<std::array<int, 2>> maximal_subsides(const Collection& c, const CrossSet& x,
                                                 int exclude);

}  // namespace altlink::squares
