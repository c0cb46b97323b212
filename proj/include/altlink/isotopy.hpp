#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "altlink/model.hpp"
#include "altlink/squares.hpp"
#include "altlink/structure.hpp"

namespace altlink::isotopy {

// Colors and boundary labels assigned to square sides of one diagram as the
// engine works up through the nesting levels. Indexed [square][side]; a color
// of -1 means the side has not been processed yet. Labels map each of the
// four traversal ports of the square to a label id 0..3 (N, W, S, E).
struct SideColoring {
    std::vector<std::array<int, 2>> color;
    std::vector<std::array<std::array<int, 4>, 2>> labels;
    // Side's tangle admits a self-equivalence turning its boundary half way
    // round. Labels of such a tangle are only defined up to that half-turn.
    std::vector<std::array<char, 2>> sym;

    void init(int squares) {
        color.assign(squares, {-1, -1});
        labels.assign(squares, {{{-1, -1, -1, -1}, {-1, -1, -1, -1}}});
        sym.assign(squares, {0, 0});
    }
};

// Map of one complementary region: free crossings kept as 4-valent vertices,
// boundary circles collapsed to colored beads, and (when the region is being
// compared as the inside of a particular square) that square's four cut
// points kept as valence-1 stubs.
struct TangleGraph {
    enum class Kind : uint8_t { Plain, Bead, Stub };

    struct Vertex {
        Kind kind;
        int color = -1;       // beads only
        bool sym180 = false;  // beads only: color class is half-turn symmetric
        int host = -1;        // plain: crossing id; bead/stub: collection square id
        int first_dart = 0;
        int valence = 0;
    };

    std::vector<Vertex> verts;
    std::vector<int> rot;        // ccw successor around the vertex
    std::vector<int> mate;       // other end of the arc
    std::vector<int> vert_of;
    std::vector<int> port_of;    // position within the vertex (0..valence-1)
    std::vector<char> over;      // plain darts: strand passes over here
    std::vector<int> label;      // bead darts: boundary label id, else -1
    std::vector<int> host_dart;  // originating diagram dart

    bool anchored = false;
    int anchor_square = -1;
    std::array<int, 4> anchor_stub_vert{{-1, -1, -1, -1}};       // ccw port -> stub vertex
    std::array<int, 4> anchor_port_traversal{{-1, -1, -1, -1}};  // ccw port -> traversal index

    int darts() const { return (int)rot.size(); }
    int first_dart_of(int v) const { return verts[v].first_dart; }
    int dart_at(int v, int port) const { return verts[v].first_dart + port; }
    int anchor_port_of(int stub_vertex) const {
        for (int p = 0; p < 4; ++p)
            if (anchor_stub_vert[p] == stub_vertex) return p;
        return -1;
    }
};

// Builds the region's map. anchor_boundary_index designates which boundary
// entry becomes the four stubs (-1: none, every circle becomes a bead). Bead
// colors and labels are read from the coloring and must already be assigned.
TangleGraph build_tangle_graph(const model::Diagram& d, const model::MapInfo& info,
                               const squares::Collection& col, const structure::Region& region,
                               int anchor_boundary_index, const SideColoring& coloring);

struct IsoResult {
    bool ok = false;
    std::vector<int> map;  // g1 dart -> g2 dart
    long steps = 0;
};

// Rooted search for a rotation-preserving map isomorphism respecting vertex
// kinds, bead colors and bead labels. Anchored graphs are matched stub 0 of
// g1 against each of g2's four stubs; unanchored ones try every dart of g2.
// Crossing flags are sampled on one plain vertex pair, or on all of them
// when full_crossing_check is set.
IsoResult plane_isotopy(const TangleGraph& g1, const TangleGraph& g2, bool full_crossing_check);

struct CompareResult {
    bool equivalent = false;
    bool used_isotopy = false;
    std::array<int, 4> anchor_map{{-1, -1, -1, -1}};  // g2 traversal port -> g1 traversal port
    long steps = 0;
};

// Tangle equivalence test: product regions are compared by their chains
// (bead colors, gap redistribution, label turns, twist parity), everything
// else by plane_isotopy. A product region never matches a non-product one.
CompareResult compare_tangles(const TangleGraph& g1, const TangleGraph& g2,
                              bool full_crossing_check = false);

// Whether the anchored tangle admits a self-equivalence rotating its
// boundary circle half way round. Product chains are turned end over end;
// anything else is searched with the stub roots pinned two ports apart.
bool rotation_symmetric(const TangleGraph& g);

}  // namespace altlink::isotopy
