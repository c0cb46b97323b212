#include "altlink/structure.hpp"

#include <algorithm>

#include "altlink/chain.hpp"
#include "altlink/isotopy.hpp"
#include "altlink/model.hpp"

namespace altlink::structure {

Region region_of_side(const squares::Collection& col, int square, int side, int n) {
    const squares::SquareClass& sq = col.squares[square];
    CrossSet inside = side == 0 ? sq.side_left : sq.side_right;

    Region r;
    r.free = inside;
    r.boundary.push_back({square, 1 - side});
    for (auto& [j, t] : squares::maximal_subsides(col, inside, square)) {
        const squares::SquareClass& sub = col.squares[j];
        r.free = r.free.minus(t == 0 ? sub.side_left : sub.side_right);
        r.boundary.push_back({j, t});
    }
    std::sort(r.boundary.begin(), r.boundary.end());
    (void)n;
    return r;
}

std::vector<Region> complement_regions(const squares::Collection& col, int n) {
    std::vector<Region> out;
    if (col.squares.empty()) {
        CrossSet all(n);
        for (int i = 0; i < n; ++i) all.set(i);
        out.push_back(Region{all, {}});
        return out;
    }
    for (int i = 0; i < (int)col.squares.size(); ++i)
        for (int s = 0; s < 2; ++s) {
            Region r = region_of_side(col, i, s, n);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
        }
    return out;
}

namespace {

// State of the two-strand walk: a site (graph vertex, or the anchor disk when
// vertex == -1) together with the ccw-first arrival port/dart.
struct WalkState {
    int vertex;   // -1 for the anchor
    int arrival;  // dart id, or port index 0..3 at the anchor
    bool operator==(const WalkState& o) const { return vertex == o.vertex && arrival == o.arrival; }
};

}  // namespace

ChainParse parse_chain(const isotopy::TangleGraph& g) {
    using Kind = isotopy::TangleGraph::Kind;

    int plain_sites = 0, bead_sites = 0;
    for (auto& v : g.verts) {
        if (v.kind == Kind::Plain) ++plain_sites;
        if (v.kind == Kind::Bead) ++bead_sites;
    }
    int total_sites = plain_sites + bead_sites + (g.anchored ? 1 : 0);

    ChainParse best;
    best.free_total = plain_sites;
    best.weight = bead_sites;
    if (total_sites == 0) return best;

    auto attempt = [&](const WalkState& start) -> bool {
        std::vector<char> seen(g.verts.size(), 0);
        bool anchor_seen = false;
        std::vector<ChainSite> sites;
        WalkState cur = start;

        for (int guard = 0; guard <= total_sites; ++guard) {
            if (cur.vertex == -1) {
                if (anchor_seen) return false;
                anchor_seen = true;
                sites.push_back(ChainSite{-1, true, false, cur.arrival, -1});
            } else {
                if (seen[cur.vertex]) return false;
                seen[cur.vertex] = 1;
                const auto& v = g.verts[cur.vertex];
                sites.push_back(ChainSite{cur.vertex, false, v.kind == Kind::Bead,
                                          g.port_of[cur.arrival], cur.arrival});
            }

            // Exits are the two ports ccw after the arrival pair.
            int e2, e3;
            if (cur.vertex == -1) {
                e2 = g.first_dart_of(g.anchor_stub_vert[(cur.arrival + 2) % 4]);
                e3 = g.first_dart_of(g.anchor_stub_vert[(cur.arrival + 3) % 4]);
            } else {
                e2 = g.rot[g.rot[cur.arrival]];
                e3 = g.rot[e2];
            }
            int a2 = g.mate[e2], a3 = g.mate[e3];

            WalkState next;
            if (g.verts[g.vert_of[a3]].kind == Kind::Stub || g.verts[g.vert_of[a2]].kind == Kind::Stub) {
                if (g.verts[g.vert_of[a3]].kind != Kind::Stub) return false;
                if (g.verts[g.vert_of[a2]].kind != Kind::Stub) return false;
                int p3 = g.anchor_port_of(g.vert_of[a3]);
                int p2 = g.anchor_port_of(g.vert_of[a2]);
                if (p2 != (p3 + 1) % 4) return false;
                next = WalkState{-1, p3};
            } else {
                if (g.vert_of[a2] != g.vert_of[a3]) return false;
                if (g.rot[a3] != a2) return false;
                next = WalkState{g.vert_of[a3], a3};
            }

            if (next == start) {
                if ((int)sites.size() != total_sites) return false;
                best.ok = true;
                best.sites = std::move(sites);
                return true;
            }
            cur = next;
        }
        return false;
    };

    if (g.anchored) {
        for (int p = 0; p < 4 && !best.ok; ++p) attempt(WalkState{-1, p});
    } else {
        int v0 = 0;
        for (int d = g.first_dart_of(v0), k = 0; k < 4 && !best.ok; ++k, d = g.rot[d])
            attempt(WalkState{v0, d});
    }

    if (best.ok) {
        for (auto& s : best.sites)
            if (!s.is_anchor && !s.is_bead) {
                best.has_parity = true;
                best.parity = g.over[s.arrival_dart] != 0;
                break;
            }
    }
    return best;
}

std::optional<ProductRegionProfile> detect_product_region(const isotopy::TangleGraph& g) {
    ChainParse parse = parse_chain(g);
    if (!parse.ok) return std::nullopt;

    ProductRegionProfile p;
    p.weight = parse.weight;
    p.free_total = parse.free_total;
    p.has_parity = parse.has_parity;
    p.parity = parse.parity;

    // Gap counts: runs of plain sites delimited by beads (and by the anchor
    // when present; the anchor is sites[0] by construction).
    if (g.anchored) {
        int run = 0;
        for (size_t i = 1; i < parse.sites.size(); ++i) {
            const ChainSite& s = parse.sites[i];
            if (s.is_bead) {
                p.gaps.push_back(run);
                run = 0;
                p.bead_colors.push_back(g.verts[s.vertex].color);
                std::array<int, 4> ls;
                for (int j = 0; j < 4; ++j)
                    ls[j] = g.label[g.dart_at(s.vertex, (s.arrival_port + j) % 4)];
                p.bead_labels.push_back(ls);
            } else {
                ++run;
            }
        }
        p.gaps.push_back(run);
    } else if (p.weight > 0) {
        // Rotate so a bead leads, then count runs after each bead.
        size_t first_bead = 0;
        while (!parse.sites[first_bead].is_bead) ++first_bead;
        size_t m = parse.sites.size();
        int run = 0;
        for (size_t k = 1; k <= m; ++k) {
            const ChainSite& s = parse.sites[(first_bead + k) % m];
            if (s.is_bead || k == m) {
                p.gaps.push_back(run);
                run = 0;
            } else {
                ++run;
            }
        }
        for (size_t k = 0; k < m; ++k) {
            const ChainSite& s = parse.sites[(first_bead + k) % m];
            if (!s.is_bead) continue;
            p.bead_colors.push_back(g.verts[s.vertex].color);
            std::array<int, 4> ls;
            for (int j = 0; j < 4; ++j)
                ls[j] = g.label[g.dart_at(s.vertex, (s.arrival_port + j) % 4)];
            p.bead_labels.push_back(ls);
        }
    }
    return p;
}

}  // namespace altlink::structure
