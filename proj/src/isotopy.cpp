#include "altlink/isotopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "altlink/chain.hpp"

namespace altlink::isotopy {

using model::Error;
using model::ErrorCode;
using Kind = TangleGraph::Kind;

namespace {

// Port -> traversal index around a collapsed disk. Seen from the region the
// four cut points run with the traversal when the region is the right side
// of the square's curve and against it when it is the left side.
inline int traversal_of_port(int near_side, int port) {
    return near_side == 1 ? port : (4 - port) % 4;
}

inline int near_dart(const squares::SquareClass& sq, int near_side, int traversal) {
    return near_side == 0 ? sq.in_darts[traversal] : sq.out_darts[traversal];
}

void check_spherical(const TangleGraph& g) {
    int n = g.darts();
    if (n == 0) throw Error(ErrorCode::Precondition, "tangle graph is empty");

    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {g.rot[d], g.mate[d]})
            if (comp[e] < 0) {
                comp[e] = 0;
                stack.push_back(e);
            }
    }
    if (std::count(comp.begin(), comp.end(), 0) != n)
        throw Error(ErrorCode::Precondition, "tangle graph is not connected");

    std::vector<char> seen(n, 0);
    int faces = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++faces;
        for (int x = d; !seen[x]; x = g.rot[g.mate[x]]) seen[x] = 1;
    }
    int v = (int)g.verts.size(), e = n / 2;
    if (v - e + faces != 2)
        throw Error(ErrorCode::Precondition, "tangle graph is not spherical");
}

}  // namespace

TangleGraph build_tangle_graph(const model::Diagram& d, const model::MapInfo& info,
                               const squares::Collection& col, const structure::Region& region,
                               int anchor_boundary_index, const SideColoring& coloring) {
    TangleGraph g;
    g.anchored = anchor_boundary_index >= 0;

    struct PendingArc {
        int edge;
        int graph_dart;
    };
    std::vector<PendingArc> arcs;

    auto add_vertex = [&](Kind kind, int host, int valence) {
        TangleGraph::Vertex v;
        v.kind = kind;
        v.host = host;
        v.valence = valence;
        v.first_dart = g.darts();
        g.verts.push_back(v);
        for (int k = 0; k < valence; ++k) {
            g.rot.push_back(v.first_dart + k);
            g.mate.push_back(-1);
            g.vert_of.push_back((int)g.verts.size() - 1);
            g.port_of.push_back(k);
            g.over.push_back(0);
            g.label.push_back(-1);
            g.host_dart.push_back(-1);
        }
        return (int)g.verts.size() - 1;
    };

    for (int c : region.free.elements()) {
        int v = add_vertex(Kind::Plain, c, 4);
        int base = g.verts[v].first_dart;
        for (int k = 0; k < 4; ++k) {
            int hd = 4 * c + k;
            g.rot[base + k] = base + (d.sigma[hd] - 4 * c);
            g.over[base + k] = d.over[hd];
            g.host_dart[base + k] = hd;
            arcs.push_back({info.edge_of[hd], base + k});
        }
    }

    for (int b = 0; b < (int)region.boundary.size(); ++b) {
        auto [sq_id, far] = region.boundary[b];
        const squares::SquareClass& sq = col.squares[sq_id];
        int near = 1 - far;
        if (b == anchor_boundary_index) {
            g.anchor_square = sq_id;
            for (int p = 0; p < 4; ++p) {
                int v = add_vertex(Kind::Stub, sq_id, 1);
                int tr = traversal_of_port(near, p);
                int hd = near_dart(sq, near, tr);
                g.anchor_stub_vert[p] = v;
                g.anchor_port_traversal[p] = tr;
                g.host_dart[g.verts[v].first_dart] = hd;
                arcs.push_back({info.edge_of[hd], g.verts[v].first_dart});
            }
        } else {
            if (coloring.color[sq_id][far] < 0)
                throw Error(ErrorCode::Precondition, "bead side has no color assigned");
            int v = add_vertex(Kind::Bead, sq_id, 4);
            g.verts[v].color = coloring.color[sq_id][far];
            g.verts[v].sym180 = coloring.sym[sq_id][far] != 0;
            int base = g.verts[v].first_dart;
            for (int p = 0; p < 4; ++p) {
                int tr = traversal_of_port(near, p);
                int hd = near_dart(sq, near, tr);
                g.rot[base + p] = base + (p + 1) % 4;
                g.label[base + p] = coloring.labels[sq_id][far][tr];
                g.host_dart[base + p] = hd;
                arcs.push_back({info.edge_of[hd], base + p});
            }
        }
    }

    // Each diagram edge meets the region in at most one segment, so the
    // graph darts pair off two per edge.
    std::map<int, std::vector<int>> by_edge;
    for (auto& a : arcs) by_edge[a.edge].push_back(a.graph_dart);
    for (auto& [edge, ds] : by_edge) {
        if (ds.size() != 2)
            throw Error(ErrorCode::Precondition, "region boundary does not resolve to arcs");
        g.mate[ds[0]] = ds[1];
        g.mate[ds[1]] = ds[0];
    }
    for (int x = 0; x < g.darts(); ++x)
        if (g.mate[x] < 0) throw Error(ErrorCode::Precondition, "unmatched arc end in region");

    check_spherical(g);
    return g;
}

namespace {

bool extend_root(const TangleGraph& g1, const TangleGraph& g2, int r1, int r2,
                 std::vector<int>& f, long& steps) {
    std::fill(f.begin(), f.end(), -1);
    std::vector<int> stack;
    // Chosen label half-turn per g1 bead: a symmetric bead may match with all
    // four labels turned together, but never with a mix.
    std::vector<int> vshift(g1.verts.size(), -1);

    auto assign = [&](int x, int y) -> bool {
        if (f[x] != -1) return f[x] == y;
        const auto& v1 = g1.verts[g1.vert_of[x]];
        const auto& v2 = g2.verts[g2.vert_of[y]];
        if (v1.kind != v2.kind || v1.color != v2.color) return false;
        if (g1.label[x] >= 0) {
            int s = (g2.label[y] - g1.label[x]) & 3;
            if (s != 0 && !(s == 2 && v1.sym180)) return false;
            int& memo = vshift[g1.vert_of[x]];
            if (memo == -1)
                memo = s;
            else if (memo != s)
                return false;
        } else if (g1.label[x] != g2.label[y]) {
            return false;
        }
        f[x] = y;
        ++steps;
        stack.push_back(x);
        return true;
    };

    if (!assign(r1, r2)) return false;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (!assign(g1.rot[x], g2.rot[f[x]])) return false;
        if (!assign(g1.mate[x], g2.mate[f[x]])) return false;
    }
    return true;
}

bool crossings_agree(const TangleGraph& g1, const TangleGraph& g2, const std::vector<int>& f,
                     bool full_check) {
    for (int v = 0; v < (int)g1.verts.size(); ++v) {
        if (g1.verts[v].kind != Kind::Plain) continue;
        for (int k = 0; k < 4; ++k) {
            int x = g1.dart_at(v, k);
            if ((g1.over[x] != 0) != (g2.over[f[x]] != 0)) return false;
        }
        if (!full_check) break;
    }
    return true;
}

}  // namespace

IsoResult plane_isotopy(const TangleGraph& g1, const TangleGraph& g2, bool full_crossing_check) {
    if (g1.anchored != g2.anchored)
        throw Error(ErrorCode::Precondition, "cannot match anchored against unanchored graph");

    IsoResult res;
    if (g1.darts() != g2.darts() || g1.verts.size() != g2.verts.size()) return res;
    if (g1.darts() == 0) return res;

    std::vector<int> f(g1.darts(), -1);
    std::vector<int> roots2;
    int root1;
    if (g1.anchored) {
        root1 = g1.first_dart_of(g1.anchor_stub_vert[0]);
        for (int p = 0; p < 4; ++p) roots2.push_back(g2.first_dart_of(g2.anchor_stub_vert[p]));
    } else {
        root1 = 0;
        roots2.resize(g2.darts());
        std::iota(roots2.begin(), roots2.end(), 0);
    }

    for (int r2 : roots2) {
        if (!extend_root(g1, g2, root1, r2, f, res.steps)) continue;
        if (!crossings_agree(g1, g2, f, full_crossing_check)) continue;
        res.ok = true;
        res.map = f;
        return res;
    }
    return res;
}

namespace {

// One direction of reading a parsed chain: bead order, per-bead ccw-first
// arrival port, and the free-crossing runs between beads.
struct ChainView {
    std::vector<int> bead_vertex;
    std::vector<int> bead_arr;
    std::vector<int> gaps;
    int anchor_arr = -1;
};

ChainView make_view(const structure::ChainParse& parse, bool anchored, bool reversed) {
    ChainView v;
    std::vector<structure::ChainSite> seq;
    if (anchored) {
        seq.assign(parse.sites.begin() + 1, parse.sites.end());
        v.anchor_arr = parse.sites[0].arrival_port;
        if (reversed) {
            std::reverse(seq.begin(), seq.end());
            v.anchor_arr = (v.anchor_arr + 2) % 4;
        }
        int run = 0;
        for (auto& s : seq) {
            if (s.is_bead) {
                v.gaps.push_back(run);
                run = 0;
                v.bead_vertex.push_back(s.vertex);
                v.bead_arr.push_back(reversed ? (s.arrival_port + 2) % 4 : s.arrival_port);
            } else {
                ++run;
            }
        }
        v.gaps.push_back(run);
        return v;
    }

    seq = parse.sites;
    if (reversed) std::reverse(seq.begin(), seq.end());
    size_t m = seq.size(), first_bead = 0;
    while (first_bead < m && !seq[first_bead].is_bead) ++first_bead;
    if (first_bead == m) return v;  // no beads: cyclic twist, gaps empty
    int run = 0;
    for (size_t k = 1; k <= m; ++k) {
        const auto& s = seq[(first_bead + k) % m];
        if (s.is_bead || k == m) {
            v.gaps.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    for (size_t k = 0; k < m; ++k) {
        const auto& s = seq[(first_bead + k) % m];
        if (!s.is_bead) continue;
        v.bead_vertex.push_back(s.vertex);
        v.bead_arr.push_back(reversed ? (s.arrival_port + 2) % 4 : s.arrival_port);
    }
    return v;
}

std::array<int, 4> bead_labels(const TangleGraph& g, int vertex, int arr) {
    std::array<int, 4> l;
    for (int j = 0; j < 4; ++j) l[j] = g.label[g.dart_at(vertex, (arr + j) % 4)];
    return l;
}

// Beads must carry equal colors slot by slot, and each bead's labels must
// agree after a half-turn for every crossing that migrated past it.
bool beads_match(const TangleGraph& g1, const ChainView& v1, const TangleGraph& g2,
                 const ChainView& v2, int rot, int carry, bool anchored) {
    int w = (int)v1.bead_vertex.size();
    for (int i = 0; i < w; ++i) {
        int j = (i + rot) % w;
        if (g1.verts[v1.bead_vertex[i]].color != g2.verts[v2.bead_vertex[j]].color) return false;
    }
    int pre1 = 0, pre2 = carry;
    for (int i = 0; i < w; ++i) {
        int j = (i + rot) % w;
        if (anchored) {
            pre1 += v1.gaps[i];
            pre2 += v2.gaps[j];
        }
        int shift = ((pre1 - pre2) % 2 + 2) % 2 == 0 ? 0 : 2;
        std::array<int, 4> l1 = bead_labels(g1, v1.bead_vertex[i], v1.bead_arr[i]);
        std::array<int, 4> l2 = bead_labels(g2, v2.bead_vertex[j], v2.bead_arr[j]);
        bool plain = true, turned = g1.verts[v1.bead_vertex[i]].sym180;
        for (int k = 0; k < 4; ++k) {
            int b = l2[(k + shift) % 4];
            plain = plain && l1[k] == b;
            turned = turned && ((l1[k] + 2) & 3) == b;
        }
        if (!plain && !turned) return false;
        if (!anchored) {
            pre1 += v1.gaps[i];
            pre2 += v2.gaps[(i + rot) % w];
        }
    }
    return true;
}

}  // namespace

CompareResult compare_tangles(const TangleGraph& g1, const TangleGraph& g2,
                              bool full_crossing_check) {
    if (g1.anchored != g2.anchored)
        throw Error(ErrorCode::Precondition, "cannot compare anchored against unanchored tangle");

    structure::ChainParse p1 = structure::parse_chain(g1);
    structure::ChainParse p2 = structure::parse_chain(g2);

    CompareResult res;
    if (p1.ok != p2.ok) return res;

    if (!p1.ok) {
        res.used_isotopy = true;
        IsoResult iso = plane_isotopy(g1, g2, full_crossing_check);
        res.steps = iso.steps;
        if (!iso.ok) return res;
        res.equivalent = true;
        if (g1.anchored)
            for (int p = 0; p < 4; ++p) {
                int d2 = iso.map[g1.first_dart_of(g1.anchor_stub_vert[p])];
                int q = g2.anchor_port_of(g2.vert_of[d2]);
                res.anchor_map[g2.anchor_port_traversal[q]] = g1.anchor_port_traversal[p];
            }
        return res;
    }

    if (p1.weight != p2.weight || p1.free_total != p2.free_total) return res;
    if (p1.free_total > 0 && p1.parity != p2.parity) return res;

    ChainView v1 = make_view(p1, g1.anchored, false);
    int w = p1.weight;

    for (int rev = 0; rev < 2 && !res.equivalent; ++rev) {
        ChainView v2 = make_view(p2, g2.anchored, rev == 1);
        if (g1.anchored) {
            if (beads_match(g1, v1, g2, v2, 0, 0, true)) {
                res.equivalent = true;
                for (int j = 0; j < 4; ++j) {
                    int port1 = (v1.anchor_arr + j) % 4;
                    int port2 = (v2.anchor_arr + j) % 4;
                    res.anchor_map[g2.anchor_port_traversal[port2]] =
                        g1.anchor_port_traversal[port1];
                }
            }
        } else if (w == 0) {
            res.equivalent = true;  // counts and parity already agreed
        } else {
            for (int rot = 0; rot < w && !res.equivalent; ++rot)
                for (int carry = 0; carry < 2 && !res.equivalent; ++carry)
                    if (beads_match(g1, v1, g2, v2, rot, carry, false)) res.equivalent = true;
        }
    }
    return res;
}

bool rotation_symmetric(const TangleGraph& g) {
    if (!g.anchored)
        throw Error(ErrorCode::Precondition, "rotation symmetry is asked of anchored tangles");

    structure::ChainParse p = structure::parse_chain(g);
    if (p.ok) {
        // A half turn of the disk swaps the two stub pairs, so it carries the
        // chain onto itself run backwards.
        ChainView fwd = make_view(p, true, false);
        ChainView rev = make_view(p, true, true);
        return beads_match(g, fwd, g, rev, 0, 0, true);
    }

    std::vector<int> f(g.darts(), -1);
    long steps = 0;
    int r1 = g.first_dart_of(g.anchor_stub_vert[0]);
    int r2 = g.first_dart_of(g.anchor_stub_vert[2]);
    return extend_root(g, g, r1, r2, f, steps) && crossings_agree(g, g, f, false);
}

}  // namespace altlink::isotopy
