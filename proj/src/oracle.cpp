#include "altlink/oracle.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "altlink/chain.hpp"
#include "altlink/isotopy.hpp"
#include "altlink/squares.hpp"
#include "altlink/structure.hpp"

namespace altlink::oracle {

using model::Diagram;
using model::Error;
using model::ErrorCode;

std::string FlypeMove::describe() const {
    std::string s = "{\"edges\":[";
    for (int k = 0; k < 4; ++k) {
        if (k) s += ',';
        s += std::to_string(edges[k]);
    }
    s += "],\"far_side\":";
    s += std::to_string(far_side);
    s += ",\"direction\":\"";
    s += absorb_next ? "forward" : "backward";
    s += "\"}";
    return s;
}

namespace {

// Region graphs here only need the chain structure, so every bead side gets
// the same throwaway color and identity labels.
isotopy::SideColoring blank_coloring(int squares) {
    isotopy::SideColoring c;
    c.init(squares);
    for (int i = 0; i < squares; ++i)
        for (int s = 0; s < 2; ++s) {
            c.color[i][s] = 0;
            c.labels[i][s] = {0, 1, 2, 3};
        }
    return c;
}

struct AmbientChain {
    isotopy::TangleGraph g;
    structure::ChainParse parse;
    int bead_site = -1;  // index into parse.sites
};

// Chain of the region whose boundary hides far_side of the square, or no
// value when that region is not a product chain.
bool ambient_chain(const Diagram& d, const model::MapInfo& info, const squares::Collection& col,
                   const std::vector<structure::Region>& regions, int square, int far_side,
                   const isotopy::SideColoring& coloring, AmbientChain& out) {
    const structure::Region* reg = nullptr;
    for (const auto& r : regions)
        for (const auto& b : r.boundary)
            if (b[0] == square && b[1] == far_side) reg = &r;
    if (!reg) return false;
    out.g = isotopy::build_tangle_graph(d, info, col, *reg, -1, coloring);
    out.parse = structure::parse_chain(out.g);
    if (!out.parse.ok) return false;
    out.bead_site = -1;
    for (int i = 0; i < (int)out.parse.sites.size(); ++i) {
        const auto& s = out.parse.sites[i];
        if (s.is_bead && out.g.verts[s.vertex].host == square) out.bead_site = i;
    }
    return out.bead_site >= 0;
}

}  // namespace

std::vector<FlypeMove> enumerate_moves(const Diagram& d) {
    std::vector<FlypeMove> moves;
    if (d.n < 2) return moves;
    model::MapInfo info = model::build_map_info(d);
    squares::Collection col = squares::characteristic_collection(d, info);
    if (col.squares.empty()) return moves;
    auto regions = structure::complement_regions(col, d.n);
    isotopy::SideColoring coloring = blank_coloring((int)col.squares.size());
    for (int sq = 0; sq < (int)col.squares.size(); ++sq)
        for (int far = 0; far < 2; ++far) {
            AmbientChain ac;
            if (!ambient_chain(d, info, col, regions, sq, far, coloring, ac)) continue;
            int m = (int)ac.parse.sites.size();
            for (bool next : {true, false}) {
                int ni = next ? (ac.bead_site + 1) % m : (ac.bead_site + m - 1) % m;
                if (ni == ac.bead_site || ac.parse.sites[ni].is_bead) continue;
                FlypeMove mv;
                mv.square = sq;
                mv.far_side = far;
                mv.absorb_next = next;
                mv.edges = col.squares[sq].edges;
                moves.push_back(mv);
            }
        }
    return moves;
}

Diagram apply_flype(const Diagram& d, const FlypeMove& m) {
    model::MapInfo info = model::build_map_info(d);
    squares::Collection col = squares::characteristic_collection(d, info);
    if (m.square < 0 || m.square >= (int)col.squares.size())
        throw Error(ErrorCode::MoveInapplicable, "no collection square with that index");
    auto regions = structure::complement_regions(col, d.n);
    isotopy::SideColoring coloring = blank_coloring((int)col.squares.size());
    AmbientChain ac;
    if (!ambient_chain(d, info, col, regions, m.square, m.far_side, coloring, ac))
        throw Error(ErrorCode::MoveInapplicable, "ambient region is not a product chain");
    int sites = (int)ac.parse.sites.size();
    int xi = m.absorb_next ? (ac.bead_site + 1) % sites : (ac.bead_site + sites - 1) % sites;
    if (xi == ac.bead_site || ac.parse.sites[xi].is_bead)
        throw Error(ErrorCode::MoveInapplicable, "no free crossing next to the square there");

    // Work in the walk direction that puts the absorbed crossing immediately
    // before the bead: its exits then feed the bead's arrival pair.
    int q, r;
    if (m.absorb_next) {
        q = d.sigma[d.sigma[ac.g.host_dart[ac.parse.sites[xi].arrival_dart]]];
        r = (ac.parse.sites[ac.bead_site].arrival_port + 2) % 4;
    } else {
        q = ac.g.host_dart[ac.parse.sites[xi].arrival_dart];
        r = ac.parse.sites[ac.bead_site].arrival_port;
    }
    int bv = ac.parse.sites[ac.bead_site].vertex;
    auto channel = [&](int port) {
        return d.alpha[ac.g.host_dart[ac.g.dart_at(bv, ((port % 4) + 4) % 4)]];
    };
    int s1 = d.sigma[q], s2 = d.sigma[s1], s3 = d.sigma[s2];
    int b1 = channel(r), b2 = channel(r + 1);
    int f2 = channel(r + 2), f3 = channel(r + 3);
    if (b1 != d.alpha[s3] || b2 != d.alpha[s2])
        throw Error(ErrorCode::Precondition, "flype lost the chain orientation");

    int xc = model::crossing_of(q);
    int y1 = 4 * xc, y2 = 4 * xc + 1, y3 = 4 * xc + 2, y4 = 4 * xc + 3;
    Diagram out = d;
    out.sigma[y1] = y2;
    out.sigma[y2] = y3;
    out.sigma[y3] = y4;
    out.sigma[y4] = y1;
    auto join = [&](int a, int b) {
        out.alpha[a] = b;
        out.alpha[b] = a;
    };
    if (sites == 2) {
        // Necklace of one bead and one crossing: the rotated tangle's old
        // front pair becomes the back pair and rejoins the crossing directly.
        join(b1, y2);
        join(b2, y1);
        join(y3, f3);
        join(y4, f2);
        out.over[y1] = !out.over[b2];
        out.over[y2] = !out.over[b1];
        out.over[y3] = !out.over[f3];
        out.over[y4] = !out.over[f2];
    } else {
        int v2 = d.alpha[f2], v3 = d.alpha[f3];
        int w1 = d.alpha[q], w2 = d.alpha[s1];
        join(w1, f2);
        join(w2, f3);
        join(b2, y1);
        join(b1, y2);
        join(y3, v2);
        join(y4, v3);
        out.over[y1] = !out.over[b2];
        out.over[y2] = !out.over[b1];
        out.over[y3] = !out.over[v2];
        out.over[y4] = !out.over[v3];
    }
    if (out.over[y1] != out.over[y3] || out.over[y2] != out.over[y4] ||
        out.over[y1] == out.over[y2])
        throw Error(ErrorCode::Precondition, "flype broke the strand flags");
    model::check_structure(out);
    return out;
}

namespace {

std::string encode_from(const Diagram& d, int root) {
    int m = d.darts();
    std::vector<int> id(m, -1), order;
    order.reserve(m);
    id[root] = 0;
    order.push_back(root);
    for (int h = 0; h < (int)order.size(); ++h) {
        int x = order[h];
        for (int y : {d.sigma[x], d.alpha[x]})
            if (id[y] < 0) {
                id[y] = (int)order.size();
                order.push_back(y);
            }
    }
    if ((int)order.size() != m)
        throw Error(ErrorCode::Precondition, "canonical form needs a connected diagram");
    std::string s;
    s.reserve((size_t)m * 8);
    for (int k = 0; k < m; ++k) {
        int x = order[k];
        s += std::to_string(id[d.sigma[x]]);
        s += ',';
        s += std::to_string(id[d.alpha[x]]);
        s += d.over[x] ? '^' : '_';
    }
    return s;
}

}  // namespace

std::string canonical_form(const Diagram& d) {
    if (d.n == 0) return "U" + std::to_string(d.unknot_components);
    Diagram flip = model::reversed_flagswapped(d);
    std::string best;
    for (int root = 0; root < d.darts(); ++root) {
        std::string a = encode_from(d, root);
        if (best.empty() || a < best) best = std::move(a);
        std::string b = encode_from(flip, root);
        if (b < best) best = std::move(b);
    }
    if (d.unknot_components) best += "U" + std::to_string(d.unknot_components);
    return best;
}

namespace {

struct Search {
    Orbit orb;
    std::vector<Diagram> reps;
    std::vector<int> parent;
    std::vector<std::string> via;
    int found = -1;
};

Search flype_search(const Diagram& d, long max_states, const std::string* target) {
    Search s;
    std::unordered_set<std::string> seen;
    std::vector<int> dist;
    std::string start = canonical_form(d);
    seen.insert(start);
    s.orb.codes.push_back(start);
    s.reps.push_back(d);
    s.parent.push_back(-1);
    s.via.push_back("");
    dist.push_back(0);
    if (target && start == *target) {
        s.found = 0;
        return s;
    }
    for (size_t h = 0; h < s.reps.size(); ++h) {
        Diagram cur = s.reps[h];
        for (const FlypeMove& mv : enumerate_moves(cur)) {
            Diagram nd = apply_flype(cur, mv);
            std::string code = canonical_form(nd);
            if (seen.count(code)) continue;
            if ((long)s.reps.size() >= max_states) {
                s.orb.truncated = true;
                return s;
            }
            seen.insert(code);
            s.orb.codes.push_back(code);
            s.reps.push_back(std::move(nd));
            s.parent.push_back((int)h);
            s.via.push_back(mv.describe());
            dist.push_back(dist[h] + 1);
            s.orb.diameter = std::max(s.orb.diameter, dist.back());
            if (target && code == *target) {
                s.found = (int)s.reps.size() - 1;
                return s;
            }
        }
    }
    return s;
}

}  // namespace

Orbit orbit(const Diagram& d, long max_states) {
    return flype_search(d, max_states, nullptr).orb;
}

PathResult oracle_equivalent(const Diagram& d1, const Diagram& d2, int cap, long max_states) {
    if (d1.n > cap || d2.n > cap)
        throw Error(ErrorCode::CapExceeded,
                    "oracle refuses diagrams above " + std::to_string(cap) + " crossings");
    PathResult out;
    if (d1.n == 0 || d2.n == 0) {
        out.equivalent = d1.n == 0 && d2.n == 0 && d1.unknot_components == d2.unknot_components;
        return out;
    }
    std::string target = canonical_form(d2);
    Search s = flype_search(d1, max_states, &target);
    out.truncated = s.orb.truncated;
    out.equivalent = s.found >= 0;
    for (int at = s.found; at > 0; at = s.parent[at]) out.moves.push_back(s.via[at]);
    std::reverse(out.moves.begin(), out.moves.end());
    return out;
}

}  // namespace altlink::oracle
