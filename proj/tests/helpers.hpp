#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "altlink/codec.hpp"
#include "altlink/generate.hpp"
#include "altlink/model.hpp"

namespace testutil {

inline std::string trefoil_pd() { return "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"; }
inline std::string figure8_pd() { return "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]"; }

inline altlink::model::Diagram trefoil() { return altlink::codec::parse(trefoil_pd()); }
inline altlink::model::Diagram figure8() { return altlink::codec::parse(figure8_pd()); }

// Face count by union-find over darts glued d ~ sigma(alpha(d)); independent
// of the orbit-walk implementation in the library.
inline int face_count_unionfind(const altlink::model::Diagram& d) {
    std::vector<int> parent(d.darts());
    for (int i = 0; i < d.darts(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < d.darts(); ++x) {
        int a = find(x), b = find(d.sigma[d.alpha[x]]);
        if (a != b) parent[a] = b;
    }
    int cnt = 0;
    for (int x = 0; x < d.darts(); ++x)
        if (find(x) == x) ++cnt;
    return cnt;
}

// Sorted multiset of face orbit lengths; invariant under dart relabeling.
inline std::vector<int> face_degree_multiset(const altlink::model::Diagram& d) {
    std::vector<int> out;
    for (auto& f : altlink::model::faces(d)) out.push_back((int)f.size());
    std::sort(out.begin(), out.end());
    return out;
}

// Random structure-preserving relabel with a fixed seed.
inline altlink::model::Diagram random_relabel(const altlink::model::Diagram& d, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> perm(d.n), rot(d.n);
    for (int i = 0; i < d.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < d.n; ++i) rot[i] = (int)(rng() % 4);
    return altlink::model::relabel(d, perm, rot);
}

// Insert a Reidemeister-I kink on the edge holding dart a. The new crossing
// gets a loop edge on two rotation-adjacent darts; over flags are chosen so
// the diagram stays alternating.
inline altlink::model::Diagram add_kink(const altlink::model::Diagram& d, int a) {
    altlink::model::Diagram out = d;
    int b = d.alpha[a];
    int base = out.darts();
    out.n += 1;
    out.sigma.resize(out.darts());
    out.alpha.resize(out.darts());
    out.over.resize(out.darts());
    for (int k = 0; k < 4; ++k) out.sigma[base + k] = base + ((k + 1) % 4);
    out.alpha[base + 1] = base + 2;
    out.alpha[base + 2] = base + 1;
    out.alpha[a] = base + 0;
    out.alpha[base + 0] = a;
    out.alpha[b] = base + 3;
    out.alpha[base + 3] = b;
    bool k0_over = !d.over[a];
    out.over[base + 0] = k0_over;
    out.over[base + 2] = k0_over;
    out.over[base + 1] = !k0_over;
    out.over[base + 3] = !k0_over;
    altlink::model::check_structure(out);
    return out;
}

inline altlink::model::Diagram disjoint_union(const altlink::model::Diagram& a,
                                              const altlink::model::Diagram& b) {
    altlink::model::Diagram out = a;
    int off = a.darts();
    out.n += b.n;
    out.unknot_components += b.unknot_components;
    for (int x = 0; x < b.darts(); ++x) {
        out.sigma.push_back(b.sigma[x] + off);
        out.alpha.push_back(b.alpha[x] + off);
        out.over.push_back(b.over[x]);
    }
    return out;
}

// Splices the edge of dart 0 in a to the edge of dart 0 in b, crossing the
// loose ends over so both new edges stay alternating.
inline altlink::model::Diagram connected_sum(const altlink::model::Diagram& a,
                                             const altlink::model::Diagram& b) {
    altlink::model::Diagram out = disjoint_union(a, b);
    int x = 0, xp = out.alpha[0];
    int y = 4 * a.n, yp = out.alpha[y];
    if (out.over[y] == out.over[x]) std::swap(y, yp);
    out.alpha[x] = y;
    out.alpha[y] = x;
    out.alpha[xp] = yp;
    out.alpha[yp] = xp;
    return out;
}

// Checkerboard coloring of the faces; adjacent faces always get opposite
// colors on a 4-valent sphere map.
inline std::vector<int> face_two_coloring(const altlink::model::Diagram& d) {
    auto info = altlink::model::build_map_info(d);
    int nf = (int)info.faces.size();
    std::vector<int> color(nf, -1);
    std::vector<int> stack;
    for (int f = 0; f < nf; ++f) {
        if (color[f] != -1) continue;
        color[f] = 0;
        stack.push_back(f);
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            for (int x : info.faces[g]) {
                int h = info.face_of[d.alpha[x]];
                if (color[h] == -1) {
                    color[h] = 1 - color[g];
                    stack.push_back(h);
                } else if (color[h] == color[g]) {
                    throw std::runtime_error("map is not checkerboard colorable");
                }
            }
        }
    }
    return color;
}

// Installs the alternating over/under pattern determined by the checkerboard
// coloring (one of the two possible patterns for the given curve layout).
inline altlink::model::Diagram assign_alternating_over(altlink::model::Diagram d) {
    auto info = altlink::model::build_map_info(d);
    auto color = face_two_coloring(d);
    for (int x = 0; x < d.darts(); ++x) d.over[x] = (char)color[info.face_of[x]];
    altlink::model::check_structure(d);
    return d;
}

// The alternating 6-crossing diagram on the octahedron map: three mutually
// clasping unknotted rings. No bigons, so no twist to flype anywhere.
inline altlink::model::Diagram octahedron_link() {
    // Neighbor cycles (ccw) of the octahedron with vertices +x,-x,+y,-y,+z,-z.
    static const int nb[6][4] = {{2, 5, 3, 4}, {4, 3, 5, 2}, {4, 1, 5, 0},
                                 {0, 5, 1, 4}, {0, 3, 1, 2}, {2, 1, 3, 0}};
    altlink::model::Diagram d;
    d.n = 6;
    d.sigma.assign(24, 0);
    d.alpha.assign(24, -1);
    d.over.assign(24, 0);
    for (int v = 0; v < 6; ++v)
        for (int k = 0; k < 4; ++k) d.sigma[4 * v + k] = 4 * v + (k + 1) % 4;
    for (int v = 0; v < 6; ++v)
        for (int k = 0; k < 4; ++k) {
            int w = nb[v][k];
            for (int j = 0; j < 4; ++j)
                if (nb[w][j] == v) d.alpha[4 * v + k] = 4 * w + j;
        }
    return assign_alternating_over(d);
}

// Replaces crossing x by a vertical twist of k crossings occupying the same
// disk; the four outside connections keep their cyclic order. Over flags are
// re-derived for the whole map afterwards.
inline altlink::model::Diagram replace_crossing_with_twist(const altlink::model::Diagram& d,
                                                           int x, int k) {
    for (int a = 0; a < 4; ++a) {
        if (d.sigma[4 * x + a] != 4 * x + (a + 1) % 4)
            throw std::runtime_error("crossing block must be in standard rotation");
        if (d.alpha[4 * x + a] / 4 == x) throw std::runtime_error("crossing has a loop edge");
    }
    altlink::model::Diagram out;
    out.n = d.n - 1 + k;
    out.sigma.assign(4 * out.n, 0);
    out.alpha.assign(4 * out.n, -1);
    out.over.assign(4 * out.n, 0);
    auto remap = [&](int dart) {
        int c = dart / 4;
        return 4 * (c < x ? c : c - 1) + dart % 4;
    };
    for (int a = 0; a < d.darts(); ++a) {
        if (a / 4 == x) continue;
        out.sigma[remap(a)] = remap(d.sigma[a]);
        if (d.alpha[a] / 4 != x) out.alpha[remap(a)] = remap(d.alpha[a]);
    }
    int base = 4 * (d.n - 1);  // first twist crossing block
    for (int j = 0; j < k; ++j)
        for (int a = 0; a < 4; ++a) out.sigma[base + 4 * j + a] = base + 4 * j + (a + 1) % 4;
    auto join = [&](int a, int b) {
        out.alpha[a] = b;
        out.alpha[b] = a;
    };
    // Corners: 0=NW, 1=SW, 2=SE, 3=NE. Strip ports mirror the old crossing.
    join(base + 0, remap(d.alpha[4 * x + 0]));
    join(base + 3, remap(d.alpha[4 * x + 3]));
    join(base + 4 * (k - 1) + 1, remap(d.alpha[4 * x + 1]));
    join(base + 4 * (k - 1) + 2, remap(d.alpha[4 * x + 2]));
    for (int j = 0; j + 1 < k; ++j) {
        join(base + 4 * j + 1, base + 4 * (j + 1) + 0);
        join(base + 4 * j + 2, base + 4 * (j + 1) + 3);
    }
    return assign_alternating_over(out);
}

}  // namespace testutil
