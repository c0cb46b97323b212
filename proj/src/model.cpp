#include "altlink/model.hpp"

#include <algorithm>
#include <numeric>

namespace altlink::model {

namespace {

// Connected components of the underlying 4-valent graph (darts glued by
// sigma and alpha). Returns per-dart component label.
std::vector<int> map_components(const Diagram& d, int* count) {
    std::vector<int> comp(d.darts(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < d.darts(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {d.sigma[x], d.alpha[x]}) {
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

}  // namespace

void check_structure(const Diagram& d) {
    if (d.n == 0) {
        if (d.unknot_components <= 0)
            throw Error(ErrorCode::EmptyDiagram, "diagram has no crossings and no unknot components");
        if (!d.sigma.empty() || !d.alpha.empty() || !d.over.empty())
            throw Error(ErrorCode::BadPermutation, "zero-crossing diagram carries dart data");
        return;
    }
    const int m = d.darts();
    if ((int)d.sigma.size() != m || (int)d.alpha.size() != m || (int)d.over.size() != m)
        throw Error(ErrorCode::BadPermutation, "dart arrays disagree with crossing count");

    auto in_range = [m](int x) { return x >= 0 && x < m; };
    for (int i = 0; i < d.n; ++i) {
        // sigma restricted to the block 4i..4i+3 must be a single 4-cycle.
        int base = 4 * i;
        int x = base;
        for (int step = 0; step < 4; ++step) {
            if (!in_range(d.sigma[x]) || crossing_of(d.sigma[x]) != i)
                throw Error(ErrorCode::BadPermutation,
                            "sigma leaves the dart block of crossing " + std::to_string(i));
            x = d.sigma[x];
            if (step < 3 && x == base)
                throw Error(ErrorCode::BadPermutation,
                            "sigma is not a 4-cycle at crossing " + std::to_string(i));
        }
        if (x != base)
            throw Error(ErrorCode::BadPermutation,
                        "sigma is not a 4-cycle at crossing " + std::to_string(i));
    }
    for (int x = 0; x < m; ++x) {
        if (!in_range(d.alpha[x]) || d.alpha[x] == x || d.alpha[d.alpha[x]] != x)
            throw Error(ErrorCode::BadPermutation,
                        "alpha is not a fixed-point-free involution at dart " + std::to_string(x));
    }
    for (int i = 0; i < d.n; ++i) {
        int base = 4 * i;
        int cnt = 0;
        for (int k = 0; k < 4; ++k) cnt += d.over[base + k] ? 1 : 0;
        if (cnt != 2)
            throw Error(ErrorCode::BadOverFlags,
                        "crossing " + std::to_string(i) + " has " + std::to_string(cnt) +
                            " over darts, expected 2");
        for (int k = 0; k < 4; ++k) {
            int x = base + k;
            if (d.over[x] != d.over[d.sigma[d.sigma[x]]])
                throw Error(ErrorCode::BadOverFlags,
                            "over flags at crossing " + std::to_string(i) +
                                " are not opposite-dart paired");
        }
    }

    // Each connected component must embed in a sphere: V - E + F = 2 per
    // component, computed from orbit counts.
    int comps = 0;
    std::vector<int> comp = map_components(d, &comps);
    std::vector<int> v_cnt(comps, 0), e_cnt(comps, 0), f_cnt(comps, 0);
    for (int i = 0; i < d.n; ++i) v_cnt[comp[4 * i]]++;
    std::vector<char> seen(m, 0);
    for (int x = 0; x < m; ++x) {
        if (seen[x]) continue;
        seen[x] = seen[d.alpha[x]] = 1;
        e_cnt[comp[x]]++;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        int x = s;
        do {
            seen[x] = 1;
            x = d.sigma[d.alpha[x]];
        } while (x != s);
        f_cnt[comp[s]]++;
    }
    for (int c = 0; c < comps; ++c) {
        if (v_cnt[c] - e_cnt[c] + f_cnt[c] != 2)
            throw Error(ErrorCode::NotSpherical,
                        "component " + std::to_string(c) + " has Euler characteristic " +
                            std::to_string(v_cnt[c] - e_cnt[c] + f_cnt[c]));
    }
}

MapInfo build_map_info(const Diagram& d) {
    MapInfo info;
    const int m = d.darts();
    info.edge_of.assign(m, -1);
    for (int x = 0; x < m; ++x) {
        if (info.edge_of[x] >= 0) continue;
        int id = (int)info.edges.size();
        info.edge_of[x] = info.edge_of[d.alpha[x]] = id;
        info.edges.push_back({x, d.alpha[x]});
    }
    info.face_of.assign(m, -1);
    info.pos_in_face.assign(m, -1);
    for (int s = 0; s < m; ++s) {
        if (info.face_of[s] >= 0) continue;
        int id = (int)info.faces.size();
        std::vector<int> orbit;
        int x = s;
        do {
            info.face_of[x] = id;
            info.pos_in_face[x] = (int)orbit.size();
            orbit.push_back(x);
            x = d.sigma[d.alpha[x]];
        } while (x != s);
        info.faces.push_back(std::move(orbit));
    }
    info.face_edges.resize(info.faces.size());
    for (size_t f = 0; f < info.faces.size(); ++f) {
        std::vector<int>& es = info.face_edges[f];
        for (int x : info.faces[f]) es.push_back(info.edge_of[x]);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
    }
    map_components(d, &info.components);
    return info;
}

std::vector<std::vector<int>> faces(const Diagram& d) {
    return build_map_info(d).faces;
}

std::vector<int> component_labels(const Diagram& d, int* count) {
    // Strand components: darts glued by alpha and by sigma^2 (going straight
    // through a crossing).
    std::vector<int> comp(d.darts(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < d.darts(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {d.alpha[x], d.sigma[d.sigma[x]]}) {
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

ValidationReport validate(const Diagram& d) {
    check_structure(d);
    ValidationReport r;
    r.n = d.n;
    if (d.n == 0) {
        r.connected = d.unknot_components == 1;
        r.alternating = true;
        r.reduced = true;
        r.prime = d.unknot_components == 1;
        r.link_components = d.unknot_components;
        return r;
    }
    MapInfo info = build_map_info(d);
    r.faces = (int)info.faces.size();
    r.connected = info.components == 1 && d.unknot_components == 0;

    r.alternating = true;
    for (auto& e : info.edges) {
        if (d.over[e[0]] == d.over[e[1]]) {
            r.alternating = false;
            break;
        }
    }

    // A crossing is nugatory exactly when some face orbit meets it twice.
    r.reduced = true;
    for (auto& orbit : info.faces) {
        std::vector<int> hits;
        for (int x : orbit) hits.push_back(crossing_of(x));
        std::sort(hits.begin(), hits.end());
        if (std::adjacent_find(hits.begin(), hits.end()) != hits.end()) {
            r.reduced = false;
            break;
        }
    }

    int strands = 0;
    component_labels(d, &strands);
    r.link_components = strands + d.unknot_components;

    // Prime: connected and no pair of distinct edges sharing both faces with
    // at least one crossing on each side of the cut.
    r.prime = r.connected;
    if (r.prime && d.n >= 2) {
        auto sides_of = [&](int eid) {
            int a = info.edges[eid][0];
            return std::array<int, 2>{info.face_of[a], info.face_of[d.alpha[a]]};
        };
        for (int e1 = 0; e1 < (int)info.edges.size() && r.prime; ++e1) {
            auto s1 = sides_of(e1);
            if (s1[0] == s1[1]) continue;
            for (int e2 = e1 + 1; e2 < (int)info.edges.size(); ++e2) {
                auto s2 = sides_of(e2);
                if (!((s1[0] == s2[0] && s1[1] == s2[1]) || (s1[0] == s2[1] && s1[1] == s2[0])))
                    continue;
                // Count crossings reachable from e1's endpoint without using
                // either cut edge; a proper split leaves crossings both sides.
                std::vector<char> vis(d.darts(), 0);
                std::vector<int> stack{info.edges[e1][0]};
                vis[info.edges[e1][0]] = 1;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    int y = d.sigma[x];
                    if (!vis[y]) { vis[y] = 1; stack.push_back(y); }
                    if (info.edge_of[x] != e1 && info.edge_of[x] != e2) {
                        int z = d.alpha[x];
                        if (!vis[z]) { vis[z] = 1; stack.push_back(z); }
                    }
                }
                std::vector<char> cross_seen(d.n, 0);
                int reach = 0;
                for (int x = 0; x < d.darts(); ++x)
                    if (vis[x] && !cross_seen[crossing_of(x)]) {
                        cross_seen[crossing_of(x)] = 1;
                        ++reach;
                    }
                if (reach > 0 && reach < d.n) {
                    r.prime = false;
                    break;
                }
            }
        }
    }
    return r;
}

Diagram relabel(const Diagram& d, const std::vector<int>& crossing_perm,
                const std::vector<int>& rotation) {
    if ((int)crossing_perm.size() != d.n || (int)rotation.size() != d.n)
        throw Error(ErrorCode::Precondition, "relabel arrays must have one entry per crossing");
    // new dart id for old dart x: crossing moves, block rotates along sigma.
    std::vector<int> img(d.darts());
    for (int i = 0; i < d.n; ++i) {
        int x = 4 * i;
        // Walk the sigma cycle so rotation r maps position p to p+r along it.
        std::vector<int> cyc;
        int y = x;
        for (int k = 0; k < 4; ++k) {
            cyc.push_back(y);
            y = d.sigma[y];
        }
        for (int k = 0; k < 4; ++k) {
            // Old dart cyc[k] lands at the new crossing's sigma position (k + r) mod 4.
            img[cyc[k]] = 4 * crossing_perm[i] + ((k + rotation[i]) % 4);
        }
    }
    Diagram out;
    out.n = d.n;
    out.unknot_components = d.unknot_components;
    out.sigma.assign(d.darts(), 0);
    out.alpha.assign(d.darts(), 0);
    out.over.assign(d.darts(), 0);
    for (int x = 0; x < d.darts(); ++x) {
        out.alpha[img[x]] = img[d.alpha[x]];
        out.over[img[x]] = d.over[x];
    }
    // New sigma at crossing j is the canonical cycle 4j -> 4j+1 -> 4j+2 -> 4j+3
    // only if images are laid out that way; instead map the old cycle through img.
    for (int x = 0; x < d.darts(); ++x) out.sigma[img[x]] = img[d.sigma[x]];
    return out;
}

Diagram reversed_flagswapped(const Diagram& d) {
    Diagram out = d;
    for (int x = 0; x < d.darts(); ++x) {
        out.sigma[d.sigma[x]] = x;  // inverse rotation
        out.over[x] = !d.over[x];
    }
    return out;
}

Diagram mirrored(const Diagram& d) {
    Diagram out = d;
    for (int x = 0; x < d.darts(); ++x) out.over[x] = !d.over[x];
    return out;
}

}  // namespace altlink::model
