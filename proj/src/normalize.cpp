#include "altlink/normalize.hpp"

#include <algorithm>
#include <array>

namespace altlink::normalize {

using model::Diagram;

namespace {

// Removes crossing c by letting its two strand passes run straight through.
// Each pass joins opposite legs (a, sigma^2 a); their outside edge ends fuse.
// Updating alpha in place lets the second splice read through ends the first
// one already rewired, so loops hanging across both passes chain correctly.
// A pass whose ends meet each other closes a bare circle: the crossing was
// the last one on its component, which survives as a marked unknot.
Diagram splice_out(const Diagram& d, int c, int x) {
    int s1 = d.sigma[x], s2 = d.sigma[s1], s3 = d.sigma[s2];
    std::vector<int> al = d.alpha;
    int closed = 0;
    auto splice = [&](int a, int b) {
        int u = al[a], v = al[b];
        if (u == b) {
            ++closed;
            return;
        }
        al[u] = v;
        al[v] = u;
    };
    splice(x, s2);
    splice(s1, s3);

    Diagram out;
    out.n = d.n - 1;
    out.unknot_components = d.unknot_components + (closed > 0 ? 1 : 0);
    out.sigma.resize(4 * out.n);
    out.alpha.resize(4 * out.n);
    out.over.resize(4 * out.n);
    auto mapd = [&](int t) {
        int cr = model::crossing_of(t);
        return 4 * (cr - (cr > c ? 1 : 0)) + (t & 3);
    };
    for (int t = 0; t < d.darts(); ++t) {
        if (model::crossing_of(t) == c) continue;
        out.sigma[mapd(t)] = mapd(d.sigma[t]);
        out.alpha[mapd(t)] = mapd(al[t]);
        out.over[mapd(t)] = d.over[t];
    }
    return out;
}

}  // namespace

Diagram remove_nugatory(const Diagram& d) {
    Diagram cur = d;
    while (cur.n > 0) {
        model::MapInfo info = model::build_map_info(cur);
        int dart = -1;
        for (int t = 0; t < cur.darts() && dart < 0; ++t)
            if (info.face_of[t] == info.face_of[cur.sigma[cur.sigma[t]]]) dart = t;
        if (dart < 0) break;
        cur = splice_out(cur, model::crossing_of(dart), dart);
    }
    return cur;
}

namespace {

// Copies the crossings marked keep, renumbering in order, and closes the two
// dangling cut ends onto each other.
Diagram extract_side(const Diagram& d, const std::vector<char>& keep, int join_a, int join_b) {
    std::vector<int> newid(d.n, -1);
    int k = 0;
    for (int c = 0; c < d.n; ++c)
        if (keep[c]) newid[c] = k++;
    Diagram out;
    out.n = k;
    out.sigma.resize(4 * k);
    out.alpha.resize(4 * k);
    out.over.resize(4 * k);
    auto mapd = [&](int t) { return 4 * newid[model::crossing_of(t)] + (t & 3); };
    for (int t = 0; t < d.darts(); ++t) {
        if (!keep[model::crossing_of(t)]) continue;
        int nt = mapd(t);
        out.sigma[nt] = mapd(d.sigma[t]);
        out.over[nt] = d.over[t];
        if (t == join_a)
            out.alpha[nt] = mapd(join_b);
        else if (t == join_b)
            out.alpha[nt] = mapd(join_a);
        else
            out.alpha[nt] = mapd(d.alpha[t]);
    }
    return out;
}

void factorize(const Diagram& d, std::vector<Diagram>& factors) {
    model::MapInfo info = model::build_map_info(d);
    auto faces_of = [&](int eid) {
        int a = info.edges[eid][0];
        return std::array<int, 2>{info.face_of[a], info.face_of[d.alpha[a]]};
    };
    int edges = (int)info.edges.size();
    for (int e1 = 0; e1 < edges; ++e1) {
        auto p1 = faces_of(e1);
        for (int e2 = e1 + 1; e2 < edges; ++e2) {
            auto p2 = faces_of(e2);
            if (!((p1[0] == p2[0] && p1[1] == p2[1]) || (p1[0] == p2[1] && p1[1] == p2[0])))
                continue;
            // Flood from one endpoint of e1 without stepping across either
            // cut edge; a genuine cut strands crossings on both shores.
            std::vector<char> vis(d.darts(), 0);
            std::vector<int> stack{info.edges[e1][0]};
            vis[info.edges[e1][0]] = 1;
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                int u = d.sigma[t];
                if (!vis[u]) {
                    vis[u] = 1;
                    stack.push_back(u);
                }
                if (info.edge_of[t] != e1 && info.edge_of[t] != e2) {
                    int v = d.alpha[t];
                    if (!vis[v]) {
                        vis[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
            std::vector<char> in_a(d.n, 0);
            int reach = 0;
            for (int t = 0; t < d.darts(); ++t)
                if (vis[t] && !in_a[model::crossing_of(t)]) {
                    in_a[model::crossing_of(t)] = 1;
                    ++reach;
                }
            if (reach == 0 || reach == d.n) continue;

            int a1 = info.edges[e1][0];
            if (!in_a[model::crossing_of(a1)]) a1 = d.alpha[a1];
            int a2 = d.alpha[a1];
            int b1 = info.edges[e2][0];
            if (!in_a[model::crossing_of(b1)]) b1 = d.alpha[b1];
            int b2 = d.alpha[b1];
            std::vector<char> in_b(d.n, 0);
            for (int c = 0; c < d.n; ++c) in_b[c] = !in_a[c];
            factorize(extract_side(d, in_a, a1, b1), factors);
            factorize(extract_side(d, in_b, a2, b2), factors);
            return;
        }
    }
    factors.push_back(d);
}

}  // namespace

Decomposition decompose(const Diagram& d) {
    Decomposition out;
    out.unknot_components = d.unknot_components;
    if (d.n == 0) return out;
    // Connected components of the map, each extracted in crossing order.
    std::vector<int> comp(d.n, -1);
    int ncomp = 0;
    for (int c0 = 0; c0 < d.n; ++c0) {
        if (comp[c0] >= 0) continue;
        std::vector<int> stack{c0};
        comp[c0] = ncomp;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int k = 0; k < 4; ++k) {
                int nb = model::crossing_of(d.alpha[4 * c + k]);
                if (comp[nb] < 0) {
                    comp[nb] = ncomp;
                    stack.push_back(nb);
                }
            }
        }
        ++ncomp;
    }
    for (int ci = 0; ci < ncomp; ++ci) {
        std::vector<char> keep(d.n, 0);
        for (int c = 0; c < d.n; ++c) keep[c] = comp[c] == ci;
        Diagram piece = extract_side(d, keep, -1, -1);
        Piece p;
        model::component_labels(piece, &p.link_components);
        factorize(piece, p.factors);
        out.pieces.push_back(std::move(p));
    }
    return out;
}

}  // namespace altlink::normalize
