#include "altlink/squares.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

namespace altlink::squares {

using model::Diagram;
using model::Error;
using model::ErrorCode;
using model::MapInfo;

namespace {

// Chords (a1,b1) and (a2,b2) on a cyclic boundary of length len cross iff
// exactly one endpoint of the second lies strictly inside the arc a1->b1.
bool chords_cross(int a1, int b1, int a2, int b2, int len) {
    auto inside = [&](int x) {
        int rel = ((x - a1) % len + len) % len;
        int hi = ((b1 - a1) % len + len) % len;
        return rel > 0 && rel < hi;
    };
    return inside(a2) != inside(b2);
}

struct Walk {
    std::array<int, 4> in_darts;
};

// Rotates the traversal representation so that equal curve classes produce
// byte-identical SquareClass values no matter where the walk started: the
// stored traversal is the lex-least of the 4 rotations x 2 directions.
void canonicalize(SquareClass& sc) {
    auto seq_of = [](const SquareClass& s) {
        std::vector<int> seq(8);
        for (int i = 0; i < 4; ++i) {
            seq[2 * i] = s.edges[i];
            seq[2 * i + 1] = s.faces[i];
        }
        return seq;
    };
    auto rotate = [](const SquareClass& s, int r) {
        SquareClass t = s;
        for (int i = 0; i < 4; ++i) {
            t.edges[i] = s.edges[(r + i) % 4];
            t.faces[i] = s.faces[(r + i) % 4];
            t.in_darts[i] = s.in_darts[(r + i) % 4];
            t.out_darts[i] = s.out_darts[(r + i) % 4];
        }
        return t;
    };
    // Reversed travel crosses edges[0] back into the start face, then edges
    // 3, 2, 1; the in/out roles of the darts swap, as do the two sides.
    auto reverse_travel = [](const SquareClass& s) {
        SquareClass t = s;
        static constexpr int ord[4] = {0, 3, 2, 1};
        for (int i = 0; i < 4; ++i) {
            int j = ord[i];
            t.edges[i] = s.edges[j];
            t.faces[i] = s.faces[(j + 3) % 4];
            t.in_darts[i] = s.out_darts[j];
            t.out_darts[i] = s.in_darts[j];
        }
        t.side_left = s.side_right;
        t.side_right = s.side_left;
        return t;
    };
    SquareClass best = sc;
    std::vector<int> best_seq = seq_of(sc);
    SquareClass rev = reverse_travel(sc);
    for (int r = 0; r < 4; ++r) {
        for (const SquareClass* base : {&sc, &rev}) {
            SquareClass cand = rotate(*base, r);
            std::vector<int> seq = seq_of(cand);
            if (seq < best_seq) {
                best_seq = seq;
                best = cand;
            }
        }
    }
    best.key = best_seq;
    sc = std::move(best);
}

// Assemble a SquareClass from four in-darts; returns false when the curve is
// not simple or not essential.
bool build_class(const Diagram& d, const MapInfo& info, const Walk& w, SquareClass& out) {
    std::array<int, 4> e{}, f{};
    for (int i = 0; i < 4; ++i) {
        e[i] = info.edge_of[w.in_darts[i]];
        f[i] = info.face_of[d.alpha[w.in_darts[i]]];
    }
    // Simplicity: the 4 in-face chords must be pairwise non-crossing wherever
    // two of them share a face. Chord i lives in faces[i], from the entry
    // point on edges[i] to the exit point on edges[i+1].
    std::array<std::array<int, 3>, 4> chords{};  // face, entry pos, exit pos
    for (int i = 0; i < 4; ++i) {
        int entry = d.alpha[w.in_darts[i]];
        int exit = w.in_darts[(i + 1) % 4];
        chords[i] = {f[i], info.pos_in_face[entry], info.pos_in_face[exit]};
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (chords[i][0] != chords[j][0]) continue;
            int len = (int)info.faces[chords[i][0]].size();
            if (chords_cross(chords[i][1], chords[i][2], chords[j][1], chords[j][2], len))
                return false;
        }

    // Partition by flood fill over uncut edges from the in/out seed darts.
    std::vector<int> side(d.n, -1);
    std::vector<int> stack;
    auto paint = [&](int crossing, int s) {
        if (side[crossing] == -1) {
            side[crossing] = s;
            stack.push_back(crossing);
            return true;
        }
        return side[crossing] == s;
    };
    for (int i = 0; i < 4; ++i) {
        if (!paint(model::crossing_of(w.in_darts[i]), 0)) return false;
        if (!paint(model::crossing_of(d.alpha[w.in_darts[i]]), 1)) return false;
    }
    std::array<int, 4> cut = e;
    std::sort(cut.begin(), cut.end());
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            int x = 4 * c + k;
            if (std::binary_search(cut.begin(), cut.end(), info.edge_of[x])) continue;
            if (!paint(model::crossing_of(d.alpha[x]), side[c]))
                throw Error(ErrorCode::Precondition,
                            "simple curve failed to separate the crossings");
        }
    }
    CrossSet a(d.n), b(d.n);
    for (int c = 0; c < d.n; ++c) {
        if (side[c] == -1)
            throw Error(ErrorCode::Precondition, "curve left a crossing unreached");
        (side[c] == 0 ? a : b).set(c);
    }
    if (a.count() < 2 || b.count() < 2) return false;

    out.edges = e;
    out.faces = f;
    out.in_darts = w.in_darts;
    for (int i = 0; i < 4; ++i) out.out_darts[i] = d.alpha[w.in_darts[i]];
    out.side_left = a;
    out.side_right = b;
    canonicalize(out);
    return true;
}

void walk_from(const Diagram& d, const MapInfo& info, int d1,
               std::map<std::vector<int>, SquareClass>& found) {
    int f0 = info.face_of[d1];
    int e1 = info.edge_of[d1];
    Walk w;
    w.in_darts[0] = d1;
    int f1 = info.face_of[d.alpha[d1]];
    for (int d2 : info.faces[f1]) {
        int e2 = info.edge_of[d2];
        if (e2 == e1) continue;
        w.in_darts[1] = d2;
        int f2 = info.face_of[d.alpha[d2]];
        for (int d3 : info.faces[f2]) {
            int e3 = info.edge_of[d3];
            if (e3 == e1 || e3 == e2) continue;
            w.in_darts[2] = d3;
            int f3 = info.face_of[d.alpha[d3]];
            for (int d4 : info.faces[f3]) {
                int e4 = info.edge_of[d4];
                if (e4 == e1 || e4 == e2 || e4 == e3) continue;
                if (info.face_of[d.alpha[d4]] != f0) continue;
                w.in_darts[3] = d4;
                SquareClass sc;
                if (build_class(d, info, w, sc)) found.emplace(sc.key, std::move(sc));
            }
        }
    }
}

}  // namespace

std::vector<SquareClass> enumerate_essential_squares(const Diagram& d, const MapInfo& info,
                                                     int jobs) {
    if (d.n < 2) throw Error(ErrorCode::Precondition, "square search needs n >= 2");
    if (info.components != 1)
        throw Error(ErrorCode::Precondition, "square search needs a connected diagram");
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, std::max(1, d.darts()));
    std::vector<std::map<std::vector<int>, SquareClass>> parts(jobs);
    if (jobs == 1) {
        for (int d1 = 0; d1 < d.darts(); ++d1) walk_from(d, info, d1, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&, t] {
                for (int d1 = t; d1 < d.darts(); d1 += jobs) walk_from(d, info, d1, parts[t]);
            });
        for (auto& th : threads) th.join();
    }
    std::map<std::vector<int>, SquareClass> merged;
    for (auto& p : parts)
        for (auto& [k, v] : p) merged.emplace(k, std::move(v));
    std::vector<SquareClass> out;
    out.reserve(merged.size());
    for (auto& [k, v] : merged) out.push_back(std::move(v));
    return out;
}

bool interleave(const SquareClass& s1, const SquareClass& s2) {
    const CrossSet& a = s1.side_left;
    const CrossSet& ac = s1.side_right;
    const CrossSet& b = s2.side_left;
    const CrossSet& bc = s2.side_right;
    return !(a.subset_of(b) || a.subset_of(bc) || ac.subset_of(b) || ac.subset_of(bc));
}

Collection characteristic_collection(const Diagram& d, const MapInfo& info, int jobs) {
    std::vector<SquareClass> all = enumerate_essential_squares(d, info, jobs);
    Collection col;
    for (size_t i = 0; i < all.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < all.size() && ok; ++j)
            if (j != i && interleave(all[i], all[j])) ok = false;
        if (!ok) continue;
        // one representative per partition; earlier key order wins
        bool dup = false;
        for (auto& kept : col.squares)
            if (kept.partition() == all[i].partition()) {
                dup = true;
                break;
            }
        if (!dup) col.squares.push_back(all[i]);
    }
    std::sort(col.squares.begin(), col.squares.end(),
              [](const SquareClass& x, const SquareClass& y) { return x.partition() < y.partition(); });

    int m = (int)col.squares.size();
    col.level.assign(m, {0, 0});
    col.parent.assign(m, {std::array<int, 2>{-1, -1}, std::array<int, 2>{-1, -1}});

    // Depth labels: a side with no collection side strictly inside it sits at
    // level 1; otherwise one more than the deepest side inside it.
    std::function<int(int, int)> level_of = [&](int i, int s) -> int {
        int& memo = col.level[i][s];
        if (memo) return memo;
        memo = 1;  // cycle guard; containment is a strict order so none occur
        int best = 0;
        const CrossSet& x = col.squares[i].side(s);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            for (int t = 0; t < 2; ++t) {
                const CrossSet& y = col.squares[j].side(t);
                if (y.subset_of(x) && y != x) best = std::max(best, level_of(j, t));
            }
        }
        memo = best + 1;
        return memo;
    };
    for (int i = 0; i < m; ++i)
        for (int s = 0; s < 2; ++s) col.max_level = std::max(col.max_level, level_of(i, s));

    for (int i = 0; i < m; ++i)
        for (int s = 0; s < 2; ++s) {
            const CrossSet& x = col.squares[i].side(s);
            int bi = -1, bs = -1, bcount = d.n + 1;
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                for (int t = 0; t < 2; ++t) {
                    const CrossSet& y = col.squares[j].side(t);
                    if (x.subset_of(y) && x != y && y.count() < bcount) {
                        bi = j;
                        bs = t;
                        bcount = y.count();
                    }
                }
            }
            col.parent[i][s] = {bi, bs};
        }
    return col;
}

std::vector<std::array<int, 2>> maximal_subsides(const Collection& c, const CrossSet& x,
                                                 int exclude) {
    std::vector<std::array<int, 2>> inside;
    for (int j = 0; j < (int)c.squares.size(); ++j) {
        if (j == exclude) continue;
        for (int t = 0; t < 2; ++t) {
            const CrossSet& y = c.squares[j].side(t);
            if (y.subset_of(x) && y != x) inside.push_back({j, t});
        }
    }
    std::vector<std::array<int, 2>> out;
    for (auto& a : inside) {
        const CrossSet& ya = c.squares[a[0]].side(a[1]);
        bool maximal = true;
        for (auto& b : inside) {
            if (a == b) continue;
            const CrossSet& yb = c.squares[b[0]].side(b[1]);
            if (ya.subset_of(yb) && ya != yb) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(a);
    }
    return out;
}

}  // namespace altlink::squares
