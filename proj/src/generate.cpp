#include "altlink/generate.hpp"

#include <cstdlib>
#include <numeric>

namespace altlink::oracle {

using model::Diagram;
using model::Error;
using model::ErrorCode;

namespace {

// Dart corners within a crossing block: 4i+0 NW, +1 SW, +2 SE, +3 NE.
// sigma runs counterclockwise NW -> SW -> SE -> NE.
enum Corner { NW = 0, SW = 1, SE = 2, NE = 3 };

Diagram blank(int n, bool positive) {
    Diagram d;
    d.n = n;
    d.sigma.resize(d.darts());
    d.alpha.assign(d.darts(), -1);
    d.over.assign(d.darts(), 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < 4; ++k) d.sigma[4 * i + k] = 4 * i + ((k + 1) % 4);
        // Positive bands put the NW->SE diagonal on top; negative the other.
        d.over[4 * i + (positive ? NW : SW)] = 1;
        d.over[4 * i + (positive ? SE : NE)] = 1;
    }
    return d;
}

void join(Diagram& d, int a, int b) {
    d.alpha[a] = b;
    d.alpha[b] = a;
}

}  // namespace

Diagram generate_pretzel(const std::vector<int>& p) {
    if (p.size() < 2)
        throw Error(ErrorCode::Precondition, "pretzel needs at least 2 bands");
    bool positive = p[0] > 0;
    int n = 0;
    for (int v : p) {
        if (v == 0 || (v > 0) != positive)
            throw Error(ErrorCode::Precondition,
                        "pretzel band counts must be nonzero with a uniform sign");
        n += std::abs(v);
    }
    int k = (int)p.size();
    Diagram d = blank(n, positive);
    // first[b] is the crossing id of band b's top crossing.
    std::vector<int> first(k), len(k);
    int acc = 0;
    for (int b = 0; b < k; ++b) {
        first[b] = acc;
        len[b] = std::abs(p[b]);
        acc += len[b];
    }
    auto dart = [&](int b, int j, Corner c) { return 4 * (first[b] + j) + c; };
    for (int b = 0; b < k; ++b) {
        for (int j = 0; j + 1 < len[b]; ++j) {
            join(d, dart(b, j, SW), dart(b, j + 1, NW));
            join(d, dart(b, j, SE), dart(b, j + 1, NE));
        }
        int bn = (b + 1) % k;
        join(d, dart(b, 0, NE), dart(bn, 0, NW));
        join(d, dart(b, len[b] - 1, SE), dart(bn, len[bn] - 1, SW));
    }
    model::check_structure(d);
    return d;
}

Diagram twist_chain(int m) {
    if (m < 1) throw Error(ErrorCode::Precondition, "twist chain needs at least 1 crossing");
    Diagram d = blank(m, true);
    for (int j = 0; j < m; ++j) {
        int jn = (j + 1) % m;
        join(d, 4 * j + SW, 4 * jn + NW);
        join(d, 4 * j + SE, 4 * jn + NE);
    }
    model::check_structure(d);
    return d;
}

}  // namespace altlink::oracle
