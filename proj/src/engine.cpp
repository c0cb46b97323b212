#include "altlink/engine.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "altlink/chain.hpp"
#include "altlink/isotopy.hpp"
#include "altlink/normalize.hpp"
#include "altlink/oracle.hpp"
#include "altlink/squares.hpp"
#include "altlink/structure.hpp"

namespace altlink::engine {

using model::Diagram;
using model::Error;
using model::ErrorCode;

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::Success: return "success";
        case Reason::CrossingCountMismatch: return "crossing-count-mismatch";
        case Reason::ColorCensusMismatch: return "color-census-mismatch";
        case Reason::ProductRegionMismatch: return "product-region-mismatch";
        case Reason::TopLevelIsotopyFailure: return "top-level-isotopy-failure";
        case Reason::FactorMismatch: return "factor-mismatch";
        case Reason::AttachmentMismatch: return "attachment-mismatch";
    }
    return "unknown";
}

namespace {

// Everything one diagram contributes to the pipeline: its collection, the
// complementary regions and the colors painted onto square sides so far.
struct Side {
    const Diagram* d = nullptr;
    model::MapInfo info;
    squares::Collection col;
    std::vector<structure::Region> regions;
    isotopy::SideColoring coloring;
};

Side make_side(const Diagram& d, int jobs) {
    Side s;
    s.d = &d;
    s.info = model::build_map_info(d);
    s.col = squares::characteristic_collection(d, s.info, jobs);
    s.regions = structure::complement_regions(s.col, d.n);
    s.coloring.init((int)s.col.squares.size());
    return s;
}

// Tangle inside the given side of a collection square, cut open at that
// square: its four traversal channels become the stubs.
isotopy::TangleGraph side_graph(const Side& s, int sq, int side) {
    structure::Region r = structure::region_of_side(s.col, sq, side, s.d->n);
    int anchor = -1;
    for (int b = 0; b < (int)r.boundary.size(); ++b)
        if (r.boundary[b][0] == sq && r.boundary[b][1] == 1 - side) anchor = b;
    return isotopy::build_tangle_graph(*s.d, s.info, s.col, r, anchor, s.coloring);
}

// One reference tangle per color class, kept with the level it appeared at
// and whether it survives a half turn of its boundary.
struct Rep {
    int level;
    isotopy::TangleGraph g;
    bool sym;
};

// Colors every square side of both diagrams, cheapest tangles first, and
// compares the per-level color census. Returns false with the verdict filled
// in when the censuses split.
bool run_levels(Side& s1, Side& s2, const Options& opts, Verdict& v) {
    std::vector<Rep> reps;
    int top = std::max(s1.col.max_level, s2.col.max_level);
    for (int lvl = 1; lvl <= top; ++lvl) {
        std::array<std::vector<int>, 2> census;
        Side* both[2] = {&s1, &s2};
        for (int which = 0; which < 2; ++which) {
            Side& s = *both[which];
            for (int sq = 0; sq < (int)s.col.squares.size(); ++sq)
                for (int side = 0; side < 2; ++side) {
                    if (s.col.level[sq][side] != lvl) continue;
                    isotopy::TangleGraph g = side_graph(s, sq, side);
                    int color = -1;
                    for (int ri = 0; ri < (int)reps.size() && color < 0; ++ri) {
                        if (reps[ri].level != lvl) continue;
                        isotopy::CompareResult cr =
                            isotopy::compare_tangles(reps[ri].g, g, opts.full_crossing_check);
                        v.isotopy_steps += cr.steps;
                        if (!cr.equivalent) continue;
                        color = ri;
                        s.coloring.color[sq][side] = ri;
                        for (int k = 0; k < 4; ++k)
                            s.coloring.labels[sq][side][k] = cr.anchor_map[k];
                        s.coloring.sym[sq][side] = reps[ri].sym ? 1 : 0;
                    }
                    if (color < 0) {
                        bool sym = isotopy::rotation_symmetric(g);
                        color = (int)reps.size();
                        s.coloring.color[sq][side] = color;
                        s.coloring.labels[sq][side] = {0, 1, 2, 3};
                        s.coloring.sym[sq][side] = sym ? 1 : 0;
                        reps.push_back({lvl, std::move(g), sym});
                    }
                    census[which].push_back(color);
                }
        }
        std::sort(census[0].begin(), census[0].end());
        std::sort(census[1].begin(), census[1].end());
        if (census[0] != census[1]) {
            v.answer = Answer::No;
            v.reason = Reason::ColorCensusMismatch;
            v.census_level = lvl;
            return false;
        }
    }
    return true;
}

// Full structural run on two diagrams of equal crossing number: color the
// square sides level by level, then look for one complementary region of d2
// matching a fixed region of d1.
Verdict run_pipeline(const Diagram& d1, const Diagram& d2, const Options& opts) {
    Verdict v;
    Side s1 = make_side(d1, opts.jobs);
    Side s2 = make_side(d2, opts.jobs);
    if (!run_levels(s1, s2, opts, v)) return v;

    isotopy::TangleGraph g1 =
        isotopy::build_tangle_graph(d1, s1.info, s1.col, s1.regions[0], -1, s1.coloring);
    for (const auto& r2 : s2.regions) {
        isotopy::TangleGraph g2 =
            isotopy::build_tangle_graph(d2, s2.info, s2.col, r2, -1, s2.coloring);
        isotopy::CompareResult cr = isotopy::compare_tangles(g1, g2, opts.full_crossing_check);
        v.isotopy_steps += cr.steps;
        if (cr.equivalent) {
            v.answer = Answer::Yes;
            return v;
        }
    }
    v.answer = Answer::No;
    v.reason = structure::parse_chain(g1).ok ? Reason::ProductRegionMismatch
                                             : Reason::TopLevelIsotopyFailure;
    return v;
}

void require_connected_prime(const model::ValidationReport& r, const char* which) {
    if (!(r.connected && r.alternating && r.reduced && r.prime))
        throw Error(ErrorCode::Precondition,
                    std::string(which) + " diagram is not connected reduced prime alternating");
}

}  // namespace

Verdict equivalent_connected_prime(const Diagram& d1, const Diagram& d2, const Options& opts) {
    model::ValidationReport r1 = model::validate(d1);
    model::ValidationReport r2 = model::validate(d2);
    require_connected_prime(r1, "first");
    require_connected_prime(r2, "second");

    Verdict v;
    if (d1.n != d2.n) {
        v.reason = Reason::CrossingCountMismatch;
        return v;
    }
    if (d1.n == 0) {
        v.answer = Answer::Yes;  // both single unknots
        return v;
    }
    v = run_pipeline(d1, d2, opts);
    if (!v.yes()) {
        // Same link seen from the other side of the projection sphere.
        Verdict flip = run_pipeline(d1, model::reversed_flagswapped(d2), opts);
        flip.isotopy_steps += v.isotopy_steps;
        if (flip.yes())
            v = flip;
        else
            v.isotopy_steps = flip.isotopy_steps;
    }
    if (v.yes() && opts.witness && d1.n <= opts.witness_cap) {
        oracle::PathResult path = oracle::oracle_equivalent(d1, d2, opts.witness_cap);
        if (path.equivalent) v.witness = std::move(path.moves);
    }
    return v;
}

Verdict equivalent(const Diagram& d1, const Diagram& d2, const Options& opts) {
    model::ValidationReport r1 = model::validate(d1);
    model::ValidationReport r2 = model::validate(d2);
    if (!r1.alternating || !r2.alternating)
        throw Error(ErrorCode::Precondition, "only alternating diagrams are supported");
    if (r1.connected && r1.reduced && r1.prime && r2.connected && r2.reduced && r2.prime)
        return equivalent_connected_prime(d1, d2, opts);

    normalize::Decomposition a = normalize::decompose(normalize::remove_nugatory(d1));
    normalize::Decomposition b = normalize::decompose(normalize::remove_nugatory(d2));

    Verdict v;
    Options sub = opts;
    sub.witness = false;
    auto factors_match = [&](const std::vector<Diagram>& f1, const std::vector<Diagram>& f2) {
        if (f1.size() != f2.size()) return false;
        std::vector<char> used(f2.size(), 0);
        for (const Diagram& x : f1) {
            bool hit = false;
            for (size_t j = 0; j < f2.size() && !hit; ++j) {
                if (used[j]) continue;
                Verdict w = equivalent_connected_prime(x, f2[j], sub);
                v.isotopy_steps += w.isotopy_steps;
                if (w.yes()) {
                    used[j] = 1;
                    hit = true;
                }
            }
            if (!hit) return false;
        }
        return true;
    };

    bool pieces_ok =
        a.unknot_components == b.unknot_components && a.pieces.size() == b.pieces.size();
    if (pieces_ok) {
        std::vector<char> used(b.pieces.size(), 0);
        for (const auto& p : a.pieces) {
            bool hit = false;
            for (size_t j = 0; j < b.pieces.size() && !hit; ++j) {
                if (used[j] || p.factors.size() != b.pieces[j].factors.size()) continue;
                if (factors_match(p.factors, b.pieces[j].factors)) {
                    used[j] = 1;
                    hit = true;
                }
            }
            if (!hit) {
                pieces_ok = false;
                break;
            }
        }
    }
    if (pieces_ok) {
        v.answer = Answer::Yes;
        // A sum inside a multi-component piece could have been taken along
        // either component; factor equality alone cannot tell those apart.
        for (const auto& p : a.pieces)
            if (p.joins() >= 1 && p.link_components > 1) v.answer = Answer::YesQualified;
        return v;
    }

    v.answer = Answer::No;
    std::vector<Diagram> flat_a, flat_b;
    for (const auto& p : a.pieces)
        for (const Diagram& f : p.factors) flat_a.push_back(f);
    for (const auto& p : b.pieces)
        for (const Diagram& f : p.factors) flat_b.push_back(f);
    bool same_parts =
        a.unknot_components == b.unknot_components && factors_match(flat_a, flat_b);
    v.reason = same_parts ? Reason::AttachmentMismatch : Reason::FactorMismatch;
    return v;
}

}  // namespace altlink::engine
