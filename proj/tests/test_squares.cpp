#include "doctest.h"

#include <set>
#include <vector>

#include "altlink/squares.hpp"
#include "helpers.hpp"

using namespace altlink;

namespace {

using Partition = std::pair<std::vector<int>, std::vector<int>>;

Partition normalize_partition(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a < b ? Partition{a, b} : Partition{b, a};
}

// Brute-force reference: iterate 4-edge subsets, all cyclic edge orders and
// entry-dart assignments, keep face-connected simple separating curves with
// at least 2 crossings per side. Returns the set of induced partitions.
std::set<Partition> quartet_oracle(const model::Diagram& d) {
    model::MapInfo info = model::build_map_info(d);
    int ecount = (int)info.edges.size();
    std::set<Partition> found;

    auto chords_cross = [](int a, int b, int c, int e) {
        int lo = std::min(a, b), hi = std::max(a, b);
        bool c_in = c > lo && c < hi;
        bool e_in = e > lo && e < hi;
        return c_in != e_in;
    };

    auto try_cycle = [&](const std::array<int, 4>& order) {
        // entry dart choice per edge: index 0/1 into info.edges[e]
        for (int mask = 0; mask < 16; ++mask) {
            std::array<int, 4> din{};
            for (int i = 0; i < 4; ++i)
                din[i] = info.edges[order[i]][(mask >> i) & 1];
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                int after = info.face_of[d.alpha[din[i]]];
                int before_next = info.face_of[din[(i + 1) % 4]];
                if (after != before_next) ok = false;
            }
            if (!ok) continue;
            // simplicity via per-face chord lists
            std::vector<std::array<int, 3>> chords;
            for (int i = 0; i < 4; ++i) {
                int f = info.face_of[d.alpha[din[i]]];
                chords.push_back({f, info.pos_in_face[d.alpha[din[i]]],
                                  info.pos_in_face[din[(i + 1) % 4]]});
            }
            bool simple = true;
            for (int i = 0; i < 4 && simple; ++i)
                for (int j = i + 1; j < 4 && simple; ++j)
                    if (chords[i][0] == chords[j][0] &&
                        chords_cross(chords[i][1], chords[i][2], chords[j][1], chords[j][2]))
                        simple = false;
            if (!simple) continue;
            // 2-color crossings by BFS avoiding the four cut edges
            std::vector<int> color(d.n, -1);
            std::vector<int> queue;
            bool consistent = true;
            auto assign = [&](int v, int c) {
                if (color[v] == -1) {
                    color[v] = c;
                    queue.push_back(v);
                } else if (color[v] != c)
                    consistent = false;
            };
            for (int i = 0; i < 4; ++i) {
                assign(model::crossing_of(din[i]), 0);
                assign(model::crossing_of(d.alpha[din[i]]), 1);
            }
            while (consistent && !queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int k = 0; k < 4; ++k) {
                    int x = 4 * v + k;
                    int e = info.edge_of[x];
                    if (e == order[0] || e == order[1] || e == order[2] || e == order[3])
                        continue;
                    assign(model::crossing_of(d.alpha[x]), color[v]);
                }
            }
            if (!consistent) continue;
            std::vector<int> sa, sb;
            for (int v = 0; v < d.n; ++v) (color[v] == 0 ? sa : sb).push_back(v);
            if ((int)sa.size() < 2 || (int)sb.size() < 2) continue;
            found.insert(normalize_partition(sa, sb));
        }
    };

    for (int a = 0; a < ecount; ++a)
        for (int b = a + 1; b < ecount; ++b)
            for (int c = b + 1; c < ecount; ++c)
                for (int e = c + 1; e < ecount; ++e) {
                    try_cycle({a, b, c, e});
                    try_cycle({a, b, e, c});
                    try_cycle({a, c, b, e});
                }
    return found;
}

std::set<Partition> library_partitions(const model::Diagram& d) {
    model::MapInfo info = model::build_map_info(d);
    std::set<Partition> out;
    for (auto& s : squares::enumerate_essential_squares(d, info))
        out.insert(normalize_partition(s.side_left.elements(), s.side_right.elements()));
    return out;
}

const squares::SquareClass* find_by_side(const std::vector<squares::SquareClass>& v,
                                         const std::vector<int>& side) {
    for (auto& s : v)
        if (s.side_left.elements() == side || s.side_right.elements() == side) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("trefoil has no essential square") {
    model::Diagram d = testutil::trefoil();
    model::MapInfo info = model::build_map_info(d);
    CHECK(squares::enumerate_essential_squares(d, info).empty());
    CHECK(quartet_oracle(d).empty());
}

TEST_CASE("figure-eight squares all split 2|2") {
    model::Diagram d = testutil::figure8();
    model::MapInfo info = model::build_map_info(d);
    auto all = squares::enumerate_essential_squares(d, info);
    REQUIRE(!all.empty());
    for (auto& s : all) {
        CHECK(s.side_left.count() == 2);
        CHECK(s.side_right.count() == 2);
    }
    CHECK(library_partitions(d) == quartet_oracle(d));
    auto col = squares::characteristic_collection(d, info);
    CHECK(col.squares.size() == 1);
    CHECK(col.level[0][0] == 1);
    CHECK(col.level[0][1] == 1);
}

TEST_CASE("quartet oracle agrees with walk enumeration") {
    std::vector<model::Diagram> corpus = {
        testutil::trefoil(),          testutil::figure8(),
        oracle::generate_pretzel({3, 3, 3}), oracle::generate_pretzel({3, 2, 4}),
        oracle::generate_pretzel({2, 2, 2, 2}), oracle::generate_pretzel({1, 2, 3}),
        oracle::twist_chain(4),       oracle::twist_chain(5),
        oracle::twist_chain(6),       oracle::twist_chain(7),
    };
    for (auto& d : corpus) CHECK(library_partitions(d) == quartet_oracle(d));
}

TEST_CASE("pretzel(3,3,3) bands give exactly the collection") {
    model::Diagram d = oracle::generate_pretzel({3, 3, 3});
    model::MapInfo info = model::build_map_info(d);
    auto all = squares::enumerate_essential_squares(d, info);
    for (std::vector<int> band : {std::vector<int>{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})
        CHECK(find_by_side(all, band) != nullptr);
    auto col = squares::characteristic_collection(d, info);
    REQUIRE(col.squares.size() == 3);
    for (int i = 0; i < 3; ++i) {
        // each member isolates one band; the band side carries depth 1, the
        // outward side depth 2
        int band_side = col.squares[i].side(0).count() == 3 ? 0 : 1;
        CHECK(col.squares[i].side(band_side).count() == 3);
        CHECK(col.squares[i].side(1 - band_side).count() == 6);
        CHECK(col.level[i][band_side] == 1);
        CHECK(col.level[i][1 - band_side] == 2);
    }
    CHECK(col.max_level == 2);
}

TEST_CASE("interleave basics") {
    model::Diagram d = oracle::generate_pretzel({3, 3, 3});
    model::MapInfo info = model::build_map_info(d);
    auto all = squares::enumerate_essential_squares(d, info);
    auto* band1 = find_by_side(all, {0, 1, 2});
    auto* band2 = find_by_side(all, {3, 4, 5});
    REQUIRE(band1);
    REQUIRE(band2);
    CHECK_FALSE(squares::interleave(*band1, *band1));
    CHECK_FALSE(squares::interleave(*band1, *band2));
}

TEST_CASE("overlapping runs in a long twist interleave") {
    model::Diagram d = oracle::twist_chain(8);
    model::MapInfo info = model::build_map_info(d);
    auto all = squares::enumerate_essential_squares(d, info);
    auto* s1 = find_by_side(all, {0, 1, 2, 3});
    auto* s2 = find_by_side(all, {2, 3, 4, 5});
    REQUIRE(s1);
    REQUIRE(s2);
    CHECK(squares::interleave(*s1, *s2));
    CHECK(squares::interleave(*s2, *s1));
}

TEST_CASE("twist chains have empty collections") {
    for (int m = 4; m <= 8; ++m) {
        model::Diagram d = oracle::twist_chain(m);
        model::MapInfo info = model::build_map_info(d);
        auto col = squares::characteristic_collection(d, info);
        CHECK(col.squares.empty());
    }
}

TEST_CASE("hopf link yields nothing") {
    model::Diagram d = oracle::generate_pretzel({1, 1});
    model::MapInfo info = model::build_map_info(d);
    CHECK(squares::enumerate_essential_squares(d, info).empty());
    CHECK(squares::characteristic_collection(d, info).squares.empty());
}

TEST_CASE("collection size stays within the crossing count") {
    for (auto d : {oracle::generate_pretzel({3, 3, 3}), oracle::generate_pretzel({3, 2, 4}),
                   oracle::generate_pretzel({2, 2, 2, 2}), oracle::generate_pretzel({2, 3, 4, 5}),
                   testutil::figure8()}) {
        model::MapInfo info = model::build_map_info(d);
        auto col = squares::characteristic_collection(d, info);
        CHECK((int)col.squares.size() <= d.n);
    }
}

TEST_CASE("four-band pretzel keeps only band squares") {
    model::Diagram d = oracle::generate_pretzel({2, 2, 2, 2});
    model::MapInfo info = model::build_map_info(d);
    auto col = squares::characteristic_collection(d, info);
    REQUIRE(col.squares.size() == 4);
    for (int i = 0; i < 4; ++i) {
        int small = col.squares[i].side(0).count() == 2 ? 0 : 1;
        CHECK(col.squares[i].side(small).count() == 2);
        CHECK(col.level[i][small] == 1);
        CHECK(col.level[i][1 - small] == 2);
    }
}

TEST_CASE("enumeration is identical across thread counts") {
    model::Diagram d = oracle::generate_pretzel({3, 2, 4});
    model::MapInfo info = model::build_map_info(d);
    auto a = squares::enumerate_essential_squares(d, info, 1);
    auto b = squares::enumerate_essential_squares(d, info, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].key == b[i].key);
        CHECK(a[i].in_darts == b[i].in_darts);
        CHECK(a[i].out_darts == b[i].out_darts);
        CHECK(a[i].edges == b[i].edges);
        CHECK(a[i].faces == b[i].faces);
        CHECK(a[i].side_left == b[i].side_left);
    }
}

TEST_CASE("partition size multiset survives relabeling") {
    model::Diagram d = oracle::generate_pretzel({2, 3, 4});
    model::Diagram e = testutil::random_relabel(d, 7);
    auto sizes = [](const model::Diagram& dia) {
        model::MapInfo info = model::build_map_info(dia);
        std::multiset<std::pair<int, int>> out;
        for (auto& s : squares::characteristic_collection(dia, info).squares) {
            int a = s.side_left.count(), b = s.side_right.count();
            out.insert({std::min(a, b), std::max(a, b)});
        }
        return out;
    };
    CHECK(sizes(d) == sizes(e));
}

TEST_CASE("square traversal structure is self consistent") {
    model::Diagram d = testutil::figure8();
    model::MapInfo info = model::build_map_info(d);
    for (auto& s : squares::enumerate_essential_squares(d, info)) {
        for (int i = 0; i < 4; ++i) {
            CHECK(info.edge_of[s.in_darts[i]] == s.edges[i]);
            CHECK(d.alpha[s.in_darts[i]] == s.out_darts[i]);
            // in dart's face is the face before the crossing event
            CHECK(info.face_of[s.in_darts[i]] == s.faces[(i + 3) % 4]);
            CHECK(info.face_of[s.out_darts[i]] == s.faces[i]);
            // left side holds the in-dart crossings
            CHECK(s.side_left.test(model::crossing_of(s.in_darts[i])));
            CHECK(s.side_right.test(model::crossing_of(s.out_darts[i])));
        }
    }
}
