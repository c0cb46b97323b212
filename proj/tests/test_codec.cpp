#include "doctest.h"

#include "altlink/codec.hpp"
#include "altlink/generate.hpp"
#include "helpers.hpp"

using namespace altlink;

namespace {

model::ErrorCode code_of(const std::string& text) {
    try {
        codec::parse(text);
    } catch (const model::Error& e) {
        return e.code();
    }
    FAIL("expected parse error for: ", text);
    return model::ErrorCode::Precondition;
}

}  // namespace

TEST_CASE("trefoil PD parses to a fully valid diagram") {
    model::Diagram d = codec::parse(testutil::trefoil_pd());
    CHECK(d.n == 3);
    model::MapInfo info = model::build_map_info(d);
    CHECK(info.edges.size() == 6);
    auto r = model::validate(d);
    CHECK(r.connected);
    CHECK(r.alternating);
    CHECK(r.reduced);
    CHECK(r.prime);
}

TEST_CASE("PD rejection taxonomy") {
    CHECK(code_of("PD[]") == model::ErrorCode::EmptyDiagram);
    CHECK(code_of("") == model::ErrorCode::EmptyDiagram);
    CHECK(code_of("PD[X[1,2,3]]") == model::ErrorCode::MalformedTuple);
    CHECK(code_of("PD[X[1,2,3,4,5]]") == model::ErrorCode::MalformedTuple);
    CHECK(code_of("PD[X[1,a,3,4]]") == model::ErrorCode::MalformedTuple);
    // label 4 appears three times
    CHECK(code_of("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,4]]") == model::ErrorCode::BadLabelCount);
    // label out of 1..2n
    CHECK(code_of("PD[X[1,4,2,9],X[3,6,4,1],X[5,2,6,3]]") == model::ErrorCode::LabelOutOfRange);
    CHECK(code_of("oops") == model::ErrorCode::MalformedTuple);
}

TEST_CASE("rejections name the offending label") {
    try {
        codec::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,4]]");
        FAIL("expected error");
    } catch (const model::Error& e) {
        // labels 3 (once) and 4 (three times) are both miscounted here
        std::string msg = e.what();
        CHECK((msg.find("3") != std::string::npos || msg.find("4") != std::string::npos));
    }
}

TEST_CASE("native JSON round-trip is byte exact") {
    for (auto d : {testutil::trefoil(), testutil::figure8(), oracle::generate_pretzel({3, 3, 3}),
                   oracle::generate_pretzel({2, 4, 3, 5})}) {
        std::string s1 = codec::serialize(d, codec::Format::Native);
        model::Diagram e = codec::parse(s1);
        CHECK(e == d);
        std::string s2 = codec::serialize(e, codec::Format::Native);
        CHECK(s1 == s2);
    }
}

TEST_CASE("pretzel(3,3,3) native arrays have length 36") {
    model::Diagram d = oracle::generate_pretzel({3, 3, 3});
    std::string s = codec::serialize(d, codec::Format::Native);
    model::Diagram e = codec::parse(s);
    CHECK(e.sigma.size() == 36);
    CHECK(e.alpha.size() == 36);
    CHECK(e.over.size() == 36);
    CHECK(e == d);
}

TEST_CASE("PD round-trip reproduces an isomorphic diagram") {
    for (auto d : {testutil::trefoil(), testutil::figure8(), oracle::generate_pretzel({3, 2, 4})}) {
        std::string pd = codec::serialize(d, codec::Format::Pd);
        model::Diagram e = codec::parse(pd);
        CHECK(e.n == d.n);
        auto r1 = model::validate(d);
        auto r2 = model::validate(e);
        CHECK(r1.alternating == r2.alternating);
        CHECK(r1.faces == r2.faces);
        CHECK(testutil::face_degree_multiset(d) == testutil::face_degree_multiset(e));
    }
}

TEST_CASE("trefoil PD text has 3 tuples") {
    std::string pd = codec::serialize(testutil::trefoil(), codec::Format::Pd);
    size_t count = 0;
    for (size_t pos = pd.find("X["); pos != std::string::npos; pos = pd.find("X[", pos + 1))
        ++count;
    CHECK(count == 3);
}

TEST_CASE("clockwise PD convention still yields a valid alternating map") {
    codec::ParseOptions opt;
    opt.clockwise = true;
    model::Diagram d = codec::parse(testutil::trefoil_pd(), opt);
    auto r = model::validate(d);
    CHECK(r.connected);
    CHECK(r.alternating);
    CHECK(r.faces == 5);
}

TEST_CASE("unknot marker serializes to UNKNOT") {
    model::Diagram u = model::Diagram::unknot();
    CHECK(codec::serialize(u, codec::Format::Pd) == "UNKNOT");
    CHECK(codec::serialize(u, codec::Format::Native) == "UNKNOT");
    model::Diagram back = codec::parse("UNKNOT");
    CHECK(back.is_unknot_marker());
    CHECK(back.unknot_components == 1);
}

TEST_CASE("unknot count survives the native object form") {
    model::Diagram u = model::Diagram::unknot(3);
    std::string s = codec::serialize(u, codec::Format::Native);
    model::Diagram back = codec::parse(s);
    CHECK(back.unknot_components == 3);
    CHECK(back.n == 0);
}

TEST_CASE("DOT export mentions every crossing and edge") {
    model::Diagram d = testutil::trefoil();
    std::string dot = codec::serialize(d, codec::Format::Dot);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("c0") != std::string::npos);
    CHECK(dot.find("c2") != std::string::npos);
    CHECK(dot.find("e5") != std::string::npos);
}
