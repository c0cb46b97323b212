#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altlink/codec.hpp"
#include "altlink/engine.hpp"
#include "altlink/generate.hpp"
#include "altlink/model.hpp"
#include "altlink/normalize.hpp"
#include "altlink/oracle.hpp"
#include "altlink/squares.hpp"

namespace {

using altlink::model::Diagram;
using altlink::model::Error;
using altlink::model::ErrorCode;
using json = nlohmann::ordered_json;

// Exit codes shared by every subcommand.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalidInput = 2;
constexpr int kPrecondition = 3;
constexpr int kYesQualified = 4;
constexpr int kCapRefusal = 5;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Precondition:
        case ErrorCode::MoveInapplicable:
            return kPrecondition;
        case ErrorCode::CapExceeded:
            return kCapRefusal;
        default:
            return kInvalidInput;
    }
}

// Exhaustive cross-checks refuse above 8 crossings; witness extraction is
// allowed up to 10. The environment variable overrides both.
int oracle_cap(int fallback) {
    if (const char* s = std::getenv("ALTLINK_ORACLE_CAP")) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Precondition,
                        std::string("ALTLINK_ORACLE_CAP is not an integer: ") + s);
        }
    }
    return fallback;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::EmptyDiagram, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Diagram load(const std::string& path, bool clockwise) {
    altlink::codec::ParseOptions opts;
    opts.clockwise = clockwise;
    return altlink::codec::parse(read_file(path), opts);
}

json crossings_json(const altlink::CrossSet& s) {
    json a = json::array();
    for (int c : s.elements()) a.push_back(c);
    return a;
}

// Witness entries are emitted by the oracle as one-line JSON objects; embed
// them as objects rather than strings.
json moves_json(const std::vector<std::string>& moves) {
    json a = json::array();
    for (const auto& m : moves) a.push_back(json::parse(m));
    return a;
}

int cmd_validate(const std::string& file, bool cw) {
    Diagram d = load(file, cw);
    auto r = altlink::model::validate(d);
    json j;
    j["n"] = r.n;
    j["connected"] = r.connected;
    j["alternating"] = r.alternating;
    j["reduced"] = r.reduced;
    j["prime"] = r.prime;
    j["faces"] = r.faces;
    j["link_components"] = r.link_components;
    j["unknot_components"] = d.unknot_components;
    std::cout << j.dump() << "\n";
    std::cerr << file << ": n=" << r.n << (r.connected ? " connected" : " disconnected")
              << (r.alternating ? " alternating" : " non-alternating")
              << (r.reduced ? " reduced" : " non-reduced") << (r.prime ? " prime" : " composite")
              << "\n";
    return kYes;
}

int cmd_normalize(const std::string& file, const std::string& out, bool cw) {
    Diagram d = load(file, cw);
    Diagram r = altlink::normalize::remove_nugatory(d);
    std::string text = altlink::codec::serialize(r, altlink::codec::Format::Native);
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) throw Error(ErrorCode::EmptyDiagram, "cannot write file: " + out);
        os << text << "\n";
    }
    std::cerr << file << ": " << d.n << " -> " << r.n << " crossings";
    if (r.unknot_components > d.unknot_components)
        std::cerr << ", +" << (r.unknot_components - d.unknot_components) << " unknot marks";
    std::cerr << "\n";
    return kYes;
}

int cmd_squares(const std::string& file, bool cw, int jobs) {
    Diagram d = load(file, cw);
    auto rep = altlink::model::validate(d);
    if (!(rep.connected && rep.alternating && rep.reduced && rep.prime))
        throw Error(ErrorCode::Precondition,
                    "squares needs a connected reduced prime alternating diagram");
    auto info = altlink::model::build_map_info(d);
    auto coll = altlink::squares::characteristic_collection(d, info, jobs);
    json j;
    j["n"] = d.n;
    j["count"] = coll.squares.size();
    j["max_level"] = coll.max_level;
    json arr = json::array();
    for (size_t i = 0; i < coll.squares.size(); ++i) {
        const auto& sq = coll.squares[i];
        json e;
        e["edges"] = sq.edges;
        e["faces"] = sq.faces;
        e["sides"] = json::array({crossings_json(sq.side(0)), crossings_json(sq.side(1))});
        e["levels"] = coll.level[i];
        json par = json::array();
        for (int s = 0; s < 2; ++s) {
            const auto& p = coll.parent[i][s];
            par.push_back(p[0] < 0 ? json(nullptr) : json(p));
        }
        e["enclosing"] = par;
        arr.push_back(std::move(e));
    }
    j["squares"] = std::move(arr);
    std::cout << j.dump() << "\n";
    std::cerr << file << ": " << coll.squares.size() << " characteristic squares, deepest level "
              << coll.max_level << "\n";
    return kYes;
}

int cmd_compare(const std::string& f1, const std::string& f2, bool witness, bool use_oracle,
                bool full_check, bool cw, int jobs) {
    Diagram d1 = load(f1, cw);
    Diagram d2 = load(f2, cw);
    altlink::engine::Options opts;
    opts.witness = witness;
    opts.full_crossing_check = full_check;
    opts.jobs = jobs;
    auto v = altlink::engine::equivalent(d1, d2, opts);

    json j;
    switch (v.answer) {
        case altlink::engine::Answer::Yes: j["answer"] = "YES"; break;
        case altlink::engine::Answer::No: j["answer"] = "NO"; break;
        case altlink::engine::Answer::YesQualified: j["answer"] = "YES_QUALIFIED"; break;
    }
    j["reason"] = altlink::engine::reason_name(v.reason);
    if (v.reason == altlink::engine::Reason::ColorCensusMismatch)
        j["census_level"] = v.census_level;
    j["isotopy_steps"] = v.isotopy_steps;
    if (witness) j["witness"] = moves_json(v.witness);

    int rc = v.answer == altlink::engine::Answer::Yes        ? kYes
             : v.answer == altlink::engine::Answer::No       ? kNo
                                                             : kYesQualified;
    if (use_oracle) {
        auto p = altlink::oracle::oracle_equivalent(d1, d2, oracle_cap(witness ? 10 : 8));
        if (p.truncated) throw Error(ErrorCode::CapExceeded, "oracle orbit search truncated");
        json o;
        o["equivalent"] = p.equivalent;
        o["moves"] = moves_json(p.moves);
        j["oracle"] = std::move(o);
        j["agreement"] = p.equivalent == v.yes();
        if (p.equivalent != v.yes())
            std::cerr << "warning: oracle disagrees with the engine verdict\n";
    }
    std::cout << j.dump() << "\n";
    std::cerr << j["answer"].get<std::string>() << " (" << j["reason"].get<std::string>() << ")\n";
    return rc;
}

int cmd_orbit(const std::string& file, long max_states, bool cw) {
    Diagram d = load(file, cw);
    auto orb = altlink::oracle::orbit(d, max_states);
    json j;
    j["size"] = orb.codes.size();
    j["diameter"] = orb.diameter;
    j["truncated"] = orb.truncated;
    j["codes"] = orb.codes;
    std::cout << j.dump() << "\n";
    std::cerr << file << ": " << orb.codes.size() << " diagrams, diameter " << orb.diameter
              << (orb.truncated ? " (truncated)" : "") << "\n";
    return orb.truncated ? kCapRefusal : kYes;
}

int cmd_gen(const std::string& family, const std::string& params) {
    std::vector<int> p;
    std::stringstream ss(params);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            p.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedTuple, "bad parameter: " + tok);
        }
    }
    Diagram d;
    if (family == "pretzel") {
        d = altlink::oracle::generate_pretzel(p);
    } else if (family == "twist") {
        if (p.size() != 1)
            throw Error(ErrorCode::MalformedTuple, "twist takes one crossing count");
        d = altlink::oracle::twist_chain(p[0]);
    } else {
        throw Error(ErrorCode::MalformedTuple, "unknown family: " + family);
    }
    std::cout << altlink::codec::serialize(d, altlink::codec::Format::Native) << "\n";
    std::cerr << family << "(" << params << "): " << d.n << " crossings\n";
    return kYes;
}

// Quick invariant sweep over generated diagrams: map counts, codec round
// trips, canonical-form stability, flype closure, and engine/oracle
// cross-checks. Each suite throws on its first violation.
int cmd_selftest(int jobs) {
    using altlink::model::validate;
    using altlink::oracle::canonical_form;

    std::vector<std::pair<std::string, Diagram>> corpus;
    for (int m = 2; m <= 5; ++m)
        corpus.emplace_back("twist(" + std::to_string(m) + ")", altlink::oracle::twist_chain(m));
    corpus.emplace_back("pretzel(2,2)", altlink::oracle::generate_pretzel({2, 2}));
    corpus.emplace_back("pretzel(3,2,4)", altlink::oracle::generate_pretzel({3, 2, 4}));
    corpus.emplace_back("pretzel(3,3,3)", altlink::oracle::generate_pretzel({3, 3, 3}));
    corpus.emplace_back("pretzel(1,2,2,3)", altlink::oracle::generate_pretzel({1, 2, 2, 3}));

    auto fail = [](const std::string& suite, const std::string& what) {
        throw Error(ErrorCode::Precondition, suite + ": " + what);
    };
    int suites = 0;
    auto ok = [&suites](const std::string& name) {
        ++suites;
        std::cerr << "ok - " << name << "\n";
    };

    for (auto& [name, d] : corpus) {
        auto r = validate(d);
        auto info = altlink::model::build_map_info(d);
        if (!r.connected || !r.alternating) fail("map counts", name + " not usable");
        if ((int)info.edges.size() != 2 * d.n) fail("map counts", name + " edge count");
        if (r.faces != d.n + 2) fail("map counts", name + " face count");
        if (r.reduced && r.prime) {
            auto coll = altlink::squares::characteristic_collection(d, info, jobs);
            if ((int)coll.squares.size() > d.n) fail("map counts", name + " collection size");
        }
    }
    ok("map counts (E = 2n, F = n + 2, |C| <= n)");

    for (auto& [name, d] : corpus) {
        auto native = altlink::codec::serialize(d, altlink::codec::Format::Native);
        if (!(altlink::codec::parse(native) == d)) fail("codec", name + " native round trip");
        auto pd = altlink::codec::serialize(d, altlink::codec::Format::Pd);
        if (canonical_form(altlink::codec::parse(pd)) != canonical_form(d))
            fail("codec", name + " pd round trip");
    }
    ok("codec round trips");

    for (auto& [name, d] : corpus) {
        std::vector<int> perm(d.n), rot(d.n, 1);
        for (int i = 0; i < d.n; ++i) perm[i] = (i + 1) % d.n;
        if (canonical_form(altlink::model::relabel(d, perm, rot)) != canonical_form(d))
            fail("canonical", name + " relabel changed the code");
        if (canonical_form(altlink::model::reversed_flagswapped(d)) != canonical_form(d))
            fail("canonical", name + " sphere flip changed the code");
    }
    ok("canonical form invariance");

    for (auto& [name, d] : corpus) {
        auto rep = validate(d);
        if (!(rep.reduced && rep.prime)) continue;
        auto orb = altlink::oracle::orbit(d);
        auto moves = altlink::oracle::enumerate_moves(d);
        for (const auto& m : moves) {
            Diagram e = altlink::oracle::apply_flype(d, m);
            if (e.n != d.n) fail("flype", name + " changed the crossing count");
            auto r2 = validate(e);
            if (!(r2.connected && r2.alternating && r2.reduced && r2.prime))
                fail("flype", name + " broke a validation flag");
            auto code = canonical_form(e);
            if (std::find(orb.codes.begin(), orb.codes.end(), code) == orb.codes.end())
                fail("flype", name + " left its own orbit");
        }
    }
    ok("flype closure");

    Diagram tre = altlink::oracle::twist_chain(3);
    Diagram p324 = altlink::oracle::generate_pretzel({3, 2, 4});
    Diagram p243 = altlink::oracle::generate_pretzel({2, 4, 3});
    std::vector<std::pair<Diagram, Diagram>> pairs = {
        {tre, altlink::model::relabel(tre, {2, 0, 1}, {1, 3, 2})},
        {tre, altlink::model::mirrored(tre)},
        {p324, p243},
        {p324, altlink::model::mirrored(p324)},
    };
    altlink::engine::Options eopts;
    eopts.jobs = jobs;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto v = altlink::engine::equivalent(pairs[i].first, pairs[i].second, eopts);
        auto p = altlink::oracle::oracle_equivalent(pairs[i].first, pairs[i].second, 10);
        if (v.yes() != p.equivalent)
            fail("referee", "engine and oracle disagree on pair " + std::to_string(i));
    }
    ok("engine/oracle agreement");

    json j;
    j["suites"] = suites;
    j["passed"] = suites;
    std::cout << j.dump() << "\n";
    std::cerr << "selftest: " << suites << " suites passed\n";
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating link diagram toolkit: validation, normalization, characteristic "
                 "squares, equivalence decisions, and a flype-orbit referee"};
    app.require_subcommand(1);
    int jobs = 1;
    bool cw = false;
    app.add_option("--jobs", jobs, "worker threads for square enumeration")->capture_default_str();
    app.add_flag("--cw", cw, "read PD tuples clockwise instead of counterclockwise");

    std::string vfile;
    auto* sv = app.add_subcommand("validate", "report structural findings for one diagram");
    sv->add_option("file", vfile, "diagram file (PD, native JSON, or UNKNOT)")->required();

    std::string nfile, nout;
    auto* sn = app.add_subcommand("normalize", "untwist nugatory crossings");
    sn->add_option("file", nfile, "diagram file")->required();
    sn->add_option("-o,--out", nout, "write the reduced diagram here instead of stdout");

    std::string qfile;
    auto* sq = app.add_subcommand("squares", "print the characteristic square collection");
    sq->add_option("file", qfile, "diagram file")->required();

    std::string cf1, cf2;
    bool witness = false, use_oracle = false, full_check = false;
    auto* sc = app.add_subcommand("compare", "decide whether two diagrams give the same link");
    sc->add_option("file1", cf1, "first diagram")->required();
    sc->add_option("file2", cf2, "second diagram")->required();
    sc->add_flag("--witness", witness, "include a flype-sequence witness on YES");
    sc->add_flag("--oracle", use_oracle, "cross-check with the orbit-search referee");
    sc->add_flag("--full-crossing-check", full_check, "verify the final crossing bijection");

    std::string ofile;
    long omax = 1000000;
    auto* so = app.add_subcommand("orbit", "enumerate the flype closure of a diagram");
    so->add_option("file", ofile, "diagram file")->required();
    so->add_option("--max", omax, "state cap before the search gives up")->capture_default_str();

    std::string gfamily, gparams;
    auto* sg = app.add_subcommand("gen", "generate a standard diagram family");
    sg->add_option("family", gfamily, "pretzel or twist")->required();
    sg->add_option("params", gparams, "comma-separated crossing counts, e.g. 3,2,4")->required();

    auto* ss = app.add_subcommand("selftest", "run the built-in invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalidInput;
    }

    try {
        if (*sv) return cmd_validate(vfile, cw);
        if (*sn) return cmd_normalize(nfile, nout, cw);
        if (*sq) return cmd_squares(qfile, cw, jobs);
        if (*sc) return cmd_compare(cf1, cf2, witness, use_oracle, full_check, cw, jobs);
        if (*so) return cmd_orbit(ofile, omax, cw);
        if (*sg) return cmd_gen(gfamily, gparams);
        if (*ss) return cmd_selftest(jobs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
