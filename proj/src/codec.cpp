#include "altlink/codec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace altlink::codec {

using model::Diagram;
using model::Error;
using model::ErrorCode;

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Diagram parse_pd(const std::string& text, bool clockwise) {
    std::string s = strip(text);
    if (s.size() < 4 || s.compare(0, 3, "PD[") != 0 || s.back() != ']')
        throw Error(ErrorCode::MalformedTuple, "PD text must look like PD[X[...],...]");
    std::string body = s.substr(3, s.size() - 4);
    std::vector<std::array<int, 4>> tuples;
    size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ',' || std::isspace((unsigned char)body[i]))) ++i;
        if (i >= body.size()) break;
        if (body[i] != 'X' && body[i] != 'x')
            throw Error(ErrorCode::MalformedTuple, "expected X[...] tuple near position " +
                                                        std::to_string(i));
        ++i;
        if (i >= body.size() || body[i] != '[')
            throw Error(ErrorCode::MalformedTuple, "X must be followed by '['");
        size_t close = body.find(']', i);
        if (close == std::string::npos)
            throw Error(ErrorCode::MalformedTuple, "unterminated tuple");
        std::string inner = body.substr(i + 1, close - i - 1);
        i = close + 1;
        std::array<int, 4> t{};
        int k = 0;
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = strip(item);
            if (item.empty())
                throw Error(ErrorCode::MalformedTuple, "empty entry in tuple " +
                                                            std::to_string(tuples.size()));
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw Error(ErrorCode::MalformedTuple, "non-numeric label '" + item + "'");
            }
            if (pos != item.size())
                throw Error(ErrorCode::MalformedTuple, "non-numeric label '" + item + "'");
            if (k >= 4)
                throw Error(ErrorCode::MalformedTuple, "tuple " + std::to_string(tuples.size()) +
                                                            " has more than 4 labels");
            t[k++] = v;
        }
        if (k != 4)
            throw Error(ErrorCode::MalformedTuple, "tuple " + std::to_string(tuples.size()) +
                                                        " has " + std::to_string(k) +
                                                        " labels, expected 4");
        tuples.push_back(t);
    }
    int n = (int)tuples.size();
    if (n == 0) throw Error(ErrorCode::EmptyDiagram, "PD[] describes no crossings");

    // Dart 4i+k holds tuple position k. Rotation order of positions is the
    // tuple order (counterclockwise unless flipped); the incoming under-strand
    // is position 0, so the over strand occupies the odd positions.
    Diagram d;
    d.n = n;
    d.sigma.resize(d.darts());
    d.alpha.assign(d.darts(), -1);
    d.over.resize(d.darts());
    std::map<int, std::vector<int>> by_label;
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < 4; ++k) {
            int dart = 4 * c + k;
            d.sigma[dart] = 4 * c + ((k + (clockwise ? 3 : 1)) % 4);
            d.over[dart] = (k % 2) == 1;
            int label = tuples[c][k];
            if (label < 1 || label > 2 * n)
                throw Error(ErrorCode::LabelOutOfRange,
                            "label " + std::to_string(label) + " outside 1.." +
                                std::to_string(2 * n));
            by_label[label].push_back(dart);
        }
    }
    for (auto& [label, darts] : by_label) {
        if (darts.size() != 2)
            throw Error(ErrorCode::BadLabelCount, "label " + std::to_string(label) +
                                                      " appears " + std::to_string(darts.size()) +
                                                      " times, expected 2");
        d.alpha[darts[0]] = darts[1];
        d.alpha[darts[1]] = darts[0];
    }
    for (int x = 0; x < d.darts(); ++x)
        if (d.alpha[x] < 0)
            throw Error(ErrorCode::BadLabelCount, "missing labels: only " +
                                                       std::to_string(by_label.size()) +
                                                       " distinct, expected " +
                                                       std::to_string(2 * n));
    model::check_structure(d);
    return d;
}

Diagram parse_native(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::MalformedTuple, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n"))
        throw Error(ErrorCode::MalformedTuple, "native map object needs field n");
    Diagram d;
    d.n = j.at("n").get<int>();
    d.sigma = j.value("sigma", std::vector<int>{});
    d.alpha = j.value("alpha", std::vector<int>{});
    std::vector<bool> over = j.value("over", std::vector<bool>{});
    d.over.assign(over.begin(), over.end());
    d.unknot_components = j.value("unknots", 0);
    model::check_structure(d);
    return d;
}

std::string serialize_native(const Diagram& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    j["sigma"] = d.sigma;
    j["alpha"] = d.alpha;
    std::vector<bool> over(d.over.begin(), d.over.end());
    j["over"] = over;
    if (d.unknot_components > 0) j["unknots"] = d.unknot_components;
    return j.dump();
}

std::string serialize_pd(const Diagram& d) {
    if (d.is_unknot_marker() && d.unknot_components == 1) return "UNKNOT";
    if (d.unknot_components > 0)
        throw Error(ErrorCode::Precondition,
                    "PD cannot carry zero-crossing components; use the native format");
    model::MapInfo info = model::build_map_info(d);
    std::string out = "PD[";
    for (int c = 0; c < d.n; ++c) {
        // Start each tuple at the smaller under dart; over flags alternate
        // around sigma, so positions 1 and 3 come out over as PD requires.
        int start = -1;
        for (int k = 0; k < 4; ++k) {
            int x = 4 * c + k;
            if (!d.over[x] && (start < 0 || x < start)) start = x;
        }
        out += (c ? ",X[" : "X[");
        int x = start;
        for (int k = 0; k < 4; ++k) {
            out += std::to_string(info.edge_of[x] + 1);
            if (k < 3) out += ",";
            x = d.sigma[x];
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string serialize_dot(const Diagram& d) {
    std::string out = "graph altlink {\n";
    if (d.unknot_components > 0)
        out += "  // plus " + std::to_string(d.unknot_components) + " zero-crossing unknots\n";
    model::MapInfo info = model::build_map_info(d);
    for (int c = 0; c < d.n; ++c) out += "  c" + std::to_string(c) + ";\n";
    for (size_t e = 0; e < info.edges.size(); ++e) {
        int a = info.edges[e][0], b = info.edges[e][1];
        out += "  c" + std::to_string(model::crossing_of(a)) + " -- c" +
               std::to_string(model::crossing_of(b)) + " [label=\"e" + std::to_string(e) +
               " " + (d.over[a] ? "O" : "U") + (d.over[b] ? "O" : "U") + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

Diagram parse(const std::string& text, const ParseOptions& opts) {
    std::string s = strip(text);
    if (s.empty()) throw Error(ErrorCode::EmptyDiagram, "empty input");
    Format f = opts.hint;
    if (f == Format::Auto) {
        if (s == "UNKNOT") return Diagram::unknot();
        if (s.compare(0, 3, "PD[") == 0)
            f = Format::Pd;
        else if (s.front() == '{')
            f = Format::Native;
        else
            throw Error(ErrorCode::MalformedTuple, "unrecognized diagram text");
    }
    if (f == Format::Pd) return parse_pd(s, opts.clockwise);
    if (f == Format::Native) {
        if (s == "UNKNOT") return Diagram::unknot();
        return parse_native(s);
    }
    throw Error(ErrorCode::Precondition, "cannot parse this format");
}

std::string serialize(const Diagram& d, Format format) {
    model::check_structure(d);
    if (d.is_unknot_marker() && d.unknot_components == 1 && format != Format::Dot) return "UNKNOT";
    switch (format) {
        case Format::Native: return serialize_native(d);
        case Format::Pd: return serialize_pd(d);
        case Format::Dot: return serialize_dot(d);
        default: return serialize_native(d);
    }
}

}  // namespace altlink::codec
