#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace altlink::model {

// Error taxonomy shared by model and codec. Every rejection carries one code
// and a message naming the offending label or dart.
enum class ErrorCode {
    BadLabelCount,      // PD edge label appearing != 2 times
    LabelOutOfRange,    // PD label outside 1..2n
    MalformedTuple,     // PD tuple arity != 4, or unparsable text
    EmptyDiagram,       // no crossings and no unknot marker
    NotSpherical,       // Euler characteristic wrong for a sphere map
    BadPermutation,     // sigma not a per-crossing 4-cycle / alpha not a free involution
    BadOverFlags,       // crossing without exactly two sigma^2-related over darts
    Precondition,       // operation called outside its stated domain
    MoveInapplicable,   // flype move names a square/direction with no free crossing
    CapExceeded,        // oracle refusal above the crossing cap
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Connected-or-not alternating link diagram as a combinatorial map.
// Crossing i owns darts 4i..4i+3; sigma is the counterclockwise rotation
// (one 4-cycle per crossing), alpha the fixed-point-free edge involution,
// over[d] true when dart d lies on the overpassing strand at its crossing.
// Zero-crossing unknot components carry no darts and are counted separately.
struct Diagram {
    int n = 0;
    std::vector<int> sigma;
    std::vector<int> alpha;
    std::vector<char> over;
    int unknot_components = 0;

    int darts() const { return 4 * n; }
    bool is_unknot_marker() const { return n == 0 && unknot_components > 0; }

    static Diagram unknot(int components = 1) {
        Diagram d;
        d.unknot_components = components;
        return d;
    }

    bool operator==(const Diagram& o) const {
        return n == o.n && sigma == o.sigma && alpha == o.alpha && over == o.over &&
               unknot_components == o.unknot_components;
    }
};

inline int crossing_of(int dart) { return dart >> 2; }

// Face permutation: phi(d) = sigma(alpha(d)). Orbits are the faces; with
// sigma counterclockwise each orbit keeps its face on the right of the
// traversal ray, which downstream side computations rely on.
struct MapInfo {
    std::vector<int> edge_of;                 // dart -> edge id
    std::vector<std::array<int, 2>> edges;    // edge id -> {min dart, alpha(min dart)}
    std::vector<int> face_of;                 // dart -> face id
    std::vector<std::vector<int>> faces;      // face id -> darts in phi-orbit order
    std::vector<int> pos_in_face;             // dart -> index within its face orbit
    std::vector<std::vector<int>> face_edges; // face id -> incident edge ids (deduped)
    int components = 0;                       // connected components of the map
};

// Structural checks: throws Error on malformed permutations, flags, or a
// non-spherical gluing. Disconnected maps must satisfy Euler = 2 per component.
void check_structure(const Diagram& d);

MapInfo build_map_info(const Diagram& d);

// Reported semantic findings; structural validity is a precondition.
struct ValidationReport {
    bool connected = false;
    bool alternating = false;
    bool reduced = false;   // no nugatory crossing
    bool prime = false;     // no 2-edge cut with crossings on both sides
    int n = 0;
    int faces = 0;
    int link_components = 0;
};

ValidationReport validate(const Diagram& d);

// Orbits of phi = sigma∘alpha, one vector of darts per face.
std::vector<std::vector<int>> faces(const Diagram& d);

// Per-dart link-component labels (orbits under {alpha, sigma^2}) and count.
std::vector<int> component_labels(const Diagram& d, int* count = nullptr);

// Structure-preserving relabeling: permutes crossing ids and rotates each
// crossing's dart block; used by tests to make fresh isomorphic copies.
Diagram relabel(const Diagram& d, const std::vector<int>& crossing_perm,
                const std::vector<int>& rotation);

// Ambient pi-rotation companion: all rotations reversed and all over/under
// flags swapped. Composing a diagram with this map preserves the link.
Diagram reversed_flagswapped(const Diagram& d);

// Same projection with every crossing switched (the mirror diagram).
Diagram mirrored(const Diagram& d);

}  // namespace altlink::model
