#pragma once

#include <array>
#include <string>
#include <vector>

#include "altlink/model.hpp"

namespace altlink::oracle {

// One simple flype: the tangle hidden behind far_side of a collection square
// is turned half way round, absorbing the free crossing that sits next to the
// square's bead in the ambient region and re-emitting it on the other side.
// absorb_next picks which chain neighbour supplies the crossing. edges copies
// the square's four edge ids so a move can be reported without the diagram.
struct FlypeMove {
    int square = -1;
    int far_side = 0;
    bool absorb_next = true;
    std::array<int, 4> edges{{-1, -1, -1, -1}};

    std::string describe() const;
};

// Every applicable simple flype of d. Requires a connected reduced prime
// alternating diagram.
std::vector<FlypeMove> enumerate_moves(const model::Diagram& d);

// Applies one simple flype. Throws MoveInapplicable when the named square
// has no free crossing on the requested side.
model::Diagram apply_flype(const model::Diagram& d, const FlypeMove& m);

// Label-independent fingerprint: the lexicographically least breadth-first
// encoding of (sigma, alpha, over) over every root dart of the diagram and
// of its sphere flip. Equal strings mean equal diagrams up to relabelling
// and reflection of the projection sphere.
std::string canonical_form(const model::Diagram& d);

// Breadth-first closure of d under simple flypes, one canonical code per
// diagram reached. truncated is set when max_states was hit; a truncated
// orbit must be treated as a refusal, never as evidence.
struct Orbit {
    std::vector<std::string> codes;  // discovery order; codes[0] is d itself
    int diameter = 0;
    bool truncated = false;
};

Orbit orbit(const model::Diagram& d, long max_states = 1000000);

// Exhaustive equivalence check by orbit search, usable as an independent
// referee for the structure-driven engine on small inputs. moves lists the
// flype path from d1 to a diagram canonically equal to d2 when one exists.
struct PathResult {
    bool equivalent = false;
    bool truncated = false;
    std::vector<std::string> moves;
};

// Throws CapExceeded when either diagram has more than cap crossings: the
// oracle refuses rather than guesses.
PathResult oracle_equivalent(const model::Diagram& d1, const model::Diagram& d2, int cap = 8,
                             long max_states = 1000000);

}  // namespace altlink::oracle
