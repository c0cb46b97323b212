#pragma once

#include <vector>

#include "altlink/model.hpp"

namespace altlink::normalize {

// Untwists nugatory crossings (lowest id first) until none remain. Components
// that twist away completely become zero-crossing unknot marks.
model::Diagram remove_nugatory(const model::Diagram& d);

// One connected component of a diagram, split along two-edge cuts into prime
// summands. joins() counts the cuts severed inside the component.
struct Piece {
    std::vector<model::Diagram> factors;  // connected, reduced, prime
    int link_components = 0;              // strand count of the whole piece

    int joins() const { return (int)factors.size() - 1; }
};

struct Decomposition {
    std::vector<Piece> pieces;
    int unknot_components = 0;  // crossing-free circles, markers included
};

// Prime decomposition of a reduced diagram. Accepts disconnected input; each
// component with crossings becomes one Piece.
Decomposition decompose(const model::Diagram& d);

}  // namespace altlink::normalize
