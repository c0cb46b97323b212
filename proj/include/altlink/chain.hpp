#pragma once

#include <array>
#include <optional>
#include <vector>

#include "altlink/isotopy.hpp"

namespace altlink::structure {

struct ChainSite {
    int vertex;        // graph vertex, -1 for the anchor
    bool is_anchor;
    bool is_bead;
    int arrival_port;  // ccw-first arrival port at the site
    int arrival_dart;  // graph dart (-1 at the anchor)
};

// Result of walking the region as two parallel strands. ok means every site
// was threaded exactly once and the walk closed up; the sites then list the
// chain in order (anchored walks start at the anchor).
struct ChainParse {
    bool ok = false;
    std::vector<ChainSite> sites;
    int free_total = 0;
    int weight = 0;
    bool has_parity = false;
    bool parity = false;
};

ChainParse parse_chain(const isotopy::TangleGraph& g);

// Product-region summary: bead colors in chain order, free-crossing counts
// between them, per-bead boundary labels normalised to the arrival port, and
// the twist parity bit (present only when free crossings exist). Anchored
// profiles have weight+1 gaps (fenced by the anchor), cyclic ones weight.
struct ProductRegionProfile {
    int weight = 0;
    int free_total = 0;
    std::vector<int> gaps;
    std::vector<int> bead_colors;
    std::vector<std::array<int, 4>> bead_labels;
    bool has_parity = false;
    bool parity = false;
};

std::optional<ProductRegionProfile> detect_product_region(const isotopy::TangleGraph& g);

}  // namespace altlink::structure
