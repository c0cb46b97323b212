#pragma once

#include <vector>

#include "altlink/model.hpp"

namespace altlink::oracle {

// Standard alternating pretzel diagram: k >= 2 vertical twist bands with
// |p_b| crossings each, joined cyclically at top and bottom. All p_b must
// share one sign; a negative list yields the mirror of the positive one.
model::Diagram generate_pretzel(const std::vector<int>& p);

// Cyclic chain of m crossings forming one twist region closed on itself.
// m = 2 gives a Hopf link diagram, m = 3 a trefoil, m = 1 a single kink.
model::Diagram twist_chain(int m);

}  // namespace altlink::oracle
