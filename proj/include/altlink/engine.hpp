#pragma once

#include <string>
#include <vector>

#include "altlink/model.hpp"

namespace altlink::engine {

enum class Answer { Yes, No, YesQualified };

enum class Reason {
    Success,
    CrossingCountMismatch,
    ColorCensusMismatch,  // tangle classes at census_level disagree
    ProductRegionMismatch,
    TopLevelIsotopyFailure,
    FactorMismatch,      // composite wrapper: prime factor multisets differ
    AttachmentMismatch,  // composite wrapper: join structure differs
};

const char* reason_name(Reason r);

struct Verdict {
    Answer answer = Answer::No;
    Reason reason = Reason::Success;
    int census_level = 0;  // meaningful for ColorCensusMismatch
    long isotopy_steps = 0;
    std::vector<std::string> witness;  // flype sequence, small inputs on request

    bool yes() const { return answer != Answer::No; }
};

struct Options {
    bool full_crossing_check = false;
    bool witness = false;
    int witness_cap = 10;
    int jobs = 1;  // worker threads for square enumeration
};

// Decision procedure for connected prime reduced alternating diagrams.
// Tries the identity embedding and the sphere flip (rotation system
// reversed, over flags swapped); never accepts a mirror reflection alone.
Verdict equivalent_connected_prime(const model::Diagram& d1, const model::Diagram& d2,
                                   const Options& opts = {});

// General alternating inputs: reduces, splits and factors both diagrams,
// then matches the pieces. Connected sums of multi-component links are
// answered YesQualified, since factor equality alone does not pin the
// components the sum was taken along.
Verdict equivalent(const model::Diagram& d1, const model::Diagram& d2, const Options& opts = {});

}  // namespace altlink::engine
