#pragma once

#include <string>

#include "altlink/model.hpp"

namespace altlink::codec {

enum class Format { Auto, Pd, Native, Dot };

struct ParseOptions {
    // PD tuples are read counterclockwise by default; set for clockwise tables.
    bool clockwise = false;
    Format hint = Format::Auto;
};

// Accepts PD text (`PD[X[1,4,2,5],...]`), the native JSON map object, or the
// `UNKNOT` token. The returned diagram always passes check_structure.
model::Diagram parse(const std::string& text, const ParseOptions& opts = {});

// Native JSON is byte-stable and map-identical on re-parse; PD round-trips to
// the same diagram up to dart relabeling; Dot is a debug export only.
std::string serialize(const model::Diagram& d, Format format);

}  // namespace altlink::codec
