#pragma once

#include <string>

#include "symbol.hpp"

namespace striphardy {

struct LoadedSpec {
    SymbolSpec spec;
    bool square_root = false;  // interpret the data as h with f = h^2
};

// JSON schema:
// {
//   "phase":    {"re": 1.0, "im": 0.0},
//   "blaschke": {"zeros": [{"re": .., "im": .., "mult": 1}, ...], "infinite_tail": false},
//   "singular": {"a0": 0.0, "a_inf": 0.0, "atoms": [{"s": .., "w": ..}, ...]},
//   "outer":    {"kind": "constant"|"sech_alpha"|"gauss_strip"|"table",
//                "params": {...}, "admissible": true},
//   "square_root": false
// }
// Missing sections default to the trivial factor. Parse and validation
// failures throw Error(parse_error) with a located message.
LoadedSpec load_spec_json(const std::string& json_text);
LoadedSpec load_spec_file(const std::string& path);

std::string spec_summary(const SymbolSpec& spec);

}  // namespace striphardy
