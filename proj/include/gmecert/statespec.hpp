#pragma once

#include <optional>
#include <string>

#include "gmecert/states.hpp"

namespace gmecert::cli {

// Parsed state-specification document. Exactly one of `density` or `family`
// drives each command: detect needs a concrete state, scan needs a family.
// `ket` is additionally set when the input is declared pure, so reports can
// include the exact pure-state concurrence.
struct StateSpec {
    std::string descriptor;
    std::optional<KetVector> ket;
    std::optional<DensityMatrix> density;
    std::optional<NoisyFamily> family;
};

// Parses a single UTF-8 JSON document:
//   {"dims": [2,2,2], "kind": "ket", "amplitudes": [[re,im], ...]}
//   {"dims": ..., "kind": "mixture", "components":
//       [{"weight": w, "amplitudes": [[re,im], ...]}, ...]}
//   {"dims": ..., "kind": "builtin", "name": "ghz" | "w" | "dct" | "white-noise",
//       "parameters": {...}}
//   {"kind": "family", "base": { <nested document> }}
// "white-noise" takes {"base": <nested document>, "x": <number>}; without "x"
// it parses as a family. "dct" takes {"lambda0_plus", "lambda0_minus",
// "lambda123": [l1,l2,l3]} and defaults to the reference parameters
// (1/6, 1/2, 1/18 each) when "parameters" is omitted.
StateSpec parse_state_spec(const std::string& json_text);

// Reads the file and parses it; IO failures raise parse_error.
StateSpec load_state_spec(const std::string& path);

} // namespace gmecert::cli
