#pragma once

// Structure files (JSON) and CSV number formatting.
//
// Explicit form:
//   { "v_left": 0, "v_right": 0, "span": 4, "unit_label": "s",
//     "barriers": [ { "height": 3, "width": 1, "center": 1 }, ... ] }
//
// Generator form (expanded through the scenario catalog):
//   { "generator": { "kind": "fig4a", "params": { "N": 8 } } }

#include "layerwave/scenarios.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace layerwave {

class ParseError : public Error {
public:
    using Error::Error;
};

struct StructureDocument {
    LayeredStructure structure;
    std::string unit_label = "s";
    std::optional<Scenario> scenario;  // present for generator documents
};

// Throws ParseError (with line/column or field path) or ValidationError.
StructureDocument parse_structure(std::string_view text);
StructureDocument parse_structure_file(const std::filesystem::path& path);

// Explicit form; parse_structure(serialize_structure(s)).structure == s.
std::string serialize_structure(const LayeredStructure& s, std::string_view unit_label = "s");

// 17 significant digits, '.' decimal separator regardless of locale; reads
// back to the same double.
std::string format_double(double v);

}  // namespace layerwave
