#pragma once

#include <stdexcept>
#include <string>

#include "cogrowth/groups.hpp"

namespace cogrowth {

// Malformed spec input; for syntax errors the message carries line:column.
struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts either a top-level array of factor objects or {"factors":[...]}.
// Factor objects: {"kind":"cyclic","order":d,"gens":["x"]|["x","x^-1"],
// "multiplicity":m}, {"kind":"table","mul":[[...]],"gens":[indices],
// "multiplicity":m}, or {"kind":"Z","multiplicity":s}.
FreeProductSpec parse_spec_json(const std::string& text);

std::string render_spec_json(const FreeProductSpec& spec);

// Named families from the CLI shortcuts.
FreeProductSpec family_cyclic(int d, int m);        // (Z/d)^{*m}, S_i = {x_i}
FreeProductSpec family_z2zn(int n);                 // Z/2 * Z/n, S = {x, y}
FreeProductSpec family_z2_free(int m, int s);       // Z2^{*m} * Z^{*s}, symmetric S

}  // namespace cogrowth
