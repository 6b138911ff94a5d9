// Schematic fixed-width rendering of diagrams.
#pragma once

#include <string>

#include "brauerkit/diagram.hpp"

namespace brauerkit {

// Numbered top and bottom lines with a tail marker, '|' for straight
// transversals, '\' and '/' for slanted ones, cups as \__/ under the top
// line and caps as /--\ over the bottom line.  Deterministic; the routing
// is schematic, the pair list is the ground truth.
std::string render_ascii(const Diagram& d);

// Same, with a trailing "circles: k" line.
std::string render_ascii(const SKDiagram& sk);

}  // namespace brauerkit
