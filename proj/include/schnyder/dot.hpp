#pragma once

#include <iosfwd>

#include "schnyder/completion.hpp"
#include "schnyder/lattice.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

// Colors 0, 1, 2 are drawn red, blue, green; every outgoing dart is one arrow.
void write_wood_dot(std::ostream& out, const SurfaceMap& g, const ColoredWood& w);
void write_orientation_dot(std::ostream& out, const SurfaceMap& g, const Orientation& d);
// Node labels count reduced faces with a ccw (magenta) and cw (cyan)
// directed boundary; arcs carry the flipped reduced face.
void write_hasse_dot(std::ostream& out, const SurfaceMap& g, const HasseDiagram& h);

}  // namespace schnyder
