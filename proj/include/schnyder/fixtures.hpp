#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schnyder/surface_map.hpp"

namespace schnyder::fixtures {

// Triangulated a x b torus grid. Vertex (i, j) has id i + a j; edge
// 3 (i + a j) + t joins it to (i+1, j) for t = 0, (i, j+1) for t = 1 and
// (i+1, j+1) for t = 2, with dart 2k at (i, j). Any a, b >= 1 is accepted.
SurfaceMap torus_grid(int a, int b);
// Same map, refusing sizes below 3 that create contractible loops or double edges.
SurfaceMap gen_grid(int a, int b);

// Two loops with rotation a, b, a^-1, b^-1 at the single vertex.
SurfaceMap one_vertex_torus();
// Genus 2, one vertex, four loops, one octagonal face a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1.
SurfaceMap double_torus_octagon();
// The octagon split into six triangles by diagonals from one corner.
SurfaceMap double_torus_fan();
// The octagon split into eight triangles around an added center vertex.
SurfaceMap double_torus_star();

struct Fixture {
  std::string name;
  std::string description;
  bool reconstructed = false;
  SurfaceMap map;
  std::optional<Orientation> orientation;
};

std::vector<std::string> fixture_names();
// Throws InvalidArgument for an unknown name.
Fixture fixture(const std::string& name);

}  // namespace schnyder::fixtures
