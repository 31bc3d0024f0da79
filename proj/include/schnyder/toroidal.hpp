#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "schnyder/completion.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

// Orientation of a toroidal triangulation with every outdegree equal to 3.
Orientation find_3_orientation(const SurfaceMap& g);

struct MiddleWalk {
  std::vector<Dart> prefix;  // part before the periodic cycle
  std::vector<Dart> cycle;   // terminal middle cycle, traversed in walk order
};

// e0 must be the tail dart of its edge in d.
MiddleWalk middle_walk(const SurfaceMap& g, const Orientation& d, Dart e0);
bool is_middle_cycle(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle);
// Distinct terminal cycles of the middle walks from every edge, each rotated
// to start at its smallest dart.
std::vector<std::vector<Dart>> all_middle_cycles(const SurfaceMap& g, const Orientation& d);

// Out-edges of the cycle's vertices pointing into the disk it bounds.
int disk_cycle_outflow(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle);

bool weakly_homologous(const SurfaceMap& g, std::span<const Dart> c1, std::span<const Dart> c2, const CycleBasis& basis);

struct SchnyderizeOptions {
  unsigned seed = 0;
  long long budget = -1;  // reversal steps; negative means 10 m
  bool fallback = true;
  long long fallback_limit = 1 << 22;
};

struct SchnyderizeResult {
  Orientation orientation;             // on G
  Orientation completion_orientation;  // on the completion
  AngleLabeling labeling;
  ColoredWood wood;
  std::vector<Dart> middle_a, middle_b;  // non weakly homologous middle cycles
  std::vector<long long> type;
  int reversals = 0;
  bool used_fallback = false;
};

SchnyderizeResult schnyderize(const SurfaceMap& g, const SchnyderizeOptions& options = {});

// Cycles of each color class; each class must give every vertex exactly one out-edge.
std::array<std::vector<std::vector<Dart>>, 3> monochromatic_cycles(const SurfaceMap& g, const ColoredWood& w);

enum class CrossingClass { NotHalfCrossing, HalfCrossing, Crossing };
const char* crossing_name(CrossingClass c);
CrossingClass crossing_class(const SurfaceMap& g, const ColoredWood& w);

// Rotates a cycle to start at its smallest dart.
std::vector<Dart> canonical_cycle(std::span<const Dart> cycle);

}  // namespace schnyder
