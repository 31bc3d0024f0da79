#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schnyder/completion.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

// Edges of D oriented differently in D2, as a flow in {-1,0,1} following D.
Flow diff(const SurfaceMap& map, const Orientation& d, const Orientation& d2);

bool is_partitionable(const SurfaceMap& map, const Flow& t, const std::vector<std::vector<Dart>>& dual_basis);
// Splits a partitionable flow by labeling the faces of its support.
std::optional<std::array<Flow, 3>> tutte_partition(const SurfaceMap& map, const Flow& t);
bool is_eulerian(const SurfaceMap& map, const Flow& t);
bool is_eulerian_partitionable(const SurfaceMap& map, const Flow& t, const std::vector<std::vector<Dart>>& dual_basis);
bool is_zero_homologous_diff(const SurfaceMap& map, const Flow& t);

struct ReducedGraph {
  Face f0 = 0;
  std::vector<char> rigid;          // per edge
  std::vector<int> reduced_of;      // face -> reduced face
  std::vector<std::vector<Face>> members;
  std::vector<Flow> boundary;       // ccw boundary flow of each reduced face
  int root = 0;                     // reduced face containing f0
  int size() const { return static_cast<int>(members.size()); }
};

ReducedGraph rigid_edges(const SurfaceMap& map, const Orientation& d0, Face f0 = 0);

enum class FlipDirection { Up, Down };

bool can_flip(const SurfaceMap& map, const ReducedGraph& r, const Orientation& d, int face, FlipDirection dir);
// Up reverses a ccw boundary, down a cw one.
Orientation flip(const SurfaceMap& map, const ReducedGraph& r, const Orientation& d, int face, FlipDirection dir);

struct HasseArc {
  int from, to, face;  // from <= to, from \ to is the ccw boundary of `face`
};

struct HasseDiagram {
  ReducedGraph reduced;
  std::vector<Orientation> nodes;
  std::vector<HasseArc> arcs;
  std::vector<std::vector<int>> up, down;  // arc indices per node
  std::unordered_map<std::string, int> index;  // orientation bits -> node
  int find(const SurfaceMap& map, const Orientation& d) const;
};

HasseDiagram enumerate_lattice(const SurfaceMap& map, const Orientation& d0, Face f0 = 0, int max_nodes = 100000);

std::pair<int, int> extremes(const HasseDiagram& h);
// Flips down (up) until no reduced face allows it.
Orientation greedy_minimum(const SurfaceMap& map, const ReducedGraph& r, Orientation d);
Orientation greedy_maximum(const SurfaceMap& map, const ReducedGraph& r, Orientation d);

bool lattice_leq(const SurfaceMap& map, const Orientation& d, const Orientation& d2, Face f0 = 0);
Orientation meet(const SurfaceMap& map, const Orientation& d1, const Orientation& d2, Face f0 = 0);
Orientation join(const SurfaceMap& map, const Orientation& d1, const Orientation& d2, Face f0 = 0);

struct HasseCheck {
  bool connected = false, acyclic = false, unique_source = false, unique_sink = false;
  bool u1 = false, u2 = false, l1 = false, l2 = false;
  bool every_face_used = false;
  bool ok() const { return connected && acyclic && unique_source && unique_sink && u1 && u2 && l1 && l2 && every_face_used; }
};

HasseCheck check_hasse_axioms(const HasseDiagram& h);

std::vector<long long> orientation_type(const Completion& c, const Orientation& d, const CycleBasis& basis);

}  // namespace schnyder
