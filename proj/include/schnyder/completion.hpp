#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

enum class VertexRole { Primal, Dual, EdgeVertex };

// Primal-dual completion of a map G.
//
// For each dart d of G the completion has four darts:
//   4d   primal side of the edge joining origin(d) to the edge-vertex of d's edge
//   4d+1 edge-vertex side of that edge
//   4d+2 dual side of the edge joining face left(d) to the edge-vertex
//   4d+3 edge-vertex side of that edge
// so completion edge 2d is the primal half of d and 2d+1 the dual half, both
// with reference direction towards the edge-vertex. Faces are the angles of G.
class Completion {
 public:
  static Completion build(const SurfaceMap& g);

  const SurfaceMap& map() const { return hat_; }
  const SurfaceMap& base() const { return g_; }

  static Dart primal_dart(Dart d) { return 4 * d; }
  static Dart primal_side_dart(Dart d) { return 4 * d + 1; }
  static Dart dual_dart(Dart d) { return 4 * d + 2; }
  static Dart dual_side_dart(Dart d) { return 4 * d + 3; }
  static Edge primal_half(Dart d) { return 2 * d; }
  static Edge dual_half(Dart d) { return 2 * d + 1; }
  // The dart of G a completion edge belongs to.
  static Dart base_dart(Edge e) { return e / 2; }
  static bool is_primal_half(Edge e) { return e % 2 == 0; }

  VertexRole role(Vertex v) const { return roles_[v]; }
  Vertex primal_vertex(Vertex v) const { return primal_[v]; }
  Vertex dual_vertex(Face f) const { return dual_[f]; }
  Vertex edge_vertex(Edge e) const { return edge_vertex_[e]; }
  Face face_of_angle(Dart d) const { return face_of_angle_[d]; }
  Dart angle_of_face(Face f) const { return angle_of_face_[f]; }

  // Cycle of the completion running through the edge-vertices of C.
  std::vector<Dart> lift_cycle(std::span<const Dart> cycle) const;
  // Orientation of the completion induced by an orientation of G: each edge
  // of G becomes a type-1 edge and dual vertices point at all edge-vertices.
  Orientation lift_orientation(const Orientation& d) const;

 private:
  SurfaceMap g_, hat_;
  std::vector<VertexRole> roles_;
  std::vector<Vertex> primal_, dual_, edge_vertex_;
  std::vector<Face> face_of_angle_;
  std::vector<Dart> angle_of_face_;
};

bool is_mod3_orientation(const Completion& c, const Orientation& d);
Flow out_edge_flow(const Completion& c, const Orientation& d);
// W is a closed walk of the dual of the completion.
long long delta(const Completion& c, const Orientation& d, std::span<const Dart> dual_walk);
// Right minus left count of completion edges leaving the lifted cycle.
long long gamma(const Completion& c, const Orientation& d, std::span<const Dart> cycle);
// Same count read on G itself; matches gamma for lifted orientations.
long long gamma_on_base(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle);
// Dual walks of the completion just left and right of the lifted cycle.
std::vector<Dart> left_dual_walk(const Completion& c, std::span<const Dart> cycle);
std::vector<Dart> right_dual_walk(const Completion& c, std::span<const Dart> cycle);

struct SchnyderReport {
  bool mod3 = false;
  bool schnyder = false;
  std::vector<long long> gamma;  // one value per basis cycle
};

SchnyderReport is_schnyder_orientation(const Completion& c, const Orientation& d, const CycleBasis& basis);

// Color in {0,1,2} per angle of G; angle d is the corner between d and sigma(d).
class AngleLabeling {
 public:
  AngleLabeling() = default;
  explicit AngleLabeling(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {}
  static AngleLabeling constant(const SurfaceMap& g, int color);

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](Dart d) const { return labels_[d]; }
  void set(Dart d, int c) { labels_[d] = static_cast<std::uint8_t>(((c % 3) + 3) % 3); }
  AngleLabeling shifted(int k) const;
  bool operator==(const AngleLabeling&) const = default;

 private:
  std::vector<std::uint8_t> labels_;
};

// Labels each angle by delta along a dual path from the angle `root` (base color there).
AngleLabeling extract_labeling(const Completion& c, const Orientation& d, Dart root = 0, int base = 0);
Orientation labeling_to_orientation(const Completion& c, const AngleLabeling& l);

struct Classification {
  std::vector<int> edge_type;    // 0, 1 or 2
  std::vector<int> vertex_type;  // k with 3k color intervals
  std::vector<int> face_type;
};

Classification classify(const SurfaceMap& g, const AngleLabeling& l);

// Per dart of G: whether the edge leaves through it, and its color there.
struct ColoredWood {
  std::vector<int> edge_type;
  std::vector<char> outgoing;
  std::vector<int> color;
  int outdegree(const SurfaceMap& g, Vertex v) const;
};

ColoredWood to_colored_wood(const SurfaceMap& g, const AngleLabeling& l);
AngleLabeling wood_to_labeling(const SurfaceMap& g, const ColoredWood& w);
// Direct check of the generalized Schnyder property at every vertex and of
// the absence of monochromatic face boundaries. Throws on the first failure.
void validate_wood(const SurfaceMap& g, const ColoredWood& w);

}  // namespace schnyder
