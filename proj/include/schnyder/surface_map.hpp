#pragma once

#include <span>
#include <string>
#include <vector>

namespace schnyder {

using Dart = int;
using Edge = int;
using Vertex = int;
using Face = int;

// A combinatorial map on an orientable surface.
//
// Darts are 0..2m-1. alpha pairs the two darts of an edge, sigma turns
// counterclockwise around the origin vertex. The face successor of d is
// sigma^-1(alpha(d)), so every facial walk keeps its face on the left.
// Vertex, edge and face ids follow the smallest dart of each orbit.
class SurfaceMap {
 public:
  SurfaceMap() = default;

  static SurfaceMap build(std::vector<Dart> alpha, std::vector<Dart> sigma);
  // Builds from the edge pairing and the face successor permutation.
  static SurfaceMap from_faces(const std::vector<Dart>& alpha, const std::vector<Dart>& face_next);

  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_vertices() const { return static_cast<int>(vertex_start_.size()) - 1; }
  int num_faces() const { return static_cast<int>(face_start_.size()) - 1; }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_inv_[alpha_[d]]; }
  Dart phi_inv(Dart d) const { return alpha_[sigma_[d]]; }

  Vertex origin(Dart d) const { return vertex_of_[d]; }
  Vertex target(Dart d) const { return vertex_of_[alpha_[d]]; }
  Face left(Dart d) const { return face_of_[d]; }
  Face right(Dart d) const { return face_of_[alpha_[d]]; }
  Edge edge(Dart d) const { return edge_of_[d]; }
  Dart lo(Edge e) const { return edge_lo_[e]; }
  Dart hi(Edge e) const { return alpha_[edge_lo_[e]]; }
  // +1 when d runs along the reference direction of its edge.
  int sign(Dart d) const { return edge_lo_[edge_of_[d]] == d ? 1 : -1; }

  std::span<const Dart> vertex_darts(Vertex v) const {
    return {vertex_order_.data() + vertex_start_[v], vertex_order_.data() + vertex_start_[v + 1]};
  }
  std::span<const Dart> face_darts(Face f) const {
    return {face_order_.data() + face_start_[f], face_order_.data() + face_start_[f + 1]};
  }
  int degree(Vertex v) const { return vertex_start_[v + 1] - vertex_start_[v]; }
  int face_degree(Face f) const { return face_start_[f + 1] - face_start_[f]; }

  bool is_triangulation() const;
  bool is_loop(Edge e) const { return origin(lo(e)) == origin(hi(e)); }

  // Dual map sharing dart ids: dual dart d runs from right(d) to left(d).
  SurfaceMap dual() const;

  // Counterclockwise facial walks, one per face.
  std::vector<std::vector<Dart>> faces() const;

  const std::vector<Dart>& alpha_perm() const { return alpha_; }
  const std::vector<Dart>& sigma_perm() const { return sigma_; }

 private:
  std::vector<Dart> alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<Dart> edge_lo_;
  std::vector<Dart> vertex_order_, face_order_;
  std::vector<int> vertex_start_, face_start_;
};

// Dart sequences. A walk is valid when each dart starts where the previous ends.
bool is_walk(const SurfaceMap& map, std::span<const Dart> walk);
bool is_closed_walk(const SurfaceMap& map, std::span<const Dart> walk);
// Closed walk without repeated vertices.
bool is_simple_cycle(const SurfaceMap& map, std::span<const Dart> walk);
std::vector<Dart> reversed_walk(const SurfaceMap& map, std::span<const Dart> walk);

// One direction per edge, stored as the dart the arrow leaves from.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<Dart> tails) : tail_(std::move(tails)) {}

  static Orientation reference(const SurfaceMap& map);
  static Orientation from_bits(const SurfaceMap& map, const std::string& bits);

  int size() const { return static_cast<int>(tail_.size()); }
  Dart tail(Edge e) const { return tail_[e]; }
  void set_tail(Edge e, Dart d) { tail_[e] = d; }
  bool is_out(const SurfaceMap& map, Dart d) const { return tail_[map.edge(d)] == d; }
  void reverse(const SurfaceMap& map, Edge e) { tail_[e] = map.alpha(tail_[e]); }
  // +1 when the edge follows its reference direction.
  int sign(const SurfaceMap& map, Edge e) const { return map.sign(tail_[e]); }

  std::vector<int> outdegrees(const SurfaceMap& map) const;
  // '0' for reference direction, '1' for reversed; one char per edge.
  std::string bits(const SurfaceMap& map) const;

  const std::vector<Dart>& tails() const { return tail_; }
  bool operator==(const Orientation&) const = default;

 private:
  std::vector<Dart> tail_;
};

bool is_valid_orientation(const SurfaceMap& map, const Orientation& d);

// Sides of a simple cycle after cutting the surface along it.
struct CycleSides {
  bool separating = false;
  int left_euler = 0;   // Euler characteristic of the left piece (whole cut surface when not separating)
  int right_euler = 0;
  std::vector<Face> left_faces, right_faces;
  bool left_is_disk() const { return separating && left_euler == 1; }
  bool right_is_disk() const { return separating && right_euler == 1; }
};

CycleSides cut_along_cycle(const SurfaceMap& map, std::span<const Dart> cycle);

// Darts at the cycle's vertices lying strictly on its left (or right).
std::vector<Dart> darts_left_of(const SurfaceMap& map, std::span<const Dart> cycle);
std::vector<Dart> darts_right_of(const SurfaceMap& map, std::span<const Dart> cycle);

struct AssumptionReport {
  std::vector<Edge> contractible_loops;
  std::vector<std::pair<Edge, Edge>> contractible_pairs;
  bool ok() const { return contractible_loops.empty() && contractible_pairs.empty(); }
};

bool is_contractible_cycle(const SurfaceMap& map, std::span<const Dart> cycle);
AssumptionReport validate_assumptions(const SurfaceMap& map);

}  // namespace schnyder
