#pragma once

#include <optional>
#include <span>
#include <vector>

#include "schnyder/surface_map.hpp"

namespace schnyder {

// Integer value per edge, measured against the reference direction (lower dart).
class Flow {
 public:
  Flow() = default;
  explicit Flow(int edges) : values_(edges, 0) {}
  explicit Flow(std::vector<long long> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  long long operator[](Edge e) const { return values_[e]; }
  long long& operator[](Edge e) { return values_[e]; }
  const std::vector<long long>& values() const { return values_; }

  bool is_zero() const;
  int support_size() const;

  Flow& operator+=(const Flow& o);
  Flow& operator-=(const Flow& o);
  Flow operator-() const;
  friend Flow operator+(Flow a, const Flow& b) { return a += b; }
  friend Flow operator-(Flow a, const Flow& b) { return a -= b; }
  friend Flow operator*(long long k, Flow a) {
    for (auto& v : a.values_) v *= k;
    return a;
  }
  bool operator==(const Flow&) const = default;

 private:
  std::vector<long long> values_;
};

Flow characteristic_flow(const SurfaceMap& map, std::span<const Dart> walk);
Flow orientation_flow(const SurfaceMap& map, const Orientation& d);
Flow facial_flow(const SurfaceMap& map, Face f);
bool is_circulation(const SurfaceMap& map, const Flow& z);

// Sum over edges of p_e d_{e*}; p lives on G, d on G* (same edge ids).
long long beta(const Flow& p, const Flow& d);

struct CycleBasis {
  std::vector<std::vector<Dart>> cycles;       // B_1..B_2g on the map
  std::vector<std::vector<Dart>> dual_cycles;  // matching cycles on the dual map
  std::vector<Edge> tree_edges, cotree_edges, leftover_edges;
  int size() const { return static_cast<int>(cycles.size()); }
};

// Spanning tree by BFS from `root`, dual spanning tree on the remaining
// edges by BFS from `dual_root`. Cycles are ordered by leftover edge id and
// dual_cycles[i] crosses cycles[j] only when i == j.
CycleBasis tree_cotree_basis(const SurfaceMap& map, Vertex root = 0, Face dual_root = 0);

// The dual facial walks (one per vertex) as walks of the dual map.
std::vector<std::vector<Dart>> dual_facial_walks(const SurfaceMap& map);

bool is_homologous(const SurfaceMap& map, const Flow& p, const Flow& q,
                   const std::vector<std::vector<Dart>>& dual_basis);

struct FacePotential {
  Face f0 = 0;
  std::vector<long long> lambda;
};

// Throws NotZeroHomologousError when z is not in the span of facial flows.
FacePotential face_potential(const SurfaceMap& map, const Flow& z, Face f0 = 0);
std::optional<FacePotential> try_face_potential(const SurfaceMap& map, const Flow& z, Face f0 = 0);
Flow flow_from_potential(const SurfaceMap& map, const std::vector<long long>& lambda);
bool is_zero_homologous(const SurfaceMap& map, const Flow& z);

// Coefficients mu with z - sum mu_i phi(B_i) in the facial span. Requires a circulation.
std::vector<long long> homology_coordinates(const SurfaceMap& map, const Flow& z, const CycleBasis& basis);

}  // namespace schnyder
