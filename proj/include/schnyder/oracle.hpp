#pragma once

#include <array>
#include <optional>
#include <vector>

#include "schnyder/completion.hpp"
#include "schnyder/surface_map.hpp"

// Brute-force reference implementations for small instances. Nothing here
// calls into homology, completion predicates or lattice code; only the map
// data structure and plain orientations are shared.
namespace schnyder::oracle {

struct EnumerationBudget {
  long long max_orientations = 1LL << 22;
  int max_edges = 64;
  // Applies SCHNYDER_BUDGET when set.
  static EnumerationBudget from_env();
};

std::vector<Orientation> enumerate_alpha_orientations(const SurfaceMap& map, const std::vector<int>& alpha,
                                                      const EnumerationBudget& budget = {});

// Orientations of the completion with edge-vertex outdegree 1 or 4 and
// primal/dual outdegrees divisible by 3.
std::vector<Orientation> enumerate_mod3_orientations(const Completion& c, const EnumerationBudget& budget = {});

// Rational test for membership in the span of facial flows.
class FacialSpan {
 public:
  explicit FacialSpan(const SurfaceMap& map);
  // Image of a flow under a basis of functionals vanishing on facial flows.
  std::vector<long long> classify(const std::vector<long long>& flow) const;
  bool contains(const std::vector<long long>& flow) const;
  int rank() const { return static_cast<int>(functionals_.size()); }

 private:
  int edges_ = 0;
  std::vector<std::vector<long long>> functionals_;
};

// Every fundamental cycle of a depth-first spanning tree of the dual of the
// completion is checked for delta = 0 mod 3; together they span all closed walks.
bool schnyder_check_exhaustive(const Completion& c, const Orientation& d);

// Direct search for three pairwise homologous parts; t has entries in {-1,0,1}.
std::optional<std::array<std::vector<long long>, 3>> partition_search(const SurfaceMap& map, const std::vector<long long>& t,
                                                                      const EnumerationBudget& budget = {});

// Orientations with the outdegrees of d0 whose difference with d0 lies in the facial span.
std::vector<Orientation> homologous_orientations(const SurfaceMap& map, const Orientation& d0,
                                                 const EnumerationBudget& budget = {});
// Edges oriented alike in every orientation of the list.
std::vector<char> common_edges(const SurfaceMap& map, const std::vector<Orientation>& all);

}  // namespace schnyder::oracle
