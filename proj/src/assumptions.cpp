#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

bool is_contractible_cycle(const SurfaceMap& map, std::span<const Dart> cycle) {
  if (!is_zero_homologous(map, characteristic_flow(map, cycle))) return false;
  CycleSides sides = cut_along_cycle(map, cycle);
  return sides.left_is_disk() || sides.right_is_disk();
}

AssumptionReport validate_assumptions(const SurfaceMap& map) {
  AssumptionReport report;
  for (Edge e = 0; e < map.num_edges(); ++e) {
    if (!map.is_loop(e)) continue;
    const Dart cycle[] = {map.lo(e)};
    if (is_contractible_cycle(map, cycle)) report.contractible_loops.push_back(e);
  }
  for (Edge e = 0; e < map.num_edges(); ++e) {
    if (map.is_loop(e)) continue;
    for (Edge f = e + 1; f < map.num_edges(); ++f) {
      if (map.is_loop(f)) continue;
      Dart a = map.lo(e);
      Dart b;
      if (map.origin(map.lo(f)) == map.target(a) && map.target(map.lo(f)) == map.origin(a)) b = map.lo(f);
      else if (map.origin(map.hi(f)) == map.target(a) && map.target(map.hi(f)) == map.origin(a)) b = map.hi(f);
      else continue;
      const Dart cycle[] = {a, b};
      if (is_contractible_cycle(map, cycle)) report.contractible_pairs.emplace_back(e, f);
    }
  }
  return report;
}

}  // namespace schnyder
