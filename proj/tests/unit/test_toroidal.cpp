#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "schnyder/completion.hpp"
#include "schnyder/errors.hpp"
#include "schnyder/fixtures.hpp"
#include "schnyder/lattice.hpp"
#include "schnyder/oracle.hpp"
#include "schnyder/toroidal.hpp"

using namespace schnyder;

namespace {

ColoredWood wood_of(const SurfaceMap& g, const Orientation& d) {
  Completion c = Completion::build(g);
  return to_colored_wood(g, extract_labeling(c, c.lift_orientation(d)));
}

// Out-edges leaving the boundary of a face set into its interior, counted
// from the face set directly.
int inward_outflow(const SurfaceMap& g, const Orientation& d, const std::set<Face>& region, const std::vector<Dart>& boundary) {
  std::set<Vertex> on;
  std::set<Edge> bedges;
  for (Dart x : boundary) {
    on.insert(g.origin(x));
    bedges.insert(g.edge(x));
  }
  int count = 0;
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (on.count(g.origin(x)) && !bedges.count(g.edge(x)) && d.is_out(g, x) && region.count(g.left(x))) ++count;
  return count;
}

}  // namespace

TEST_SUITE("toroidal") {
  TEST_CASE("3-orientations of grids") {
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 4; ++b) {
        SurfaceMap g = fixtures::torus_grid(a, b);
        Orientation d = find_3_orientation(g);
        for (int k : d.outdegrees(g)) CHECK(k == 3);
      }
    CHECK_THROWS_AS(find_3_orientation(fixtures::double_torus_fan()), Error);
  }

  TEST_CASE("middle cycles") {
    for (auto [a, b] : {std::pair{3, 3}, {4, 3}, {5, 5}, {3, 1}}) {
      SurfaceMap g = fixtures::torus_grid(a, b);
      Orientation d = find_3_orientation(g);
      for (Edge e = 0; e < g.num_edges(); ++e) {
        MiddleWalk w = middle_walk(g, d, d.tail(e));
        CHECK(is_middle_cycle(g, d, w.cycle));
        if (!w.prefix.empty()) CHECK(w.prefix.front() == d.tail(e));
      }
      for (const auto& cyc : all_middle_cycles(g, d)) {
        CHECK(gamma_on_base(g, d, cyc) == 0);
        CHECK_FALSE(is_contractible_cycle(g, cyc));
      }
      CHECK_THROWS_AS(middle_walk(g, d, g.alpha(d.tail(0))), Error);
    }
  }

  TEST_CASE("disk cycles leave k-3 edges inwards") {
    std::mt19937 rng(9);
    int checked = 0;
    for (auto [a, b] : {std::pair{3, 3}, {4, 4}, {5, 4}}) {
      SurfaceMap g = fixtures::torus_grid(a, b);
      Orientation d = find_3_orientation(g);
      for (int trial = 0; trial < 30; ++trial) {
        std::set<Face> region{static_cast<Face>(rng() % g.num_faces())};
        const int target = 1 + static_cast<int>(rng() % 4);
        while (static_cast<int>(region.size()) < target) {
          std::vector<Face> cand;
          for (Face f : region)
            for (Dart x : g.face_darts(f))
              if (!region.count(g.right(x))) cand.push_back(g.right(x));
          region.insert(cand[rng() % cand.size()]);
        }
        std::vector<Dart> boundary;
        for (Face f : region)
          for (Dart x : g.face_darts(f))
            if (!region.count(g.right(x))) boundary.push_back(x);
        // order the boundary darts into a walk
        std::vector<Dart> cycle{boundary.front()};
        while (cycle.size() < boundary.size()) {
          Dart next = -1;
          for (Dart x : boundary)
            if (g.origin(x) == g.target(cycle.back()) && std::find(cycle.begin(), cycle.end(), x) == cycle.end()) next = x;
          if (next < 0) break;
          cycle.push_back(next);
        }
        if (cycle.size() != boundary.size() || !is_simple_cycle(g, cycle)) continue;
        CHECK(is_contractible_cycle(g, cycle));
        const int k = static_cast<int>(cycle.size());
        CHECK(disk_cycle_outflow(g, d, cycle) == k - 3);
        CHECK(inward_outflow(g, d, region, cycle) == k - 3);
        ++checked;
      }
    }
    CHECK(checked >= 20);
    SurfaceMap g = fixtures::torus_grid(3, 3);
    std::vector<Dart> row = {0, 6, 12};
    CHECK_THROWS_AS(disk_cycle_outflow(g, find_3_orientation(g), row), Error);
  }

  TEST_CASE("weak homology of rows and columns") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    CycleBasis b = tree_cotree_basis(g);
    std::vector<Dart> row0 = {0, 6, 12}, row1 = {18, 24, 30}, col0 = {2, 20, 38};
    REQUIRE(is_simple_cycle(g, col0));
    CHECK(weakly_homologous(g, row0, row1, b));
    CHECK(weakly_homologous(g, row0, reversed_walk(g, row1), b));
    CHECK_FALSE(weakly_homologous(g, row0, col0, b));
  }

  TEST_CASE("schnyderize grids") {
    for (auto [a, b] : {std::pair{3, 3}, {4, 3}, {4, 5}, {3, 1}, {1, 1}}) {
      SurfaceMap g = fixtures::torus_grid(a, b);
      CycleBasis basis = tree_cotree_basis(g);
      SchnyderizeResult r = schnyderize(g);
      Completion c = Completion::build(g);
      CHECK(is_schnyder_orientation(c, r.completion_orientation, basis).schnyder);
      CHECK(oracle::schnyder_check_exhaustive(c, r.completion_orientation));
      Classification k = classify(g, r.labeling);
      for (int t : k.edge_type) CHECK(t == 1);
      for (int t : k.vertex_type) CHECK(t == 1);
      for (int t : k.face_type) CHECK(t == 1);
      CHECK(is_middle_cycle(g, r.orientation, r.middle_a));
      CHECK(is_middle_cycle(g, r.orientation, r.middle_b));
      CHECK_FALSE(weakly_homologous(g, r.middle_a, r.middle_b, basis));
      CHECK(r.type == std::vector<long long>{0, 0});
      CHECK(crossing_class(g, r.wood) != CrossingClass::NotHalfCrossing);
    }
  }

  TEST_CASE("schnyderize is reproducible for a seed") {
    SurfaceMap g = fixtures::torus_grid(5, 4);
    for (unsigned seed : {0u, 1u, 17u}) {
      SchnyderizeOptions o;
      o.seed = seed;
      CHECK(schnyderize(g, o).orientation == schnyderize(g, o).orientation);
    }
  }

  TEST_CASE("schnyderize needs a toroidal triangulation") {
    CHECK_THROWS_AS(schnyderize(fixtures::double_torus_fan()), Error);
    CHECK_THROWS_AS(schnyderize(fixtures::one_vertex_torus()), Error);
  }

  TEST_CASE("crossing classes of the 3x1 grid fixtures") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    CHECK(crossing_class(g, wood_of(g, *fixtures::fixture("fig13").orientation)) == CrossingClass::NotHalfCrossing);
    CHECK(crossing_class(g, wood_of(g, *fixtures::fixture("fig14").orientation)) == CrossingClass::HalfCrossing);
    CHECK(crossing_class(g, wood_of(g, *fixtures::fixture("fig15").orientation)) == CrossingClass::Crossing);
    CHECK(crossing_class(g, wood_of(g, *fixtures::fixture("fig16").orientation)) == CrossingClass::NotHalfCrossing);
    CHECK(std::string(crossing_name(CrossingClass::HalfCrossing)) == "half_crossing");
  }

  TEST_CASE("monochromatic cycles of 3-orientation woods") {
    SurfaceMap g = fixtures::torus_grid(4, 3);
    Orientation d = schnyderize(g).orientation;
    ColoredWood w = wood_of(g, d);
    auto cycles = monochromatic_cycles(g, w);
    for (int color = 0; color < 3; ++color) {
      CHECK_FALSE(cycles[color].empty());
      for (const auto& cyc : cycles[color]) {
        CHECK(is_simple_cycle(g, cyc));
        for (Dart x : cyc) CHECK(w.color[x] == color);
        CHECK_FALSE(is_contractible_cycle(g, cyc));
      }
    }
  }

  TEST_CASE("half-crossing woods have type (0,0)") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    Completion c = Completion::build(g);
    CycleBasis b = tree_cotree_basis(g);
    int half = 0;
    for (const Orientation& d : oracle::enumerate_alpha_orientations(g, std::vector<int>(3, 3))) {
      Orientation lifted = c.lift_orientation(d);
      SchnyderReport r = is_schnyder_orientation(c, lifted, b);
      if (!r.schnyder) continue;
      if (crossing_class(g, wood_of(g, d)) == CrossingClass::NotHalfCrossing) continue;
      ++half;
      CHECK(r.gamma == std::vector<long long>{0, 0});
    }
    CHECK(half == 14);
  }

  TEST_CASE("canonical cycle rotation") {
    std::vector<Dart> c = {7, 3, 9};
    CHECK(canonical_cycle(c) == std::vector<Dart>{3, 9, 7});
  }
}
