#include <doctest.h>

#include <cstdlib>
#include <set>

#include "schnyder/completion.hpp"
#include "schnyder/errors.hpp"
#include "schnyder/fixtures.hpp"
#include "schnyder/lattice.hpp"
#include "schnyder/oracle.hpp"

using namespace schnyder;

TEST_SUITE("oracle") {
  TEST_CASE("alpha orientations") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    std::vector<int> deg(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
    // loops count twice in the degree, so target the number of incident edge ends leaving
    SurfaceMap h = fixtures::torus_grid(3, 3);
    std::vector<int> zero(h.num_vertices(), 0);
    CHECK(oracle::enumerate_alpha_orientations(h, zero).empty());
    auto three = oracle::enumerate_alpha_orientations(g, std::vector<int>(3, 3));
    CHECK(three.size() == 80);
    std::set<std::string> distinct;
    for (const auto& d : three) {
      for (int k : d.outdegrees(g)) CHECK(k == 3);
      distinct.insert(d.bits(g));
    }
    CHECK(distinct.size() == three.size());
    CHECK(std::is_sorted(three.begin(), three.end(),
                         [&](const Orientation& a, const Orientation& b) { return a.bits(g) < b.bits(g); }));
  }

  TEST_CASE("all edges out of one side") {
    // a bipartite-like target: in the 2x2 grid every edge can leave its lower dart
    SurfaceMap g = fixtures::torus_grid(2, 2);
    std::vector<int> alpha = Orientation::reference(g).outdegrees(g);
    auto all = oracle::enumerate_alpha_orientations(g, alpha);
    CHECK(std::find(all.begin(), all.end(), Orientation::reference(g)) != all.end());
  }

  TEST_CASE("degree target on a star gives one orientation") {
    SurfaceMap g = fixtures::double_torus_star();
    // the center vertex takes every spoke: center outdegree 8, corner outdegree 4 loops
    std::vector<int> alpha(2, 0);
    Orientation d = Orientation::reference(g);
    for (Edge e = 0; e < g.num_edges(); ++e)
      if (g.origin(g.lo(e)) != g.origin(g.hi(e)) && g.degree(g.origin(g.lo(e))) == 8) d.set_tail(e, g.lo(e));
      else if (g.origin(g.lo(e)) != g.origin(g.hi(e))) d.set_tail(e, g.hi(e));
    alpha = d.outdegrees(g);
    Vertex center = g.degree(0) == 8 ? 0 : 1;
    CHECK(alpha[center] == 8);
    CHECK(oracle::enumerate_alpha_orientations(g, alpha).size() == 16);  // the four loops are free
  }

  TEST_CASE("budget limits") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    oracle::EnumerationBudget b;
    b.max_orientations = 10;
    CHECK_THROWS_AS(oracle::enumerate_alpha_orientations(g, std::vector<int>(3, 3), b), Error);
    b = {};
    b.max_edges = 5;
    try {
      oracle::enumerate_alpha_orientations(g, std::vector<int>(3, 3), b);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    setenv("SCHNYDER_BUDGET", "123", 1);
    CHECK(oracle::EnumerationBudget::from_env().max_orientations == 123);
    unsetenv("SCHNYDER_BUDGET");
    CHECK(oracle::EnumerationBudget::from_env().max_orientations == (1LL << 22));
  }

  TEST_CASE("facial span dimension") {
    for (const auto& name : {"one-vertex-torus", "octagon", "octagon-star", "grid-3x3"}) {
      SurfaceMap g = fixtures::fixture(name).map;
      oracle::FacialSpan span(g);
      CHECK(span.rank() == g.num_vertices() - 1 + 2 * g.genus());
    }
  }

  TEST_CASE("exhaustive Schnyder check on Fig 5") {
    SurfaceMap g = fixtures::torus_grid(1, 1);
    Completion c = Completion::build(g);
    CHECK(oracle::schnyder_check_exhaustive(c, c.lift_orientation(*fixtures::fixture("fig5-right").orientation)));
    CHECK_FALSE(oracle::schnyder_check_exhaustive(c, c.lift_orientation(*fixtures::fixture("fig5-left").orientation)));
  }

  TEST_CASE("exhaustive and fast Schnyder checks agree") {
    for (const auto& name : {"one-vertex-torus", "fig5", "octagon", "grid-2x1", "grid-3x1"}) {
      SurfaceMap g = fixtures::fixture(name).map;
      Completion c = Completion::build(g);
      CycleBasis b = tree_cotree_basis(g);
      auto all = oracle::enumerate_mod3_orientations(c);
      CHECK_FALSE(all.empty());
      for (const Orientation& d : all) {
        CHECK(is_mod3_orientation(c, d));
        CHECK(oracle::schnyder_check_exhaustive(c, d) == is_schnyder_orientation(c, d, b).schnyder);
      }
    }
  }

  TEST_CASE("partition search") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    auto empty = oracle::partition_search(g, std::vector<long long>(g.num_edges(), 0));
    REQUIRE(empty.has_value());
    for (const auto& p : *empty) CHECK(std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; }));
    auto face = oracle::partition_search(g, facial_flow(g, 0).values());
    CHECK(face.has_value());
    std::vector<long long> loops(g.num_edges(), 0);
    for (Edge e : {1, 4, 7}) loops[e] = 1;
    auto three = oracle::partition_search(g, loops);
    REQUIRE(three.has_value());
    for (const auto& p : *three) CHECK(std::count(p.begin(), p.end(), 1) == 1);
    loops[7] = 0;
    CHECK_FALSE(oracle::partition_search(g, loops).has_value());
    SurfaceMap big = fixtures::torus_grid(3, 3);
    CHECK_THROWS_AS(oracle::partition_search(big, std::vector<long long>(big.num_edges(), 1)), Error);
  }

  TEST_CASE("3-orientations split into lattices") {
    SurfaceMap g = fixtures::torus_grid(3, 1);
    auto all = oracle::enumerate_alpha_orientations(g, std::vector<int>(3, 3));
    std::set<std::string> covered;
    size_t total = 0;
    for (const Orientation& d : all) {
      if (covered.count(d.bits(g))) continue;
      HasseDiagram h = enumerate_lattice(g, d);
      CHECK(h.nodes.size() == oracle::homologous_orientations(g, d).size());
      for (const Orientation& x : h.nodes) covered.insert(x.bits(g));
      total += h.nodes.size();
    }
    CHECK(total == all.size());
  }
}
