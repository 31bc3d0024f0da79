#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schnyder/errors.hpp"
#include "schnyder/fixtures.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/oracle.hpp"

using namespace schnyder;

namespace {

// Rank of an integer matrix by fraction-free elimination.
int rank_of(std::vector<std::vector<long long>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      long long a = rows[rank][c], b = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = a * rows[i][j] - b * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> torus_and_beyond() {
  return {"one-vertex-torus", "octagon", "octagon-fan", "octagon-star", "fig5", "grid-3x1", "grid-3x3", "grid-4x5"};
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("characteristic flow counts traversals") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    CHECK(characteristic_flow(g, std::vector<Dart>{}).is_zero());
    std::vector<Dart> walk = {0, 1, 0, 6, 7};
    Flow f = characteristic_flow(g, walk);
    CHECK(f[0] == 1);
    CHECK(f[3] == 0);
    CHECK(f.support_size() == 1);
  }

  TEST_CASE("facial walk of the one-vertex torus has zero flow") {
    SurfaceMap g = fixtures::one_vertex_torus();
    CHECK(facial_flow(g, 0).is_zero());
    CHECK(characteristic_flow(g, g.faces()[0]) == Flow(testref::walk_flow(g, g.faces()[0])));
  }

  TEST_CASE("beta is the edgewise pairing") {
    Flow p(std::vector<long long>{1, -2, 0, 3});
    Flow d(std::vector<long long>{2, 1, 5, -1});
    CHECK(beta(p, d) == 2 - 2 + 0 - 3);
    CHECK_THROWS_AS(beta(p, Flow(3)), Error);
  }

  TEST_CASE("tree-cotree basis shape") {
    for (const auto& name : torus_and_beyond()) {
      SurfaceMap g = fixtures::fixture(name).map;
      CycleBasis b = tree_cotree_basis(g);
      CAPTURE(name);
      CHECK(b.size() == 2 * g.genus());
      CHECK(static_cast<int>(b.tree_edges.size()) == g.num_vertices() - 1);
      CHECK(static_cast<int>(b.cotree_edges.size()) == g.num_faces() - 1);
      CHECK(static_cast<int>(b.leftover_edges.size()) == 2 * g.genus());
      SurfaceMap dual = g.dual();
      for (int i = 0; i < b.size(); ++i) {
        CHECK(is_simple_cycle(g, b.cycles[i]));
        CHECK(is_closed_walk(dual, b.dual_cycles[i]));
        for (int j = 0; j < b.size(); ++j) {
          long long pairing = beta(characteristic_flow(g, b.cycles[i]), characteristic_flow(dual, b.dual_cycles[j]));
          if (i == j) CHECK(std::abs(pairing) == 1);
          else CHECK(pairing == 0);
        }
      }
      // independence modulo the facial span, decided by the reference functionals
      oracle::FacialSpan span(g);
      std::vector<std::vector<long long>> rows;
      for (const auto& c : b.cycles) rows.push_back(span.classify(testref::walk_flow(g, c)));
      CHECK(rank_of(rows) == 2 * g.genus());
    }
  }

  TEST_CASE("homology coordinates") {
    for (const auto& name : torus_and_beyond()) {
      SurfaceMap g = fixtures::fixture(name).map;
      CycleBasis b = tree_cotree_basis(g);
      for (int i = 0; i < b.size(); ++i) {
        auto mu = homology_coordinates(g, characteristic_flow(g, b.cycles[i]), b);
        for (int j = 0; j < b.size(); ++j) CHECK(mu[j] == (i == j ? 1 : 0));
      }
      for (Face f = 0; f < g.num_faces(); ++f)
        for (auto v : homology_coordinates(g, facial_flow(g, f), b)) CHECK(v == 0);
    }
  }

  TEST_CASE("zero homology agrees with the reference span test") {
    std::mt19937 rng(7);
    for (const auto& name : torus_and_beyond()) {
      SurfaceMap g = fixtures::fixture(name).map;
      CycleBasis b = tree_cotree_basis(g);
      oracle::FacialSpan span(g);
      for (int trial = 0; trial < 40; ++trial) {
        Flow z(g.num_edges());
        for (Face f = 0; f < g.num_faces(); ++f) z += (static_cast<long long>(rng() % 3) - 1) * facial_flow(g, f);
        if (trial % 2 == 1) z += characteristic_flow(g, b.cycles[rng() % b.size()]);
        CHECK(is_circulation(g, z));
        const bool expect = span.contains(z.values());
        CHECK(is_zero_homologous(g, z) == expect);
        CHECK(try_face_potential(g, z).has_value() == expect);
      }
    }
  }

  TEST_CASE("face potential reconstructs the flow") {
    std::mt19937 rng(11);
    SurfaceMap g = fixtures::torus_grid(4, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long long> lambda(g.num_faces());
      for (auto& v : lambda) v = static_cast<long long>(rng() % 7) - 3;
      Flow z(g.num_edges());
      for (Face f = 0; f < g.num_faces(); ++f) z += lambda[f] * Flow(testref::walk_flow(g, g.faces()[f]));
      for (Face f0 = 0; f0 < g.num_faces(); f0 += 5) {
        FacePotential p = face_potential(g, z, f0);
        CHECK(p.lambda[f0] == 0);
        CHECK(flow_from_potential(g, p.lambda) == z);
        for (Face f = 0; f < g.num_faces(); ++f) CHECK(p.lambda[f] - lambda[f] == -lambda[f0]);
      }
    }
  }

  TEST_CASE("face potential failure carries a dual witness") {
    for (const auto& name : torus_and_beyond()) {
      SurfaceMap g = fixtures::fixture(name).map;
      CycleBasis b = tree_cotree_basis(g);
      SurfaceMap dual = g.dual();
      Flow z = characteristic_flow(g, b.cycles[0]);
      try {
        face_potential(g, z);
        FAIL("expected NotZeroHomologous");
      } catch (const NotZeroHomologousError& e) {
        CHECK(e.code() == ErrorCode::NotZeroHomologous);
        CHECK(e.pairing() != 0);
        CHECK(is_closed_walk(dual, e.witness()));
        CHECK(beta(z, characteristic_flow(dual, e.witness())) == e.pairing());
      }
    }
  }

  TEST_CASE("homologous flows") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    CycleBasis b = tree_cotree_basis(g);
    std::vector<Dart> row0 = {0, 6, 12}, row1 = {18, 24, 30};
    Flow p = characteristic_flow(g, row0), q = characteristic_flow(g, row1);
    CHECK(is_homologous(g, p, q, b.dual_cycles));
    CHECK_FALSE(is_homologous(g, p, -q, b.dual_cycles));
    CHECK(is_homologous(g, p + facial_flow(g, 3), p, b.dual_cycles));
    CHECK(is_zero_homologous(g, p - q));
  }

  TEST_CASE("dual facial walks") {
    SurfaceMap g = fixtures::torus_grid(3, 2);
    auto walks = dual_facial_walks(g);
    CHECK(static_cast<int>(walks.size()) == g.num_vertices());
    SurfaceMap dual = g.dual();
    for (const auto& w : walks) CHECK(is_closed_walk(dual, w));
    // a facial flow pairs to zero with every dual facial walk
    for (Face f = 0; f < g.num_faces(); ++f)
      for (const auto& w : walks) CHECK(beta(facial_flow(g, f), characteristic_flow(dual, w)) == 0);
  }
}
