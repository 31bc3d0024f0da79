#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "schnyder/errors.hpp"
#include "schnyder/fixtures.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

using namespace schnyder;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("surface_map") {
  TEST_CASE("build rejects malformed permutations") {
    CHECK(code_of([] { SurfaceMap::build({1, 0, 2, 3}, {0, 1, 2, 3}); }) == ErrorCode::FixedPointEdge);
    CHECK(code_of([] { SurfaceMap::build({1, 2, 0, 3}, {0, 1, 2, 3}); }) == ErrorCode::NotInvolution);
    CHECK(code_of([] { SurfaceMap::build({1, 0}, {0, 0}); }) == ErrorCode::NotPermutation);
    CHECK(code_of([] { SurfaceMap::build({1, 0, 3, 2}, {1, 0, 3, 2}); }) == ErrorCode::Disconnected);
  }

  TEST_CASE("single loop with rotation (d0 d1) is a planar map") {
    SurfaceMap m = SurfaceMap::build({1, 0}, {1, 0});
    CHECK(m.num_vertices() == 1);
    CHECK(m.num_faces() == 2);
    CHECK(m.genus() == 0);
    AssumptionReport r = validate_assumptions(m);
    CHECK(r.contractible_loops == std::vector<Edge>{0});
  }

  TEST_CASE("grid counts") {
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        SurfaceMap g = fixtures::torus_grid(a, b);
        CHECK(g.num_vertices() == a * b);
        CHECK(g.num_edges() == 3 * a * b);
        CHECK(g.num_faces() == 2 * a * b);
        CHECK(g.genus() == 1);
        CHECK(g.is_triangulation());
        CHECK(testref::vertices(g) == g.num_vertices());
        CHECK(testref::faces(g) == g.num_faces());
      }
    SurfaceMap g = fixtures::torus_grid(3, 3);
    CHECK(g.faces().size() == 18);
  }

  TEST_CASE("gen grid rejects small sides") {
    CHECK(code_of([] { fixtures::gen_grid(1, 1); }) == ErrorCode::DegenerateGrid);
    CHECK(code_of([] { fixtures::gen_grid(2, 5); }) == ErrorCode::DegenerateGrid);
    SurfaceMap g = fixtures::gen_grid(4, 3);
    CHECK(g.num_edges() == 36);
    CHECK(g.is_triangulation());
  }

  TEST_CASE("facial walks cover every dart once") {
    for (const auto& name : {"one-vertex-torus", "octagon", "octagon-fan", "octagon-star", "fig5", "grid-3x1"}) {
      SurfaceMap g = fixtures::fixture(name).map;
      std::vector<int> hits(g.num_darts(), 0);
      int total = 0;
      for (const auto& w : g.faces()) {
        CHECK(is_closed_walk(g, w));
        for (Dart d : w) ++hits[d];
        total += static_cast<int>(w.size());
      }
      CHECK(total == g.num_darts());
      for (int h : hits) CHECK(h == 1);
      int degree_sum = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
      CHECK(degree_sum == g.num_darts());
    }
  }

  TEST_CASE("one-vertex torus has one square face") {
    SurfaceMap g = fixtures::one_vertex_torus();
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_faces() == 1);
    CHECK(g.face_degree(0) == 4);
    CHECK(g.genus() == 1);
    CHECK_FALSE(g.is_triangulation());
    // hand trace: 0 -> sigma^-1(1) = 2 -> sigma^-1(3) = 1 -> sigma^-1(0) = 3 -> sigma^-1(2) = 0
    auto face = g.faces()[0];
    CHECK(face == std::vector<Dart>{0, 2, 1, 3});
  }

  TEST_CASE("octagon has one face of degree 8") {
    SurfaceMap g = fixtures::double_torus_octagon();
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 4);
    CHECK(g.num_faces() == 1);
    CHECK(g.face_degree(0) == 8);
    CHECK(g.genus() == 2);
    CHECK_FALSE(g.is_triangulation());
  }

  TEST_CASE("double torus triangulations meet the edge formula") {
    for (SurfaceMap g : {fixtures::double_torus_fan(), fixtures::double_torus_star()}) {
      CHECK(g.genus() == 2);
      CHECK(g.is_triangulation());
      CHECK(g.num_edges() == 3 * g.num_vertices() + 6 * (g.genus() - 1));
      CHECK(validate_assumptions(g).ok());
    }
  }

  TEST_CASE("dual swaps counts and keeps genus") {
    for (const auto& name : {"one-vertex-torus", "octagon", "octagon-star", "fig5", "grid-3x3", "grid-4x2"}) {
      SurfaceMap g = fixtures::fixture(name).map;
      SurfaceMap d = g.dual();
      CHECK(d.num_vertices() == g.num_faces());
      CHECK(d.num_faces() == g.num_vertices());
      CHECK(d.num_edges() == g.num_edges());
      CHECK(d.genus() == g.genus());
      SurfaceMap dd = d.dual();
      CHECK(testref::isomorphic(dd, g));
      // dual rotation is alpha after sigma^-1
      for (Dart x = 0; x < g.num_darts(); ++x) CHECK(d.sigma(x) == g.alpha(g.sigma_inv(x)));
    }
  }

  TEST_CASE("dual darts run from the right face to the left face") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    SurfaceMap d = g.dual();
    for (Dart x = 0; x < g.num_darts(); ++x) {
      // the dual origin of x is the face orbit containing alpha(x)
      auto fw = g.face_darts(g.right(x));
      CHECK(std::find(fw.begin(), fw.end(), g.alpha(x)) != fw.end());
      CHECK(d.degree(d.origin(x)) == g.face_degree(g.right(x)));
    }
  }

  TEST_CASE("one-vertex torus is self dual") {
    SurfaceMap g = fixtures::one_vertex_torus();
    CHECK(testref::isomorphic(g, g.dual()));
    SurfaceMap grid = fixtures::torus_grid(3, 3);
    CHECK_FALSE(testref::isomorphic(grid, grid.dual()));
  }

  TEST_CASE("walk helpers") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    std::vector<Dart> horizontal = {0, 6, 12};
    CHECK(is_walk(g, horizontal));
    CHECK(is_closed_walk(g, horizontal));
    CHECK(is_simple_cycle(g, horizontal));
    auto back = reversed_walk(g, horizontal);
    CHECK(is_simple_cycle(g, back));
    std::vector<Dart> broken = {0, 12};
    CHECK_FALSE(is_walk(g, broken));
  }

  TEST_CASE("orientations") {
    SurfaceMap g = fixtures::torus_grid(3, 2);
    Orientation r = Orientation::reference(g);
    CHECK(r.bits(g) == std::string(g.num_edges(), '0'));
    Orientation o = Orientation::from_bits(g, "101000000000000001");
    CHECK(o.bits(g) == "101000000000000001");
    CHECK(is_valid_orientation(g, o));
    o.reverse(g, 0);
    CHECK(o.bits(g)[0] == '0');
    int total = 0;
    for (int d : o.outdegrees(g)) total += d;
    CHECK(total == g.num_edges());
  }

  TEST_CASE("assumption report on fixtures") {
    CHECK(validate_assumptions(fixtures::one_vertex_torus()).ok());
    CHECK(validate_assumptions(fixtures::torus_grid(1, 1)).ok());
    CHECK(validate_assumptions(fixtures::torus_grid(3, 1)).ok());
    CHECK(validate_assumptions(fixtures::double_torus_octagon()).ok());
    // the 2x1 grid has parallel edges whose 2-cycles are not contractible
    CHECK(validate_assumptions(fixtures::torus_grid(2, 1)).ok());
  }

  TEST_CASE("parallel edges around a non-contractible cycle are not flagged") {
    SurfaceMap g = fixtures::torus_grid(2, 3);
    // horizontal edges of row 0 join the two vertices of that row twice
    std::vector<Dart> cycle = {0, 6};
    REQUIRE(is_simple_cycle(g, cycle));
    CHECK_FALSE(is_contractible_cycle(g, cycle));
    auto basis = tree_cotree_basis(g);
    auto mu = homology_coordinates(g, characteristic_flow(g, cycle), basis);
    int nonzero = 0;
    for (auto v : mu) nonzero += v != 0;
    CHECK(nonzero == 1);
  }

  TEST_CASE("contractible loop and digon are flagged") {
    // a torus with a loop bounding a disk glued inside its single face:
    // grid(1,1) plus a loop inserted in one corner
    SurfaceMap base = fixtures::torus_grid(1, 1);
    std::vector<Dart> alpha = base.alpha_perm(), sigma = base.sigma_perm();
    const Dart a = 6, b = 7;
    alpha.push_back(b);
    alpha.push_back(a);
    alpha[a] = b;
    alpha[b] = a;
    // insert a then b after dart 0 in the rotation
    Dart after = sigma[0];
    sigma.push_back(0);
    sigma.push_back(0);
    sigma[0] = a;
    sigma[a] = b;
    sigma[b] = after;
    SurfaceMap m = SurfaceMap::build(alpha, sigma);
    CHECK(m.genus() == 1);
    AssumptionReport r = validate_assumptions(m);
    CHECK(r.contractible_loops == std::vector<Edge>{3});
    std::vector<Dart> loop = {a};
    CHECK(is_contractible_cycle(m, loop));
  }

  TEST_CASE("cutting along a face boundary gives a disk side") {
    SurfaceMap g = fixtures::torus_grid(3, 3);
    for (Face f = 0; f < g.num_faces(); ++f) {
      auto walk = g.face_darts(f);
      CycleSides s = cut_along_cycle(g, walk);
      CHECK(s.separating);
      CHECK(s.left_is_disk());
      CHECK(s.left_faces == std::vector<Face>{f});
      CHECK(s.right_euler == -1);
    }
    std::vector<Dart> horizontal = {0, 6, 12};
    CHECK_FALSE(cut_along_cycle(g, horizontal).separating);
  }
}
