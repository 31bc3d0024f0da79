#include "schnyder/fixtures.hpp"

#include <cstdio>

#include "schnyder/errors.hpp"

namespace schnyder::fixtures {

namespace {

SurfaceMap from_face_cycles(int darts, const std::vector<std::vector<Dart>>& faces) {
  std::vector<Dart> alpha(darts), next(darts, -1);
  for (Dart d = 0; d < darts; ++d) alpha[d] = d ^ 1;
  for (const auto& f : faces)
    for (size_t i = 0; i < f.size(); ++i) next[f[i]] = f[(i + 1) % f.size()];
  return SurfaceMap::from_faces(alpha, next);
}

}  // namespace

SurfaceMap torus_grid(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::DegenerateGrid, "grid sides must be positive");
  auto vid = [&](int i, int j) { return ((i % a) + a) % a + a * (((j % b) + b) % b); };
  auto fwd = [&](int i, int j, int t) { return 2 * (3 * vid(i, j) + t); };
  const int darts = 6 * a * b;
  std::vector<Dart> alpha(darts), sigma(darts);
  for (Dart d = 0; d < darts; ++d) alpha[d] = d ^ 1;
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < a; ++i) {
      const Dart ring[6] = {fwd(i, j, 0),         fwd(i, j, 2),         fwd(i, j, 1),
                            fwd(i - 1, j, 0) + 1, fwd(i - 1, j - 1, 2) + 1, fwd(i, j - 1, 1) + 1};
      for (int k = 0; k < 6; ++k) sigma[ring[k]] = ring[(k + 1) % 6];
    }
  }
  return SurfaceMap::build(alpha, sigma);
}

SurfaceMap gen_grid(int a, int b) {
  if (a < 3 || b < 3)
    throw Error(ErrorCode::DegenerateGrid, "grid " + std::to_string(a) + "x" + std::to_string(b) +
                                               " has contractible loops or double edges; use sides >= 3");
  return torus_grid(a, b);
}

SurfaceMap one_vertex_torus() { return SurfaceMap::build({1, 0, 3, 2}, {2, 3, 1, 0}); }

SurfaceMap double_torus_octagon() { return from_face_cycles(8, {{0, 2, 1, 3, 4, 6, 5, 7}}); }

SurfaceMap double_torus_fan() {
  const std::vector<Dart> side = {0, 2, 1, 3, 4, 6, 5, 7};
  // diagonal from the first corner to corner j: darts 8 + 2(j-2) outwards, +1 back
  auto out = [](int j) { return 8 + 2 * (j - 2); };
  std::vector<std::vector<Dart>> faces;
  faces.push_back({side[0], side[1], out(2) + 1});
  for (int j = 2; j < 6; ++j) faces.push_back({out(j), side[j], out(j + 1) + 1});
  faces.push_back({out(6), side[6], side[7]});
  return from_face_cycles(18, faces);
}

SurfaceMap double_torus_star() {
  const std::vector<Dart> side = {0, 2, 1, 3, 4, 6, 5, 7};
  // spoke from the center to corner k: dart 8 + 2k, back 9 + 2k
  std::vector<std::vector<Dart>> faces;
  for (int k = 0; k < 8; ++k) faces.push_back({side[k], 9 + 2 * ((k + 1) % 8), 8 + 2 * k});
  return from_face_cycles(24, faces);
}

namespace {

Fixture with_bits(std::string name, std::string description, SurfaceMap map, const std::string& bits) {
  Fixture f{std::move(name), std::move(description), true, std::move(map), std::nullopt};
  f.orientation = Orientation::from_bits(f.map, bits);
  return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"one-vertex-torus", "octagon",   "octagon-fan", "octagon-star", "fig5",  "fig5-left",
          "fig5-right",       "fig13",     "fig14",       "fig15",        "fig16", "grid-AxB"};
}

Fixture fixture(const std::string& name) {
  if (name == "one-vertex-torus") return {name, "torus with one vertex, two loops and one square face", false, one_vertex_torus(), {}};
  if (name == "octagon") return {name, "double torus from an octagon with sides identified", false, double_torus_octagon(), {}};
  if (name == "octagon-fan") return {name, "octagon double torus triangulated by a fan of diagonals", false, double_torus_fan(), {}};
  if (name == "octagon-star") return {name, "octagon double torus triangulated around a center vertex", false, double_torus_star(), {}};
  if (name == "fig5") return {name, "one-vertex toroidal triangulation with three loops", true, torus_grid(1, 1), {}};
  if (name == "fig5-left") return with_bits(name, "every loop in its reference direction, not Schnyder", torus_grid(1, 1), "000");
  if (name == "fig5-right") return with_bits(name, "diagonal loop reversed, Schnyder of type (0,0)", torus_grid(1, 1), "001");
  if (name == "fig13") return with_bits(name, "minimal wood of the 3x1 grid lattice, not half-crossing", torus_grid(3, 1), "100011110");
  if (name == "fig14") return with_bits(name, "half-crossing wood of the 3x1 grid that is not crossing", torus_grid(3, 1), "100011001");
  if (name == "fig15") return with_bits(name, "crossing wood of the 3x1 grid inside the twenty element lattice", torus_grid(3, 1), "001001001");
  if (name == "fig16") return with_bits(name, "rigid wood of the 3x1 grid with horizontal gamma 6", torus_grid(3, 1), "011011011");
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "grid-%dx%d%c", &a, &b, &tail) == 2)
    return {name, "triangulated torus grid", false, torus_grid(a, b), {}};
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace schnyder::fixtures
