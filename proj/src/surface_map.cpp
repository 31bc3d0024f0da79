#include "schnyder/surface_map.hpp"

#include <algorithm>
#include <numeric>

#include "schnyder/errors.hpp"

namespace schnyder {

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart d : p) {
    if (d < 0 || d >= static_cast<Dart>(p.size()) || seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

// Splits darts into orbits of `next`. Orbit ids follow the smallest dart and
// each orbit is listed starting from that dart.
void orbits(const std::vector<Dart>& next, std::vector<int>& id_of, std::vector<Dart>& order,
            std::vector<int>& start) {
  const int n = static_cast<int>(next.size());
  id_of.assign(n, -1);
  order.clear();
  start.assign(1, 0);
  int count = 0;
  for (Dart d = 0; d < n; ++d) {
    if (id_of[d] != -1) continue;
    Dart x = d;
    do {
      id_of[x] = count;
      order.push_back(x);
      x = next[x];
    } while (x != d);
    ++count;
    start.push_back(static_cast<int>(order.size()));
  }
}

}  // namespace

SurfaceMap SurfaceMap::build(std::vector<Dart> alpha, std::vector<Dart> sigma) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::NotPermutation, "alpha and sigma act on different dart sets");
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::NotInvolution, "dart count must be even and positive");
  for (Dart d = 0; d < n; ++d) {
    if (alpha[d] < 0 || alpha[d] >= n) throw Error(ErrorCode::NotInvolution, "alpha out of range at dart " + std::to_string(d));
    if (alpha[d] == d) throw Error(ErrorCode::FixedPointEdge, "alpha fixes dart " + std::to_string(d));
    if (alpha[alpha[d]] != d) throw Error(ErrorCode::NotInvolution, "alpha is not an involution at dart " + std::to_string(d));
  }
  if (!is_permutation_of_range(sigma)) throw Error(ErrorCode::NotPermutation, "sigma is not a permutation");

  SurfaceMap m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

  // connectivity under <alpha, sigma>
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart x : {m.alpha_[d], m.sigma_[d], m.sigma_inv_[d]}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "darts do not form a single connected map");

  orbits(m.sigma_, m.vertex_of_, m.vertex_order_, m.vertex_start_);
  std::vector<Dart> face_next(n);
  for (Dart d = 0; d < n; ++d) face_next[d] = m.sigma_inv_[m.alpha_[d]];
  orbits(face_next, m.face_of_, m.face_order_, m.face_start_);

  m.edge_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (m.edge_of_[d] != -1) continue;
    m.edge_of_[d] = m.edge_of_[m.alpha_[d]] = static_cast<int>(m.edge_lo_.size());
    m.edge_lo_.push_back(d);
  }

  const int chi = m.euler_characteristic();
  if (chi > 2 || (2 - chi) % 2 != 0)
    throw Error(ErrorCode::NegativeGenus, "Euler characteristic " + std::to_string(chi) + " is not 2-2g for integral g>=0");
  return m;
}

SurfaceMap SurfaceMap::from_faces(const std::vector<Dart>& alpha, const std::vector<Dart>& face_next) {
  // face_next = sigma^-1 . alpha, hence sigma = alpha . face_next^-1
  if (alpha.size() != face_next.size() || !is_permutation_of_range(face_next))
    throw Error(ErrorCode::NotPermutation, "face successor is not a permutation");
  const int n = static_cast<int>(alpha.size());
  std::vector<Dart> inv(n), sigma(n);
  for (Dart d = 0; d < n; ++d) inv[face_next[d]] = d;
  for (Dart d = 0; d < n; ++d) {
    if (alpha[inv[d]] < 0 || alpha[inv[d]] >= n) throw Error(ErrorCode::NotInvolution, "alpha out of range");
    sigma[d] = alpha[inv[d]];
  }
  return build(alpha, std::move(sigma));
}

bool SurfaceMap::is_triangulation() const {
  for (Face f = 0; f < num_faces(); ++f)
    if (face_degree(f) != 3) return false;
  return true;
}

SurfaceMap SurfaceMap::dual() const {
  // dual dart d leaves right(d); ccw around a face its boundary darts appear
  // in walk order, which gives sigma* = alpha . sigma^-1.
  std::vector<Dart> sigma(num_darts());
  for (Dart d = 0; d < num_darts(); ++d) sigma[d] = alpha_[sigma_inv_[d]];
  return build(alpha_, std::move(sigma));
}

std::vector<std::vector<Dart>> SurfaceMap::faces() const {
  std::vector<std::vector<Dart>> out;
  out.reserve(num_faces());
  for (Face f = 0; f < num_faces(); ++f) {
    auto s = face_darts(f);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

bool is_walk(const SurfaceMap& map, std::span<const Dart> walk) {
  for (Dart d : walk)
    if (d < 0 || d >= map.num_darts()) return false;
  for (size_t i = 1; i < walk.size(); ++i)
    if (map.target(walk[i - 1]) != map.origin(walk[i])) return false;
  return true;
}

bool is_closed_walk(const SurfaceMap& map, std::span<const Dart> walk) {
  if (!is_walk(map, walk)) return false;
  return walk.empty() || map.target(walk.back()) == map.origin(walk.front());
}

bool is_simple_cycle(const SurfaceMap& map, std::span<const Dart> walk) {
  if (walk.empty() || !is_closed_walk(map, walk)) return false;
  std::vector<char> vseen(map.num_vertices(), 0), eseen(map.num_edges(), 0);
  for (Dart d : walk) {
    if (vseen[map.origin(d)] || eseen[map.edge(d)]) return false;
    vseen[map.origin(d)] = 1;
    eseen[map.edge(d)] = 1;
  }
  return true;
}

std::vector<Dart> reversed_walk(const SurfaceMap& map, std::span<const Dart> walk) {
  std::vector<Dart> out;
  out.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) out.push_back(map.alpha(*it));
  return out;
}

Orientation Orientation::reference(const SurfaceMap& map) {
  std::vector<Dart> tails(map.num_edges());
  for (Edge e = 0; e < map.num_edges(); ++e) tails[e] = map.lo(e);
  return Orientation(std::move(tails));
}

Orientation Orientation::from_bits(const SurfaceMap& map, const std::string& bits) {
  if (static_cast<int>(bits.size()) != map.num_edges())
    throw Error(ErrorCode::DimensionMismatch, "bit string length differs from edge count");
  Orientation o = reference(map);
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (bits[e] == '1') o.reverse(map, e);
  return o;
}

std::vector<int> Orientation::outdegrees(const SurfaceMap& map) const {
  std::vector<int> out(map.num_vertices(), 0);
  for (Dart t : tail_) ++out[map.origin(t)];
  return out;
}

std::string Orientation::bits(const SurfaceMap& map) const {
  std::string s(tail_.size(), '0');
  for (size_t e = 0; e < tail_.size(); ++e)
    if (map.sign(tail_[e]) < 0) s[e] = '1';
  return s;
}

bool is_valid_orientation(const SurfaceMap& map, const Orientation& d) {
  if (d.size() != map.num_edges()) return false;
  for (Edge e = 0; e < map.num_edges(); ++e) {
    Dart t = d.tail(e);
    if (t < 0 || t >= map.num_darts() || map.edge(t) != e) return false;
  }
  return true;
}

namespace {

// Darts strictly between `from` and `to` turning counterclockwise at their common origin.
void ccw_between(const SurfaceMap& map, Dart from, Dart to, std::vector<Dart>& out) {
  for (Dart x = map.sigma(from); x != to; x = map.sigma(x)) out.push_back(x);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Dart> darts_left_of(const SurfaceMap& map, std::span<const Dart> cycle) {
  std::vector<Dart> out;
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i) ccw_between(map, cycle[i], map.alpha(cycle[(i + k - 1) % k]), out);
  return out;
}

std::vector<Dart> darts_right_of(const SurfaceMap& map, std::span<const Dart> cycle) {
  std::vector<Dart> out;
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i) ccw_between(map, map.alpha(cycle[(i + k - 1) % k]), cycle[i], out);
  return out;
}

CycleSides cut_along_cycle(const SurfaceMap& map, std::span<const Dart> cycle) {
  if (!is_simple_cycle(map, cycle)) throw Error(ErrorCode::NotACycle, "cutting requires a simple cycle");
  std::vector<char> on_cycle(map.num_edges(), 0), vertex_on(map.num_vertices(), 0);
  for (Dart d : cycle) {
    on_cycle[map.edge(d)] = 1;
    vertex_on[map.origin(d)] = 1;
  }
  UnionFind uf(map.num_faces());
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (!on_cycle[e]) uf.unite(map.left(map.lo(e)), map.right(map.lo(e)));

  const int left_root = uf.find(map.left(cycle[0]));
  const int right_root = uf.find(map.right(cycle[0]));
  CycleSides sides;
  sides.separating = left_root != right_root;
  const int k = static_cast<int>(cycle.size());

  auto piece_euler = [&](int root) {
    int faces = 0, edges = k, vertices = k;
    for (Face f = 0; f < map.num_faces(); ++f)
      if (uf.find(f) == root) ++faces;
    for (Edge e = 0; e < map.num_edges(); ++e)
      if (!on_cycle[e] && uf.find(map.left(map.lo(e))) == root) ++edges;
    for (Vertex v = 0; v < map.num_vertices(); ++v)
      if (!vertex_on[v] && uf.find(map.left(map.vertex_darts(v)[0])) == root) ++vertices;
    return vertices - edges + faces;
  };

  for (Face f = 0; f < map.num_faces(); ++f) {
    if (uf.find(f) == left_root) sides.left_faces.push_back(f);
    if (uf.find(f) == right_root) sides.right_faces.push_back(f);
  }
  if (sides.separating) {
    sides.left_euler = piece_euler(left_root);
    sides.right_euler = piece_euler(right_root);
  } else {
    sides.left_euler = sides.right_euler = map.euler_characteristic();
  }
  return sides;
}

}  // namespace schnyder
