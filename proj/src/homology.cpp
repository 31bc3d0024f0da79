#include "schnyder/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "schnyder/errors.hpp"

namespace schnyder {

bool Flow::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](long long v) { return v == 0; });
}

int Flow::support_size() const {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(), [](long long v) { return v != 0; }));
}

Flow& Flow::operator+=(const Flow& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "flows over different edge sets");
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Flow& Flow::operator-=(const Flow& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "flows over different edge sets");
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Flow Flow::operator-() const { return -1 * *this; }

Flow characteristic_flow(const SurfaceMap& map, std::span<const Dart> walk) {
  Flow f(map.num_edges());
  for (Dart d : walk) f[map.edge(d)] += map.sign(d);
  return f;
}

Flow orientation_flow(const SurfaceMap& map, const Orientation& d) {
  Flow f(map.num_edges());
  for (Edge e = 0; e < map.num_edges(); ++e) f[e] = d.sign(map, e);
  return f;
}

Flow facial_flow(const SurfaceMap& map, Face f) { return characteristic_flow(map, map.face_darts(f)); }

bool is_circulation(const SurfaceMap& map, const Flow& z) {
  if (z.size() != map.num_edges()) return false;
  for (Vertex v = 0; v < map.num_vertices(); ++v) {
    long long net = 0;
    for (Dart d : map.vertex_darts(v)) net += map.sign(d) * z[map.edge(d)];
    if (net != 0) return false;
  }
  return true;
}

long long beta(const Flow& p, const Flow& d) {
  if (p.size() != d.size()) throw Error(ErrorCode::DimensionMismatch, "beta needs flows on dual edge sets of equal size");
  long long s = 0;
  for (int e = 0; e < p.size(); ++e) s += p[e] * d[e];
  return s;
}

namespace {

// BFS spanning tree over a node set given by dart ownership. up[x] is the
// dart leaving x towards its parent (-1 at the root).
struct SpanningTree {
  std::vector<Dart> up;
  std::vector<int> depth;
};

SpanningTree bfs_tree(int nodes, int root, const std::function<std::vector<Dart>(int)>& darts_out,
                      const std::function<int(Dart)>& head, const std::function<bool(Dart)>& allowed) {
  SpanningTree t;
  t.up.assign(nodes, -1);
  t.depth.assign(nodes, -1);
  t.depth[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (Dart d : darts_out(x)) {
      if (!allowed(d)) continue;
      int y = head(d);
      if (t.depth[y] != -1) continue;
      t.depth[y] = t.depth[x] + 1;
      t.up[y] = d;  // dart entering y; reversed later
      queue.push_back(y);
    }
  }
  return t;
}

// Path of darts from a to b inside the tree.
std::vector<Dart> tree_path(const SurfaceMap& map, const SpanningTree& t, int a, int b,
                            const std::function<int(Dart)>& tail) {
  std::vector<Dart> from_a, from_b;  // entering darts, climbed upward
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      from_a.push_back(t.up[a]);
      a = tail(t.up[a]);
    } else {
      from_b.push_back(t.up[b]);
      b = tail(t.up[b]);
    }
  }
  std::vector<Dart> path;
  for (Dart d : from_a) path.push_back(map.alpha(d));
  for (auto it = from_b.rbegin(); it != from_b.rend(); ++it) path.push_back(*it);
  return path;
}

}  // namespace

CycleBasis tree_cotree_basis(const SurfaceMap& map, Vertex root, Face dual_root) {
  const int m = map.num_edges();
  std::vector<char> in_tree(m, 0), in_cotree(m, 0);

  auto primal_out = [&](int v) {
    auto s = map.vertex_darts(v);
    return std::vector<Dart>(s.begin(), s.end());
  };
  auto primal_head = [&](Dart d) { return map.target(d); };
  auto primal_tail = [&](Dart d) { return map.origin(d); };
  SpanningTree tree = bfs_tree(map.num_vertices(), root, primal_out, primal_head, [](Dart) { return true; });
  for (int v = 0; v < map.num_vertices(); ++v)
    if (tree.up[v] != -1) in_tree[map.edge(tree.up[v])] = 1;

  // dual dart d runs from right(d) to left(d)
  auto dual_out = [&](int f) {
    std::vector<Dart> out;
    for (Dart x : map.face_darts(f)) out.push_back(map.alpha(x));
    return out;
  };
  auto dual_head = [&](Dart d) { return map.left(d); };
  auto dual_tail = [&](Dart d) { return map.right(d); };
  SpanningTree cotree = bfs_tree(map.num_faces(), dual_root, dual_out, dual_head,
                                 [&](Dart d) { return !in_tree[map.edge(d)]; });
  for (int f = 0; f < map.num_faces(); ++f)
    if (cotree.up[f] != -1) in_cotree[map.edge(cotree.up[f])] = 1;

  CycleBasis basis;
  for (Edge e = 0; e < m; ++e) {
    if (in_tree[e]) basis.tree_edges.push_back(e);
    else if (in_cotree[e]) basis.cotree_edges.push_back(e);
    else basis.leftover_edges.push_back(e);
  }
  for (Edge e : basis.leftover_edges) {
    Dart d = map.lo(e);
    std::vector<Dart> cycle{d};
    auto back = tree_path(map, tree, map.target(d), map.origin(d), primal_tail);
    cycle.insert(cycle.end(), back.begin(), back.end());
    basis.cycles.push_back(std::move(cycle));

    std::vector<Dart> dual_cycle{d};
    auto dual_back = tree_path(map, cotree, map.left(d), map.right(d), dual_tail);
    dual_cycle.insert(dual_cycle.end(), dual_back.begin(), dual_back.end());
    basis.dual_cycles.push_back(std::move(dual_cycle));
  }
  return basis;
}

std::vector<std::vector<Dart>> dual_facial_walks(const SurfaceMap& map) {
  std::vector<std::vector<Dart>> out;
  for (Vertex v = 0; v < map.num_vertices(); ++v) {
    auto s = map.vertex_darts(v);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

bool is_homologous(const SurfaceMap& map, const Flow& p, const Flow& q,
                   const std::vector<std::vector<Dart>>& dual_basis) {
  Flow z = p - q;
  for (const auto& w : dual_facial_walks(map))
    if (beta(z, characteristic_flow(map, w)) != 0) return false;
  for (const auto& w : dual_basis)
    if (beta(z, characteristic_flow(map, w)) != 0) return false;
  return true;
}

namespace {

struct PotentialRun {
  std::vector<long long> lambda;
  std::vector<Dart> parent;  // dual dart entering the face
  Dart bad = -1;             // dual dart violating consistency
};

PotentialRun propagate(const SurfaceMap& map, const Flow& z, Face f0) {
  if (z.size() != map.num_edges()) throw Error(ErrorCode::DimensionMismatch, "flow size differs from edge count");
  if (f0 < 0 || f0 >= map.num_faces()) throw Error(ErrorCode::InvalidArgument, "root face out of range");
  PotentialRun run;
  run.lambda.assign(map.num_faces(), 0);
  run.parent.assign(map.num_faces(), -1);
  std::vector<char> seen(map.num_faces(), 0);
  seen[f0] = 1;
  std::deque<Face> queue{f0};
  while (!queue.empty()) {
    Face a = queue.front();
    queue.pop_front();
    for (Dart x : map.face_darts(a)) {
      Dart d = map.alpha(x);  // dual dart leaving a
      Face b = map.left(d);
      long long want = run.lambda[a] + map.sign(d) * z[map.edge(d)];
      if (!seen[b]) {
        seen[b] = 1;
        run.lambda[b] = want;
        run.parent[b] = d;
        queue.push_back(b);
      } else if (run.lambda[b] != want && run.bad == -1) {
        run.bad = d;
      }
    }
  }
  return run;
}

}  // namespace

std::optional<FacePotential> try_face_potential(const SurfaceMap& map, const Flow& z, Face f0) {
  PotentialRun run = propagate(map, z, f0);
  if (run.bad != -1) return std::nullopt;
  return FacePotential{f0, std::move(run.lambda)};
}

FacePotential face_potential(const SurfaceMap& map, const Flow& z, Face f0) {
  PotentialRun run = propagate(map, z, f0);
  if (run.bad == -1) return FacePotential{f0, std::move(run.lambda)};

  Dart d = run.bad;
  std::vector<Dart> to_a;
  for (Face f = map.right(d); f != f0; f = map.right(run.parent[f])) to_a.push_back(run.parent[f]);
  std::reverse(to_a.begin(), to_a.end());
  std::vector<Dart> witness = to_a;
  witness.push_back(d);
  for (Face f = map.left(d); f != f0; f = map.right(run.parent[f])) witness.push_back(map.alpha(run.parent[f]));
  long long pairing = beta(z, characteristic_flow(map, witness));
  throw NotZeroHomologousError(std::move(witness), pairing);
}

Flow flow_from_potential(const SurfaceMap& map, const std::vector<long long>& lambda) {
  Flow z(map.num_edges());
  for (Edge e = 0; e < map.num_edges(); ++e) z[e] = lambda[map.left(map.lo(e))] - lambda[map.right(map.lo(e))];
  return z;
}

bool is_zero_homologous(const SurfaceMap& map, const Flow& z) { return try_face_potential(map, z).has_value(); }

std::vector<long long> homology_coordinates(const SurfaceMap& map, const Flow& z, const CycleBasis& basis) {
  if (!is_circulation(map, z)) throw Error(ErrorCode::NotCirculation, "homology coordinates need a circulation");
  std::vector<long long> mu;
  for (int i = 0; i < basis.size(); ++i) {
    Flow dual = characteristic_flow(map, basis.dual_cycles[i]);
    long long unit = beta(characteristic_flow(map, basis.cycles[i]), dual);  // +-1
    mu.push_back(beta(z, dual) * unit);
  }
  return mu;
}

}  // namespace schnyder
