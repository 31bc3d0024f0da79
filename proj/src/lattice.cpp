#include "schnyder/lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "schnyder/errors.hpp"

namespace schnyder {

namespace {

int mod3(long long x) { return static_cast<int>(((x % 3) + 3) % 3); }

Orientation orientation_from_flow(const SurfaceMap& map, const Flow& f) {
  std::vector<Dart> tails(map.num_edges());
  for (Edge e = 0; e < map.num_edges(); ++e) {
    if (f[e] != 1 && f[e] != -1) throw Error(ErrorCode::InvalidArgument, "flow is not an orientation");
    tails[e] = f[e] > 0 ? map.lo(e) : map.hi(e);
  }
  return Orientation(std::move(tails));
}

// Potential of D_base \ D relative to f0; empty when not homologous.
std::optional<FacePotential> relative_potential(const SurfaceMap& map, const Orientation& base, const Orientation& d, Face f0) {
  return try_face_potential(map, diff(map, base, d), f0);
}

}  // namespace

Flow diff(const SurfaceMap& map, const Orientation& d, const Orientation& d2) {
  if (d.size() != map.num_edges() || d2.size() != map.num_edges())
    throw Error(ErrorCode::DimensionMismatch, "orientations over different edge sets");
  Flow t(map.num_edges());
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (d.tail(e) != d2.tail(e)) t[e] = d.sign(map, e);
  return t;
}

bool is_partitionable(const SurfaceMap& map, const Flow& t, const std::vector<std::vector<Dart>>& dual_basis) {
  for (const auto& w : dual_facial_walks(map))
    if (mod3(beta(t, characteristic_flow(map, w))) != 0) return false;
  for (const auto& w : dual_basis)
    if (mod3(beta(t, characteristic_flow(map, w))) != 0) return false;
  return true;
}

std::optional<std::array<Flow, 3>> tutte_partition(const SurfaceMap& map, const Flow& t) {
  std::vector<int> label(map.num_faces(), -1);
  label[0] = 0;
  std::deque<Face> queue{0};
  while (!queue.empty()) {
    Face a = queue.front();
    queue.pop_front();
    for (Dart x : map.face_darts(a)) {
      Dart d = map.alpha(x);
      Face b = map.left(d);
      int want = mod3(label[a] + map.sign(d) * t[map.edge(d)]);
      if (label[b] == -1) {
        label[b] = want;
        queue.push_back(b);
      } else if (label[b] != want) {
        return std::nullopt;
      }
    }
  }
  std::array<Flow, 3> parts{Flow(map.num_edges()), Flow(map.num_edges()), Flow(map.num_edges())};
  for (Edge e = 0; e < map.num_edges(); ++e) {
    if (t[e] == 0) continue;
    Dart along = t[e] > 0 ? map.lo(e) : map.hi(e);
    parts[mod3(label[map.left(along)] + 1)][e] = t[e];
  }
  return parts;
}

bool is_eulerian(const SurfaceMap& map, const Flow& t) { return is_circulation(map, t); }

bool is_eulerian_partitionable(const SurfaceMap& map, const Flow& t, const std::vector<std::vector<Dart>>& dual_basis) {
  if (!is_partitionable(map, t, dual_basis) || !is_eulerian(map, t)) return false;
  auto parts = tutte_partition(map, t);
  if (!parts) return false;
  for (const Flow& p : *parts)
    if (!is_eulerian(map, p)) return false;
  return is_zero_homologous(map, (*parts)[0] - (*parts)[1]) && is_zero_homologous(map, (*parts)[1] - (*parts)[2]);
}

bool is_zero_homologous_diff(const SurfaceMap& map, const Flow& t) { return is_zero_homologous(map, t); }

ReducedGraph rigid_edges(const SurfaceMap& map, const Orientation& d0, Face f0) {
  const int f = map.num_faces();
  // lambda_L - lambda_R lies in [0,1] or [-1,0]; arcs carry the upper bounds
  // of the corresponding difference constraints.
  struct Arc {
    Face to;
    int w;
  };
  std::vector<std::vector<Arc>> arcs(f);
  for (Edge e = 0; e < map.num_edges(); ++e) {
    Face l = map.left(map.lo(e)), r = map.right(map.lo(e));
    if (d0.sign(map, e) > 0) {
      arcs[r].push_back({l, 1});
      arcs[l].push_back({r, 0});
    } else {
      arcs[r].push_back({l, 0});
      arcs[l].push_back({r, 1});
    }
  }
  auto distances = [&](Face src) {
    std::vector<int> dist(f, std::numeric_limits<int>::max());
    std::deque<Face> dq{src};
    dist[src] = 0;
    while (!dq.empty()) {
      Face x = dq.front();
      dq.pop_front();
      for (const Arc& a : arcs[x]) {
        if (dist[x] + a.w < dist[a.to]) {
          dist[a.to] = dist[x] + a.w;
          if (a.w == 0) dq.push_front(a.to);
          else dq.push_back(a.to);
        }
      }
    }
    return dist;
  };
  std::vector<std::vector<int>> dist(f);
  ReducedGraph red;
  red.f0 = f0;
  red.rigid.assign(map.num_edges(), 0);
  for (Edge e = 0; e < map.num_edges(); ++e) {
    Face l = map.left(map.lo(e)), r = map.right(map.lo(e));
    // largest feasible move of lambda_L - lambda_R in the direction that reverses e
    Face from = d0.sign(map, e) > 0 ? r : l;
    Face to = d0.sign(map, e) > 0 ? l : r;
    if (dist[from].empty()) dist[from] = distances(from);
    if (dist[from][to] < 1) red.rigid[e] = 1;
  }

  std::vector<int> parent(f);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (red.rigid[e]) parent[find(map.left(map.lo(e)))] = find(map.right(map.lo(e)));
  red.reduced_of.assign(f, -1);
  std::vector<int> id_of_root(f, -1);
  for (Face x = 0; x < f; ++x) {
    int root = find(x);
    if (id_of_root[root] == -1) {
      id_of_root[root] = red.size();
      red.members.emplace_back();
      red.boundary.emplace_back(map.num_edges());
    }
    int id = id_of_root[root];
    red.reduced_of[x] = id;
    red.members[id].push_back(x);
    red.boundary[id] += facial_flow(map, x);
  }
  red.root = red.reduced_of[f0];
  return red;
}

bool can_flip(const SurfaceMap& map, const ReducedGraph& r, const Orientation& d, int face, FlipDirection dir) {
  if (face == r.root) return false;
  const Flow& b = r.boundary[face];
  bool any = false;
  const int want = dir == FlipDirection::Up ? 1 : -1;
  for (Edge e = 0; e < map.num_edges(); ++e) {
    if (b[e] == 0) continue;
    any = true;
    if (d.sign(map, e) != want * b[e]) return false;
  }
  return any;
}

Orientation flip(const SurfaceMap& map, const ReducedGraph& r, const Orientation& d, int face, FlipDirection dir) {
  if (face == r.root) throw Error(ErrorCode::ForbiddenRootFace, "the reduced face containing f0 cannot be flipped");
  if (!can_flip(map, r, d, face, dir)) throw Error(ErrorCode::NotDirected, "reduced face boundary is not directed as required");
  Orientation out = d;
  const Flow& b = r.boundary[face];
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (b[e] != 0) out.reverse(map, e);
  return out;
}

int HasseDiagram::find(const SurfaceMap& map, const Orientation& d) const {
  auto it = index.find(d.bits(map));
  return it == index.end() ? -1 : it->second;
}

HasseDiagram enumerate_lattice(const SurfaceMap& map, const Orientation& d0, Face f0, int max_nodes) {
  HasseDiagram h;
  h.reduced = rigid_edges(map, d0, f0);
  auto add = [&](const Orientation& d) {
    std::string key = d.bits(map);
    auto it = h.index.find(key);
    if (it != h.index.end()) return it->second;
    if (static_cast<int>(h.nodes.size()) >= max_nodes)
      throw Error(ErrorCode::BudgetExceeded, "lattice has more than " + std::to_string(max_nodes) + " nodes");
    int id = static_cast<int>(h.nodes.size());
    h.index.emplace(std::move(key), id);
    h.nodes.push_back(d);
    h.up.emplace_back();
    h.down.emplace_back();
    return id;
  };
  add(d0);
  for (size_t x = 0; x < h.nodes.size(); ++x) {
    for (int face = 0; face < h.reduced.size(); ++face) {
      if (can_flip(map, h.reduced, h.nodes[x], face, FlipDirection::Up)) {
        int y = add(flip(map, h.reduced, h.nodes[x], face, FlipDirection::Up));
        int arc = static_cast<int>(h.arcs.size());
        h.arcs.push_back({static_cast<int>(x), y, face});
        h.up[x].push_back(arc);
        h.down[y].push_back(arc);
      }
      if (can_flip(map, h.reduced, h.nodes[x], face, FlipDirection::Down))
        add(flip(map, h.reduced, h.nodes[x], face, FlipDirection::Down));
    }
  }
  return h;
}

std::pair<int, int> extremes(const HasseDiagram& h) {
  int lo = -1, hi = -1;
  for (int x = 0; x < static_cast<int>(h.nodes.size()); ++x) {
    if (h.down[x].empty() && lo == -1) lo = x;
    if (h.up[x].empty() && hi == -1) hi = x;
  }
  return {lo, hi};
}

namespace {

Orientation greedy(const SurfaceMap& map, const ReducedGraph& r, Orientation d, FlipDirection dir) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int face = 0; face < r.size(); ++face) {
      if (can_flip(map, r, d, face, dir)) {
        d = flip(map, r, d, face, dir);
        moved = true;
      }
    }
  }
  return d;
}

}  // namespace

Orientation greedy_minimum(const SurfaceMap& map, const ReducedGraph& r, Orientation d) {
  return greedy(map, r, std::move(d), FlipDirection::Down);
}

Orientation greedy_maximum(const SurfaceMap& map, const ReducedGraph& r, Orientation d) {
  return greedy(map, r, std::move(d), FlipDirection::Up);
}

bool lattice_leq(const SurfaceMap& map, const Orientation& d, const Orientation& d2, Face f0) {
  auto p = relative_potential(map, d, d2, f0);
  if (!p) return false;
  return std::all_of(p->lambda.begin(), p->lambda.end(), [](long long v) { return v >= 0; });
}

namespace {

Orientation combine(const SurfaceMap& map, const Orientation& d1, const Orientation& d2, Face f0, bool take_max) {
  auto p = relative_potential(map, d1, d2, f0);
  if (!p) throw Error(ErrorCode::NotHomologous, "orientations are not homologous");
  std::vector<long long> lambda = p->lambda;
  for (auto& v : lambda) v = take_max ? std::max(0LL, v) : std::min(0LL, v);
  Flow f = orientation_flow(map, d1) - 2 * flow_from_potential(map, lambda);
  return orientation_from_flow(map, f);
}

}  // namespace

Orientation meet(const SurfaceMap& map, const Orientation& d1, const Orientation& d2, Face f0) {
  return combine(map, d1, d2, f0, false);
}

Orientation join(const SurfaceMap& map, const Orientation& d1, const Orientation& d2, Face f0) {
  return combine(map, d1, d2, f0, true);
}

HasseCheck check_hasse_axioms(const HasseDiagram& h) {
  HasseCheck c;
  const int n = static_cast<int>(h.nodes.size());
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto* list : {&h.up[x], &h.down[x]})
      for (int a : *list) {
        int y = h.arcs[a].from == x ? h.arcs[a].to : h.arcs[a].from;
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
  }
  c.connected = reached == n;
  // acyclicity by peeling sources
  std::vector<int> indeg(n);
  for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(h.down[x].size());
  std::vector<int> ready;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  int peeled = 0;
  while (!ready.empty()) {
    int x = ready.back();
    ready.pop_back();
    ++peeled;
    for (int a : h.up[x])
      if (--indeg[h.arcs[a].to] == 0) ready.push_back(h.arcs[a].to);
  }
  c.acyclic = peeled == n;
  int sources = 0, sinks = 0;
  for (int x = 0; x < n; ++x) {
    sources += h.down[x].empty();
    sinks += h.up[x].empty();
  }
  c.unique_source = sources == 1;
  c.unique_sink = sinks == 1;

  auto arc_between = [&](int from, int to, int label) {
    for (int a : h.up[from])
      if (h.arcs[a].to == to && h.arcs[a].face == label) return true;
    return false;
  };
  c.u1 = c.u2 = c.l1 = c.l2 = true;
  for (int x = 0; x < n; ++x) {
    for (size_t i = 0; i < h.up[x].size(); ++i)
      for (size_t j = i + 1; j < h.up[x].size(); ++j) {
        const HasseArc& a = h.arcs[h.up[x][i]];
        const HasseArc& b = h.arcs[h.up[x][j]];
        if (a.face == b.face) c.u1 = false;
        bool found = false;
        for (int k : h.up[a.to]) {
          const HasseArc& az = h.arcs[k];
          if (az.face == b.face && arc_between(b.to, az.to, a.face)) found = true;
        }
        if (!found) c.u2 = false;
      }
    for (size_t i = 0; i < h.down[x].size(); ++i)
      for (size_t j = i + 1; j < h.down[x].size(); ++j) {
        const HasseArc& a = h.arcs[h.down[x][i]];
        const HasseArc& b = h.arcs[h.down[x][j]];
        if (a.face == b.face) c.l1 = false;
        bool found = false;
        for (int k : h.down[a.from]) {
          const HasseArc& ua = h.arcs[k];
          if (ua.face == b.face && arc_between(ua.from, b.from, a.face)) found = true;
        }
        if (!found) c.l2 = false;
      }
  }
  std::vector<char> used(h.reduced.size(), 0);
  for (const auto& a : h.arcs) used[a.face] = 1;
  c.every_face_used = true;
  for (int f = 0; f < h.reduced.size(); ++f)
    if (f != h.reduced.root && !used[f]) c.every_face_used = false;
  return c;
}

std::vector<long long> orientation_type(const Completion& c, const Orientation& d, const CycleBasis& basis) {
  std::vector<long long> t;
  for (const auto& b : basis.cycles) t.push_back(gamma(c, d, b));
  return t;
}

}  // namespace schnyder
