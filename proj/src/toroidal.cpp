#include "schnyder/toroidal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "schnyder/errors.hpp"
#include "schnyder/oracle.hpp"

namespace schnyder {

namespace {

// Dinic max-flow on a small unit-ish network.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(n), level_(n), next_(n) {}

  int add(int u, int v, int cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  int run(int s, int t) {
    int total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) total += pushed;
    }
    return total;
  }

  int flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

 private:
  struct Arc {
    int to, cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int a : adj_[u])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int a = adj_[u][i];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (int got = dfs(arc.to, t, std::min(f, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_, next_;
};

std::vector<Dart> outgoing_ccw_from(const SurfaceMap& g, const Orientation& d, Dart start) {
  std::vector<Dart> out;
  for (Dart x = g.sigma(start); x != start; x = g.sigma(x))
    if (d.is_out(g, x)) out.push_back(x);
  return out;
}

}  // namespace

Orientation find_3_orientation(const SurfaceMap& g) {
  const int m = g.num_edges(), n = g.num_vertices();
  if (m != 3 * n) throw Error(ErrorCode::NoOrientation, "edge count is not three times the vertex count");
  const int source = m + n, sink = m + n + 1;
  MaxFlow net(m + n + 2);
  std::vector<int> to_lo(m), to_hi(m);
  for (Edge e = 0; e < m; ++e) {
    net.add(source, e, 1);
    to_lo[e] = net.add(e, m + g.origin(g.lo(e)), 1);
    to_hi[e] = net.add(e, m + g.origin(g.hi(e)), 1);
  }
  for (Vertex v = 0; v < n; ++v) net.add(m + v, sink, 3);
  if (net.run(source, sink) != m) throw Error(ErrorCode::NoOrientation, "no orientation with all outdegrees 3");
  std::vector<Dart> tails(m);
  for (Edge e = 0; e < m; ++e) tails[e] = net.flow_on(to_lo[e]) ? g.lo(e) : g.hi(e);
  return Orientation(std::move(tails));
}

MiddleWalk middle_walk(const SurfaceMap& g, const Orientation& d, Dart e0) {
  if (!d.is_out(g, e0)) throw Error(ErrorCode::InvalidArgument, "middle walk must start along the orientation");
  std::vector<Dart> seq{e0};
  std::vector<int> position(g.num_darts(), -1);
  position[e0] = 0;
  while (true) {
    Dart t = seq.back();
    auto outs = outgoing_ccw_from(g, d, g.alpha(t));
    if (outs.size() != 3) throw Error(ErrorCode::InvalidArgument, "middle walk reached a vertex of outdegree " + std::to_string(outs.size()));
    Dart next = outs[1];
    if (position[next] != -1) {
      MiddleWalk w;
      w.prefix.assign(seq.begin(), seq.begin() + position[next]);
      w.cycle.assign(seq.begin() + position[next], seq.end());
      return w;
    }
    position[next] = static_cast<int>(seq.size());
    seq.push_back(next);
  }
}

bool is_middle_cycle(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle) {
  if (!is_simple_cycle(g, cycle)) return false;
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i) {
    if (!d.is_out(g, cycle[i])) return false;
    Dart in = g.alpha(cycle[(i + k - 1) % k]);
    int left = 0, right = 0;
    for (Dart x = g.sigma(cycle[i]); x != in; x = g.sigma(x)) left += d.is_out(g, x);
    for (Dart x = g.sigma(in); x != cycle[i]; x = g.sigma(x)) right += d.is_out(g, x);
    if (left != 1 || right != 1) return false;
  }
  return true;
}

std::vector<Dart> canonical_cycle(std::span<const Dart> cycle) {
  std::vector<Dart> c(cycle.begin(), cycle.end());
  if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

std::vector<std::vector<Dart>> all_middle_cycles(const SurfaceMap& g, const Orientation& d) {
  std::set<std::vector<Dart>> found;
  for (Edge e = 0; e < g.num_edges(); ++e) found.insert(canonical_cycle(middle_walk(g, d, d.tail(e)).cycle));
  return {found.begin(), found.end()};
}

int disk_cycle_outflow(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle) {
  CycleSides sides = cut_along_cycle(g, cycle);
  std::vector<Dart> inside;
  if (sides.left_is_disk()) inside = darts_left_of(g, cycle);
  else if (sides.right_is_disk()) inside = darts_right_of(g, cycle);
  else throw Error(ErrorCode::NotContractible, "cycle does not bound a disk");
  int count = 0;
  for (Dart x : inside) count += d.is_out(g, x);
  return count;
}

bool weakly_homologous(const SurfaceMap& g, std::span<const Dart> c1, std::span<const Dart> c2, const CycleBasis& basis) {
  auto a = homology_coordinates(g, characteristic_flow(g, c1), basis);
  auto b = homology_coordinates(g, characteristic_flow(g, c2), basis);
  if (a == b) return true;
  for (auto& v : b) v = -v;
  return a == b;
}

namespace {

struct MiddleScan {
  std::vector<std::vector<Dart>> cycles;
  int a = -1, b = -1;  // indices of two non weakly homologous cycles
};

MiddleScan scan(const SurfaceMap& g, const Orientation& d, const CycleBasis& basis) {
  MiddleScan s;
  s.cycles = all_middle_cycles(g, d);
  for (size_t i = 0; i < s.cycles.size(); ++i)
    for (size_t j = i + 1; j < s.cycles.size(); ++j)
      if (!weakly_homologous(g, s.cycles[i], s.cycles[j], basis)) {
        s.a = static_cast<int>(i);
        s.b = static_cast<int>(j);
        return s;
      }
  return s;
}

}  // namespace

SchnyderizeResult schnyderize(const SurfaceMap& g, const SchnyderizeOptions& options) {
  if (g.genus() != 1 || !g.is_triangulation()) throw Error(ErrorCode::InvalidArgument, "schnyderize needs a toroidal triangulation");
  const CycleBasis basis = tree_cotree_basis(g);
  const long long budget = options.budget < 0 ? 10LL * g.num_edges() : options.budget;
  std::mt19937 rng(options.seed);

  SchnyderizeResult result;
  Orientation d = find_3_orientation(g);
  MiddleScan s = scan(g, d, basis);
  while (s.a < 0 && result.reversals < budget) {
    std::vector<char> on_cycle(g.num_vertices(), 0), edge_on(g.num_edges(), 0);
    for (const auto& c : s.cycles)
      for (Dart x : c) {
        on_cycle[g.origin(x)] = 1;
        edge_on[g.edge(x)] = 1;
      }
    long long best = -1;
    std::vector<MiddleWalk> ties;
    for (Edge e = 0; e < g.num_edges(); ++e) {
      Dart t = d.tail(e);
      if (!on_cycle[g.origin(t)] || edge_on[e]) continue;
      MiddleWalk w = middle_walk(g, d, t);
      const long long len = static_cast<long long>(w.prefix.size());
      if (len > best) {
        best = len;
        ties.clear();
      }
      if (len == best) ties.push_back(std::move(w));
    }
    if (ties.empty()) break;
    const MiddleWalk& chosen = ties[rng() % ties.size()];
    for (Dart x : chosen.cycle) d.reverse(g, g.edge(x));
    ++result.reversals;
    s = scan(g, d, basis);
  }

  if (s.a < 0) {
    if (!options.fallback) throw Error(ErrorCode::IterationBudgetExceeded, "no pair of independent middle cycles within budget");
    oracle::EnumerationBudget eb;
    eb.max_orientations = options.fallback_limit;
    bool found = false;
    try {
      for (const Orientation& cand : oracle::enumerate_alpha_orientations(g, std::vector<int>(g.num_vertices(), 3), eb)) {
        MiddleScan cs = scan(g, cand, basis);
        if (cs.a >= 0) {
          d = cand;
          s = std::move(cs);
          found = true;
          break;
        }
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded) throw;
    }
    if (!found) throw Error(ErrorCode::IterationBudgetExceeded, "no pair of independent middle cycles found");
    result.used_fallback = true;
  }

  const Completion c = Completion::build(g);
  result.orientation = d;
  result.completion_orientation = c.lift_orientation(d);
  SchnyderReport rep = is_schnyder_orientation(c, result.completion_orientation, basis);
  if (!rep.schnyder) throw Error(ErrorCode::NotSchnyder, "middle cycle certificate did not yield a Schnyder orientation");
  result.type = rep.gamma;
  result.labeling = extract_labeling(c, result.completion_orientation);
  result.wood = to_colored_wood(g, result.labeling);
  result.middle_a = s.cycles[s.a];
  result.middle_b = s.cycles[s.b];
  return result;
}

std::array<std::vector<std::vector<Dart>>, 3> monochromatic_cycles(const SurfaceMap& g, const ColoredWood& w) {
  std::array<std::vector<std::vector<Dart>>, 3> out;
  for (int color = 0; color < 3; ++color) {
    std::vector<Dart> succ(g.num_vertices(), -1);
    for (Dart x = 0; x < g.num_darts(); ++x) {
      if (!w.outgoing[x] || w.color[x] != color) continue;
      if (succ[g.origin(x)] != -1) throw Error(ErrorCode::InvalidArgument, "color class is not functional");
      succ[g.origin(x)] = x;
    }
    for (Dart x : succ)
      if (x == -1) throw Error(ErrorCode::InvalidArgument, "vertex without out-edge of some color");
    std::vector<int> state(g.num_vertices(), 0);  // 0 new, 1 on stack, 2 done
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<Vertex> path;
      Vertex u = v;
      while (state[u] == 0) {
        state[u] = 1;
        path.push_back(u);
        u = g.target(succ[u]);
      }
      if (state[u] == 1) {
        std::vector<Dart> cycle;
        Vertex x = u;
        do {
          cycle.push_back(succ[x]);
          x = g.target(succ[x]);
        } while (x != u);
        out[color].push_back(canonical_cycle(cycle));
      }
      for (Vertex p : path) state[p] = 2;
    }
    std::sort(out[color].begin(), out[color].end());
  }
  return out;
}

const char* crossing_name(CrossingClass c) {
  switch (c) {
    case CrossingClass::NotHalfCrossing: return "not_half_crossing";
    case CrossingClass::HalfCrossing: return "half_crossing";
    case CrossingClass::Crossing: return "crossing";
  }
  return "?";
}

CrossingClass crossing_class(const SurfaceMap& g, const ColoredWood& w) {
  auto cycles = monochromatic_cycles(g, w);
  std::array<std::vector<std::vector<char>>, 3> marks;
  for (int c = 0; c < 3; ++c)
    for (const auto& cyc : cycles[c]) {
      std::vector<char> m(g.num_vertices(), 0);
      for (Dart x : cyc) m[g.origin(x)] = 1;
      marks[c].push_back(std::move(m));
    }
  auto meets = [&](int i, int j) {
    for (const auto& a : marks[i])
      for (const auto& b : marks[j])
        for (Vertex v = 0; v < g.num_vertices(); ++v)
          if (a[v] && b[v]) return true;
    return false;
  };
  int pairs = meets(0, 1) + meets(0, 2) + meets(1, 2);
  if (pairs == 3) return CrossingClass::Crossing;
  if (pairs > 0) return CrossingClass::HalfCrossing;
  return CrossingClass::NotHalfCrossing;
}

}  // namespace schnyder
