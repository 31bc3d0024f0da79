#include "schnyder/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "schnyder/errors.hpp"

namespace schnyder::oracle {

namespace {

using i128 = __int128;

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(i128 x) {
  if (x > static_cast<i128>(std::numeric_limits<long long>::max()) || x < static_cast<i128>(std::numeric_limits<long long>::min()))
    throw Error(ErrorCode::BudgetExceeded, "integer overflow in exact elimination");
  return static_cast<long long>(x);
}

void normalize(std::vector<long long>& row) {
  long long g = 0;
  for (long long v : row) g = gcd_ll(g, v);
  if (g > 1)
    for (long long& v : row) v /= g;
}

// +1 when d is the smaller dart of its pair.
int orientation_sign(const SurfaceMap& map, Dart d) { return d < map.alpha(d) ? 1 : -1; }

void check_size(const SurfaceMap& map, const EnumerationBudget& budget) {
  if (map.num_edges() > budget.max_edges)
    throw Error(ErrorCode::BudgetExceeded, "instance has " + std::to_string(map.num_edges()) + " edges, cap is " +
                                               std::to_string(budget.max_edges));
}

}  // namespace

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget b;
  if (const char* s = std::getenv("SCHNYDER_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && v > 0) b.max_orientations = v;
  }
  return b;
}

std::vector<Orientation> enumerate_alpha_orientations(const SurfaceMap& map, const std::vector<int>& alpha,
                                                      const EnumerationBudget& budget) {
  check_size(map, budget);
  const int m = map.num_edges(), n = map.num_vertices();
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorCode::DimensionMismatch, "one target per vertex expected");
  std::vector<Orientation> out;
  if (std::accumulate(alpha.begin(), alpha.end(), 0LL) != m) return out;

  // pairs[e] = (first dart, second dart) in increasing order
  std::vector<std::pair<Dart, Dart>> pairs(m);
  std::vector<char> done(map.num_darts(), 0);
  int k = 0;
  for (Dart d = 0; d < map.num_darts(); ++d) {
    if (done[d]) continue;
    done[d] = done[map.alpha(d)] = 1;
    pairs[k++] = {d, map.alpha(d)};
  }
  std::vector<int> outdeg(n, 0), open(n, 0);
  for (const auto& [a, b] : pairs) {
    ++open[map.origin(a)];
    ++open[map.origin(b)];
  }
  std::vector<Dart> tails(m);
  auto feasible = [&](Vertex v) { return outdeg[v] <= alpha[v] && outdeg[v] + open[v] >= alpha[v]; };

  std::vector<int> edge_id(map.num_darts());
  for (Edge e = 0; e < m; ++e) edge_id[pairs[e].first] = edge_id[pairs[e].second] = e;

  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      // tails are indexed by the map's own edge ids
      std::vector<Dart> t(m);
      for (int j = 0; j < m; ++j) t[map.edge(tails[j])] = tails[j];
      if (static_cast<long long>(out.size()) >= budget.max_orientations)
        throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget.max_orientations) + " orientations");
      out.emplace_back(std::move(t));
      return;
    }
    const auto [a, b] = pairs[i];
    const Vertex u = map.origin(a), w = map.origin(b);
    --open[u];
    --open[w];
    for (Dart tail : {a, b}) {
      ++outdeg[map.origin(tail)];
      if (feasible(u) && feasible(w)) {
        tails[i] = tail;
        self(self, i + 1);
      }
      --outdeg[map.origin(tail)];
    }
    ++open[u];
    ++open[w];
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [&](const Orientation& x, const Orientation& y) { return x.bits(map) < y.bits(map); });
  return out;
}

std::vector<Orientation> enumerate_mod3_orientations(const Completion& c, const EnumerationBudget& budget) {
  const SurfaceMap& h = c.map();
  const SurfaceMap& g = c.base();
  check_size(g, budget);
  std::vector<Vertex> edge_vertices;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) == 4 && c.role(v) == VertexRole::EdgeVertex) edge_vertices.push_back(v);

  std::vector<int> outdeg(h.num_vertices(), 0), open(h.num_vertices(), 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) open[v] = h.degree(v);
  std::vector<Dart> tails(h.num_edges(), -1);
  std::vector<Orientation> out;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == edge_vertices.size()) {
      if (static_cast<long long>(out.size()) >= budget.max_orientations)
        throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget.max_orientations) + " orientations");
      out.emplace_back(tails);
      return;
    }
    auto darts = h.vertex_darts(edge_vertices[i]);
    // subsets of the four edges pointing away from the edge-vertex: one single edge or all four
    for (int choice = 0; choice < 5; ++choice) {
      bool ok = true;
      std::vector<Vertex> touched;
      for (int j = 0; j < 4; ++j) {
        Dart x = darts[j];
        bool away = choice == 4 || choice == j;
        tails[h.edge(x)] = away ? x : h.alpha(x);
        Vertex other = h.target(x);
        if (!away) ++outdeg[other];
        --open[other];
        touched.push_back(other);
      }
      for (Vertex v : touched)
        if (open[v] == 0 && outdeg[v] % 3 != 0) ok = false;
      if (ok) self(self, i + 1);
      for (int j = 0; j < 4; ++j) {
        Dart x = darts[j];
        bool away = choice == 4 || choice == j;
        Vertex other = h.target(x);
        if (!away) --outdeg[other];
        ++open[other];
      }
    }
  };
  rec(rec, 0);
  return out;
}

FacialSpan::FacialSpan(const SurfaceMap& map) : edges_(map.num_edges()) {
  // rows = faces (columns of the facial matrix); kernel of this matrix gives
  // the functionals vanishing on every facial flow
  std::vector<std::vector<long long>> rows;
  std::vector<char> seen(map.num_darts(), 0);
  std::vector<int> edge_of(map.num_darts());
  {
    std::vector<char> done(map.num_darts(), 0);
    int k = 0;
    for (Dart d = 0; d < map.num_darts(); ++d) {
      if (done[d]) continue;
      done[d] = done[map.alpha(d)] = 1;
      edge_of[d] = edge_of[map.alpha(d)] = k++;
    }
  }
  for (Dart d = 0; d < map.num_darts(); ++d) {
    if (seen[d]) continue;
    std::vector<long long> row(edges_, 0);
    Dart x = d;
    do {
      seen[x] = 1;
      row[edge_of[x]] += orientation_sign(map, x);
      x = map.sigma_inv(map.alpha(x));
    } while (x != d);
    rows.push_back(std::move(row));
  }
  // reduced row echelon form, fraction free
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int col = 0; col < edges_ && r < rows.size(); ++col) {
    size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const i128 a = rows[r][col], b = rows[i][col];
      for (int j = 0; j < edges_; ++j) rows[i][j] = narrow(a * rows[i][j] - b * rows[r][j]);
      normalize(rows[i]);
    }
    normalize(rows[r]);
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<char> is_pivot(edges_, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int free = 0; free < edges_; ++free) {
    if (is_pivot[free]) continue;
    // y_free = L, y_pivot = -row[free] * L / row[pivot]
    long long lcm = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) {
      long long piv = rows[i][pivot_col[i]];
      piv = piv < 0 ? -piv : piv;
      lcm = narrow(static_cast<i128>(lcm) / gcd_ll(lcm, piv) * piv);
    }
    std::vector<long long> y(edges_, 0);
    y[free] = lcm;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      y[pivot_col[i]] = narrow(-static_cast<i128>(rows[i][free]) * (lcm / rows[i][pivot_col[i]]));
    normalize(y);
    functionals_.push_back(std::move(y));
  }
}

std::vector<long long> FacialSpan::classify(const std::vector<long long>& flow) const {
  if (static_cast<int>(flow.size()) != edges_) throw Error(ErrorCode::DimensionMismatch, "flow size differs from edge count");
  std::vector<long long> out;
  for (const auto& y : functionals_) {
    i128 s = 0;
    for (int e = 0; e < edges_; ++e) s += static_cast<i128>(y[e]) * flow[e];
    out.push_back(narrow(s));
  }
  return out;
}

bool FacialSpan::contains(const std::vector<long long>& flow) const {
  auto c = classify(flow);
  return std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
}

bool schnyder_check_exhaustive(const Completion& c, const Orientation& d) {
  const SurfaceMap& h = c.map();
  // crossing value of each dual dart: the out-edge (towards an edge-vertex)
  // running along dart x crosses the dual step x from its left to its right
  auto step = [&](Dart x) {
    Dart tail = d.tail(h.edge(x));
    if (c.role(h.target(tail)) != VertexRole::EdgeVertex) return 0;
    return tail == x ? 1 : -1;
  };
  auto m3 = [](long long v) { return ((v % 3) + 3) % 3; };

  // facial walks of the dual: around each vertex of the completion
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    long long s = 0;
    for (Dart x : h.vertex_darts(v)) s += step(x);
    if (m3(s) != 0) return false;
  }
  // depth-first spanning tree of the dual; value[f] = delta along the tree path
  const int faces = h.num_faces();
  std::vector<long long> value(faces, 0);
  std::vector<char> seen(faces, 0), tree(h.num_darts(), 0);
  std::vector<Face> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Face f = stack.back();
    stack.pop_back();
    for (Dart x : h.face_darts(f)) {
      Dart w = h.alpha(x);  // dual step leaving f
      Face g = h.left(w);
      if (seen[g]) continue;
      seen[g] = 1;
      value[g] = value[f] + step(w);
      tree[w] = tree[h.alpha(w)] = 1;
      stack.push_back(g);
    }
  }
  // fundamental cycle of every non-tree dual edge
  for (Dart w = 0; w < h.num_darts(); ++w) {
    if (tree[w] || w > h.alpha(w)) continue;
    long long around = value[h.right(w)] + step(w) - value[h.left(w)];
    if (m3(around) != 0) return false;
  }
  return true;
}

std::optional<std::array<std::vector<long long>, 3>> partition_search(const SurfaceMap& map, const std::vector<long long>& t,
                                                                      const EnumerationBudget& budget) {
  std::vector<int> support;
  for (int e = 0; e < static_cast<int>(t.size()); ++e)
    if (t[e] != 0) support.push_back(e);
  if (support.size() > 15) throw Error(ErrorCode::BudgetExceeded, "partition search limited to 15 edges");
  (void)budget;
  FacialSpan span(map);
  const int k = span.rank();
  std::vector<std::vector<long long>> cls;
  for (int e : support) {
    std::vector<long long> unit(map.num_edges(), 0);
    unit[e] = t[e];
    cls.push_back(span.classify(unit));
  }
  std::vector<long long> total = span.classify(t);
  for (long long v : total)
    if (v % 3 != 0) return std::nullopt;
  std::vector<long long> target(k);
  for (int i = 0; i < k; ++i) target[i] = total[i] / 3;

  // plain 3^|T| search over the parts of every edge
  const size_t s = support.size();
  std::vector<int> part(s, 0);
  std::array<std::vector<long long>, 3> sum{std::vector<long long>(k, 0), std::vector<long long>(k, 0),
                                            std::vector<long long>(k, 0)};
  bool found = false;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (found) return;
    if (i == s) {
      if (sum[0] == target && sum[1] == target) found = true;
      return;
    }
    for (int p = 0; p < 3 && !found; ++p) {
      part[i] = p;
      for (int j = 0; j < k; ++j) sum[p][j] += cls[i][j];
      self(self, i + 1);
      for (int j = 0; j < k; ++j) sum[p][j] -= cls[i][j];
    }
  };
  rec(rec, 0);
  if (!found) return std::nullopt;
  std::array<std::vector<long long>, 3> parts{std::vector<long long>(map.num_edges(), 0),
                                              std::vector<long long>(map.num_edges(), 0),
                                              std::vector<long long>(map.num_edges(), 0)};
  for (size_t i = 0; i < s; ++i) parts[part[i]][support[i]] = t[support[i]];
  return parts;
}

std::vector<Orientation> homologous_orientations(const SurfaceMap& map, const Orientation& d0, const EnumerationBudget& budget) {
  std::vector<int> alpha(map.num_vertices(), 0);
  for (Edge e = 0; e < map.num_edges(); ++e) ++alpha[map.origin(d0.tail(e))];
  FacialSpan span(map);
  std::vector<Orientation> out;
  for (Orientation& d : enumerate_alpha_orientations(map, alpha, budget)) {
    std::vector<long long> delta(map.num_edges(), 0);
    for (Edge e = 0; e < map.num_edges(); ++e)
      delta[e] = orientation_sign(map, d0.tail(e)) - orientation_sign(map, d.tail(e));
    if (span.contains(delta)) out.push_back(std::move(d));
  }
  return out;
}

std::vector<char> common_edges(const SurfaceMap& map, const std::vector<Orientation>& all) {
  std::vector<char> same(map.num_edges(), 1);
  for (const Orientation& d : all)
    for (Edge e = 0; e < map.num_edges(); ++e)
      if (d.tail(e) != all.front().tail(e)) same[e] = 0;
  return same;
}

}  // namespace schnyder::oracle
