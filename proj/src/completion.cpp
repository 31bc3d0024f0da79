#include "schnyder/completion.hpp"

#include <deque>

#include "schnyder/errors.hpp"

namespace schnyder {

namespace {

int mod3(long long x) { return static_cast<int>(((x % 3) + 3) % 3); }

}  // namespace

Completion Completion::build(const SurfaceMap& g) {
  const int darts = g.num_darts();
  std::vector<Dart> alpha(4 * darts), sigma(4 * darts);
  for (Dart d = 0; d < darts; ++d) {
    alpha[4 * d] = 4 * d + 1;
    alpha[4 * d + 1] = 4 * d;
    alpha[4 * d + 2] = 4 * d + 3;
    alpha[4 * d + 3] = 4 * d + 2;
    sigma[4 * d] = 4 * g.sigma(d);                // around the primal vertex
    sigma[4 * d + 2] = 4 * g.phi(d) + 2;          // around the dual vertex
    sigma[4 * d + 1] = 4 * g.alpha(d) + 3;        // around the edge-vertex
    sigma[4 * d + 3] = 4 * d + 1;
  }
  Completion c;
  c.g_ = g;
  c.hat_ = SurfaceMap::build(std::move(alpha), std::move(sigma));

  c.roles_.assign(c.hat_.num_vertices(), VertexRole::EdgeVertex);
  c.primal_.assign(g.num_vertices(), -1);
  c.dual_.assign(g.num_faces(), -1);
  c.edge_vertex_.assign(g.num_edges(), -1);
  for (Dart d = 0; d < darts; ++d) {
    Vertex p = c.hat_.origin(primal_dart(d));
    Vertex q = c.hat_.origin(dual_dart(d));
    c.roles_[p] = VertexRole::Primal;
    c.roles_[q] = VertexRole::Dual;
    c.primal_[g.origin(d)] = p;
    c.dual_[g.left(d)] = q;
    c.edge_vertex_[g.edge(d)] = c.hat_.origin(primal_side_dart(d));
  }
  c.face_of_angle_.assign(darts, -1);
  c.angle_of_face_.assign(c.hat_.num_faces(), -1);
  for (Dart d = 0; d < darts; ++d) {
    Face f = c.hat_.left(primal_dart(d));
    c.face_of_angle_[d] = f;
    c.angle_of_face_[f] = d;
  }
  return c;
}

std::vector<Dart> Completion::lift_cycle(std::span<const Dart> cycle) const {
  std::vector<Dart> out;
  out.reserve(2 * cycle.size());
  for (Dart d : cycle) {
    out.push_back(primal_dart(d));
    out.push_back(primal_side_dart(g_.alpha(d)));
  }
  return out;
}

Orientation Completion::lift_orientation(const Orientation& d) const {
  std::vector<Dart> tails(hat_.num_edges());
  for (Dart x = 0; x < g_.num_darts(); ++x) {
    tails[primal_half(x)] = d.is_out(g_, x) ? primal_dart(x) : primal_side_dart(x);
    tails[dual_half(x)] = dual_dart(x);
  }
  return Orientation(std::move(tails));
}

bool is_mod3_orientation(const Completion& c, const Orientation& d) {
  const auto out = d.outdegrees(c.map());
  for (Vertex v = 0; v < c.map().num_vertices(); ++v) {
    const int want = c.role(v) == VertexRole::EdgeVertex ? 1 : 0;
    if (out[v] % 3 != want) return false;
  }
  return true;
}

Flow out_edge_flow(const Completion& c, const Orientation& d) {
  const SurfaceMap& h = c.map();
  Flow f(h.num_edges());
  for (Edge e = 0; e < h.num_edges(); ++e)
    if (d.tail(e) == h.lo(e)) f[e] = 1;
  return f;
}

long long delta(const Completion& c, const Orientation& d, std::span<const Dart> dual_walk) {
  return beta(out_edge_flow(c, d), characteristic_flow(c.map(), dual_walk));
}

namespace {

long long leaving_balance(const SurfaceMap& map, const Orientation& d, std::span<const Dart> cycle) {
  long long right = 0, left = 0;
  for (Dart x : darts_right_of(map, cycle))
    if (d.is_out(map, x)) ++right;
  for (Dart x : darts_left_of(map, cycle))
    if (d.is_out(map, x)) ++left;
  return right - left;
}

}  // namespace

long long gamma(const Completion& c, const Orientation& d, std::span<const Dart> cycle) {
  if (!is_simple_cycle(c.base(), cycle)) throw Error(ErrorCode::NotACycle, "gamma is defined on cycles without repeated vertices");
  auto lifted = c.lift_cycle(cycle);
  return leaving_balance(c.map(), d, lifted);
}

long long gamma_on_base(const SurfaceMap& g, const Orientation& d, std::span<const Dart> cycle) {
  if (!is_simple_cycle(g, cycle)) throw Error(ErrorCode::NotACycle, "gamma is defined on cycles without repeated vertices");
  return leaving_balance(g, d, cycle);
}

std::vector<Dart> left_dual_walk(const Completion& c, std::span<const Dart> cycle) {
  const SurfaceMap& h = c.map();
  auto lifted = c.lift_cycle(cycle);
  const size_t k = lifted.size();
  std::vector<Dart> walk;
  for (size_t i = 0; i < k; ++i) {
    Dart out = lifted[i];
    Dart in = h.alpha(lifted[(i + k - 1) % k]);
    std::vector<Dart> side;
    for (Dart x = h.sigma(out); x != in; x = h.sigma(x)) side.push_back(x);
    for (auto it = side.rbegin(); it != side.rend(); ++it) walk.push_back(h.alpha(*it));
  }
  return walk;
}

std::vector<Dart> right_dual_walk(const Completion& c, std::span<const Dart> cycle) {
  const SurfaceMap& h = c.map();
  auto lifted = c.lift_cycle(cycle);
  const size_t k = lifted.size();
  std::vector<Dart> walk;
  for (size_t i = 0; i < k; ++i) {
    Dart out = lifted[i];
    Dart in = h.alpha(lifted[(i + k - 1) % k]);
    for (Dart x = h.sigma(in); x != out; x = h.sigma(x)) walk.push_back(x);
  }
  return walk;
}

SchnyderReport is_schnyder_orientation(const Completion& c, const Orientation& d, const CycleBasis& basis) {
  SchnyderReport r;
  r.mod3 = is_mod3_orientation(c, d);
  bool all_zero = true;
  for (const auto& b : basis.cycles) {
    long long g = gamma(c, d, b);
    r.gamma.push_back(g);
    if (mod3(g) != 0) all_zero = false;
  }
  r.schnyder = r.mod3 && all_zero;
  return r;
}

AngleLabeling AngleLabeling::constant(const SurfaceMap& g, int color) {
  return AngleLabeling(std::vector<std::uint8_t>(g.num_darts(), static_cast<std::uint8_t>(mod3(color))));
}

AngleLabeling AngleLabeling::shifted(int k) const {
  AngleLabeling out = *this;
  for (auto& v : out.labels_) v = static_cast<std::uint8_t>(mod3(v + k));
  return out;
}

AngleLabeling extract_labeling(const Completion& c, const Orientation& d, Dart root, int base) {
  const SurfaceMap& h = c.map();
  const Flow out = out_edge_flow(c, d);
  std::vector<int> label(h.num_faces(), -1);
  const Face f0 = c.face_of_angle(root);
  label[f0] = mod3(base);
  std::deque<Face> queue{f0};
  while (!queue.empty()) {
    Face a = queue.front();
    queue.pop_front();
    for (Dart x : h.face_darts(a)) {
      Dart w = h.alpha(x);  // dual dart from a to left(w)
      Face b = h.left(w);
      int want = mod3(label[a] + h.sign(w) * out[h.edge(w)]);
      if (label[b] == -1) {
        label[b] = want;
        queue.push_back(b);
      } else if (label[b] != want) {
        throw Error(ErrorCode::NotSchnyder, "delta is not 0 mod 3 on some closed dual walk");
      }
    }
  }
  AngleLabeling l = AngleLabeling::constant(c.base(), 0);
  for (Dart a = 0; a < c.base().num_darts(); ++a) l.set(a, label[c.face_of_angle(a)]);
  return l;
}

Orientation labeling_to_orientation(const Completion& c, const AngleLabeling& l) {
  const SurfaceMap& h = c.map();
  if (l.size() != c.base().num_darts()) throw Error(ErrorCode::DimensionMismatch, "labeling size differs from angle count");
  std::vector<Dart> tails(h.num_edges());
  std::vector<char> bad(c.base().num_edges(), 0);
  for (Edge e = 0; e < h.num_edges(); ++e) {
    Dart r = h.lo(e);
    int step = mod3(l[c.angle_of_face(h.left(r))] - l[c.angle_of_face(h.right(r))]);
    if (step == 2) bad[c.base().edge(Completion::base_dart(e))] = 1;
    tails[e] = step == 1 ? r : h.alpha(r);
  }
  std::vector<int> offending;
  for (Edge e = 0; e < c.base().num_edges(); ++e)
    if (bad[e]) offending.push_back(e);
  if (!offending.empty()) throw NotEdgeLabelingError(std::move(offending));
  return Orientation(std::move(tails));
}

namespace {

// The four angles around edge e in clockwise order starting at the corner
// on the left of lo(e) at its origin.
std::array<int, 4> edge_angles(const SurfaceMap& g, const AngleLabeling& l, Edge e) {
  Dart lo = g.lo(e), hi = g.hi(e);
  return {l[lo], l[g.sigma_inv(hi)], l[hi], l[g.sigma_inv(lo)]};
}

int interval_type(const std::vector<int>& labels) {
  int changes = 0;
  const size_t k = labels.size();
  for (size_t i = 0; i < k; ++i) {
    int step = mod3(labels[(i + 1) % k] - labels[i]);
    if (step == 0) continue;
    if (step != 1) throw Error(ErrorCode::MalformedIntervalPattern, "colors around a vertex or face do not cycle 0,1,2");
    ++changes;
  }
  if (changes % 3 != 0) throw Error(ErrorCode::MalformedIntervalPattern, "color intervals not a multiple of three");
  return changes / 3;
}

}  // namespace

Classification classify(const SurfaceMap& g, const AngleLabeling& l) {
  if (l.size() != g.num_darts()) throw Error(ErrorCode::DimensionMismatch, "labeling size differs from angle count");
  Classification c;
  std::vector<int> offending;
  for (Edge e = 0; e < g.num_edges(); ++e) {
    auto a = edge_angles(g, l, e);
    int zeros = 0, zero_at = -1;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      int step = mod3(a[(i + 1) % 4] - a[i]);
      if (step == 2) ok = false;
      if (step == 0) {
        ++zeros;
        zero_at = i;
      }
    }
    if (!ok || (zeros != 4 && zeros != 1)) {
      offending.push_back(e);
      c.edge_type.push_back(-1);
      continue;
    }
    // steps 1 and 3 compare angles at the same endpoint; steps 0 and 2 on the same side
    c.edge_type.push_back(zeros == 4 ? 0 : (zero_at % 2 == 1 ? 1 : 2));
  }
  if (!offending.empty()) throw NotEdgeLabelingError(std::move(offending));

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> labels;
    for (Dart d : g.vertex_darts(v)) labels.push_back(l[d]);
    c.vertex_type.push_back(interval_type(labels));
  }
  for (Face f = 0; f < g.num_faces(); ++f) {
    std::vector<int> labels;
    for (Dart d : g.face_darts(f)) labels.push_back(l[d]);
    c.face_type.push_back(interval_type(labels));
  }
  return c;
}

int ColoredWood::outdegree(const SurfaceMap& g, Vertex v) const {
  int k = 0;
  for (Dart d : g.vertex_darts(v)) k += outgoing[d] ? 1 : 0;
  return k;
}

ColoredWood to_colored_wood(const SurfaceMap& g, const AngleLabeling& l) {
  Classification cls = classify(g, l);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (cls.vertex_type[v] == 0) throw Error(ErrorCode::SinkVertex, "vertex " + std::to_string(v) + " has type 0");
  for (Face f = 0; f < g.num_faces(); ++f)
    if (cls.face_type[f] == 0) throw Error(ErrorCode::Type0Face, "face " + std::to_string(f) + " has type 0");

  ColoredWood w;
  w.edge_type = cls.edge_type;
  w.outgoing.assign(g.num_darts(), 0);
  w.color.assign(g.num_darts(), 0);
  for (Dart d = 0; d < g.num_darts(); ++d) {
    bool out = mod3(l[d] - l[g.sigma_inv(d)]) == 1;
    w.outgoing[d] = out ? 1 : 0;
    w.color[d] = mod3(out ? l[d] + 1 : l[d]);
  }
  validate_wood(g, w);
  return w;
}

AngleLabeling wood_to_labeling(const SurfaceMap& g, const ColoredWood& w) {
  AngleLabeling l = AngleLabeling::constant(g, 0);
  for (Dart d = 0; d < g.num_darts(); ++d) l.set(d, w.outgoing[d] ? w.color[d] - 1 : w.color[d]);
  return l;
}

void validate_wood(const SurfaceMap& g, const ColoredWood& w) {
  for (Edge e = 0; e < g.num_edges(); ++e) {
    Dart a = g.lo(e), b = g.hi(e);
    const int outs = w.outgoing[a] + w.outgoing[b];
    if (outs == 1 && w.color[a] != w.color[b])
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " changes color along its direction");
    if (outs == 2 && w.color[a] == w.color[b])
      throw Error(ErrorCode::InvalidArgument, "bioriented edge " + std::to_string(e) + " repeats a color");
    if (outs == 0 && w.color[a] != w.color[b])
      throw Error(ErrorCode::InvalidArgument, "incoming-only edge " + std::to_string(e) + " has two colors");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto darts = g.vertex_darts(v);
    const int k = static_cast<int>(darts.size());
    int first_out = -1, outs = 0;
    for (int i = 0; i < k; ++i)
      if (w.outgoing[darts[i]]) {
        if (first_out < 0) first_out = i;
        ++outs;
      }
    if (outs == 0) throw Error(ErrorCode::SinkVertex, "vertex " + std::to_string(v) + " has no outgoing edge");
    if (outs % 3 != 0) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has outdegree not divisible by 3");
    int last_color = w.color[darts[first_out]];
    for (int j = 1; j <= k; ++j) {
      Dart d = darts[(first_out + j) % k];
      if (w.outgoing[d]) {
        if (w.color[d] != mod3(last_color + 1))
          throw Error(ErrorCode::InvalidArgument, "outgoing colors at vertex " + std::to_string(v) + " are not ccw 0,1,2");
        last_color = w.color[d];
      } else if (w.color[d] != mod3(last_color - 1)) {
        throw Error(ErrorCode::InvalidArgument, "incoming edge enters vertex " + std::to_string(v) + " in the wrong sector");
      }
    }
  }
  for (Face f = 0; f < g.num_faces(); ++f) {
    auto walk = g.face_darts(f);
    for (int dir = 0; dir < 2; ++dir) {
      int color = -1;
      bool mono = true;
      for (Dart x : walk) {
        Dart y = dir == 0 ? x : g.alpha(x);
        if (!w.outgoing[y] || (color != -1 && w.color[y] != color)) {
          mono = false;
          break;
        }
        color = w.color[y];
      }
      if (mono) throw Error(ErrorCode::MonochromaticFace, "boundary of face " + std::to_string(f) + " is a monochromatic cycle");
    }
  }
}

}  // namespace schnyder
