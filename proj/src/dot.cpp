#include "schnyder/dot.hpp"

#include <ostream>

namespace schnyder {

namespace {

const char* color_name(int c) {
  static const char* names[] = {"red", "blue", "green"};
  return names[((c % 3) + 3) % 3];
}

}  // namespace

void write_wood_dot(std::ostream& out, const SurfaceMap& g, const ColoredWood& w) {
  out << "digraph wood {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  v" << v << ";\n";
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const Dart a = g.lo(e), b = g.hi(e);
    if (!w.outgoing[a] && !w.outgoing[b]) {
      out << "  v" << g.origin(a) << " -> v" << g.origin(b) << " [dir=none, color=black, label=\"e" << e << "\"];\n";
      continue;
    }
    for (Dart d : {a, b}) {
      if (!w.outgoing[d]) continue;
      out << "  v" << g.origin(d) << " -> v" << g.target(d) << " [color=" << color_name(w.color[d]) << ", label=\"e" << e
          << "\"];\n";
    }
  }
  out << "}\n";
}

void write_orientation_dot(std::ostream& out, const SurfaceMap& g, const Orientation& d) {
  out << "digraph orientation {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  v" << v << ";\n";
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const Dart t = d.tail(e);
    out << "  v" << g.origin(t) << " -> v" << g.target(t) << " [label=\"e" << e << "\"];\n";
  }
  out << "}\n";
}

void write_hasse_dot(std::ostream& out, const SurfaceMap& g, const HasseDiagram& h) {
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (size_t i = 0; i < h.nodes.size(); ++i) {
    int magenta = 0, cyan = 0;
    for (int f = 0; f < h.reduced.size(); ++f) {
      if (f == h.reduced.root) continue;
      if (can_flip(g, h.reduced, h.nodes[i], f, FlipDirection::Up)) ++magenta;
      if (can_flip(g, h.reduced, h.nodes[i], f, FlipDirection::Down)) ++cyan;
    }
    out << "  n" << i << " [label=\"" << i << "\\n" << h.nodes[i].bits(g) << "\\nmagenta " << magenta << " cyan " << cyan
        << "\"];\n";
  }
  for (const auto& a : h.arcs)
    out << "  n" << a.from << " -> n" << a.to << " [label=\"face " << a.face << "\", color=magenta, fontcolor=cyan];\n";
  out << "}\n";
}

}  // namespace schnyder
