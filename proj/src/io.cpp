#include "schnyder/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "schnyder/errors.hpp"

namespace schnyder {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

long long to_int(int line, const std::string& tok) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) fail(line, "not an integer: '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "not an integer: '" + tok + "'");
  }
}

struct Directive {
  int line;
  std::string word;
  std::vector<long long> args;
};

// Parses "tail" lines of an orientation over `map`.
Orientation collect_tails(const SurfaceMap& map, const std::vector<Directive>& lines, int last_line, const char* what) {
  std::vector<Dart> tails(map.num_edges(), -1);
  std::vector<int> where(map.num_edges(), 0);
  for (const auto& d : lines) {
    if (d.args.size() != 1) fail(d.line, std::string(what) + " expects one dart");
    const long long x = d.args[0];
    if (x < 0 || x >= map.num_darts()) fail(d.line, "dart " + std::to_string(x) + " out of range");
    const Edge e = map.edge(static_cast<Dart>(x));
    if (tails[e] != -1) fail(d.line, "edge " + std::to_string(e) + " already oriented on line " + std::to_string(where[e]));
    tails[e] = static_cast<Dart>(x);
    where[e] = d.line;
  }
  for (Edge e = 0; e < map.num_edges(); ++e)
    if (tails[e] == -1) fail(last_line, std::string(what) + " missing for edge " + std::to_string(e));
  return Orientation(std::move(tails));
}

}  // namespace

Document parse_document(std::istream& in, const SurfaceMap* base) {
  Document doc;
  std::map<std::string, std::vector<Directive>> by_word;
  std::string raw;
  int line = 0;
  bool in_header = true;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      if (in_header && raw.find_first_not_of(" \t") == hash) {
        std::string c = raw.substr(hash + 1);
        if (!c.empty() && c[0] == ' ') c.erase(0, 1);
        doc.header.push_back(c);
      }
      raw.erase(hash);
    }
    std::istringstream ss(raw);
    Directive d{line, {}, {}};
    if (!(ss >> d.word)) continue;
    in_header = false;
    std::string tok;
    while (ss >> tok) d.args.push_back(to_int(line, tok));
    static const char* known[] = {"darts", "edge", "vertex", "orient", "corient", "angle", "flow"};
    if (std::find(std::begin(known), std::end(known), d.word) == std::end(known)) fail(line, "unknown directive '" + d.word + "'");
    by_word[d.word].push_back(std::move(d));
  }
  const int last = line;

  if (by_word.count("darts")) {
    const auto& ds = by_word["darts"];
    if (ds.size() > 1) fail(ds[1].line, "darts given twice");
    if (ds[0].args.size() != 1 || ds[0].args[0] <= 0) fail(ds[0].line, "darts expects a positive count");
    const long long n = ds[0].args[0];
    for (const char* w : {"edge", "vertex"})
      for (const auto& d : by_word[w])
        if (d.line < ds[0].line) fail(d.line, std::string(w) + " before darts");
    std::vector<Dart> alpha(n, -1), sigma(n, -1);
    std::vector<int> edge_line(n, 0), vertex_line(n, 0);
    for (const auto& d : by_word["edge"]) {
      if (d.args.size() != 2) fail(d.line, "edge expects two darts");
      for (long long x : d.args) {
        if (x < 0 || x >= n) fail(d.line, "dart " + std::to_string(x) + " out of range");
        if (alpha[x] != -1) fail(d.line, "dart " + std::to_string(x) + " already paired on line " + std::to_string(edge_line[x]));
      }
      if (d.args[0] == d.args[1]) throw Error(ErrorCode::FixedPointEdge, "line " + std::to_string(d.line) + ": edge pairs a dart with itself");
      alpha[d.args[0]] = static_cast<Dart>(d.args[1]);
      alpha[d.args[1]] = static_cast<Dart>(d.args[0]);
      edge_line[d.args[0]] = edge_line[d.args[1]] = d.line;
    }
    for (const auto& d : by_word["vertex"]) {
      if (d.args.empty()) fail(d.line, "vertex expects at least one dart");
      for (size_t i = 0; i < d.args.size(); ++i) {
        const long long x = d.args[i];
        if (x < 0 || x >= n) fail(d.line, "dart " + std::to_string(x) + " out of range");
        if (sigma[x] != -1)
          fail(d.line, "dart " + std::to_string(x) + " already in a rotation on line " + std::to_string(vertex_line[x]));
        vertex_line[x] = d.line;
        sigma[x] = static_cast<Dart>(d.args[(i + 1) % d.args.size()]);
      }
    }
    for (Dart x = 0; x < n; ++x) {
      if (alpha[x] == -1) fail(last, "dart " + std::to_string(x) + " has no edge");
      if (sigma[x] == -1) fail(last, "dart " + std::to_string(x) + " is in no vertex rotation");
    }
    doc.map = SurfaceMap::build(std::move(alpha), std::move(sigma));
  } else {
    for (const char* w : {"edge", "vertex"})
      if (by_word.count(w)) fail(by_word[w][0].line, std::string(w) + " without darts");
    if (base) doc.map = *base;
  }

  const bool needs_map = by_word.count("orient") || by_word.count("corient") || by_word.count("angle") || by_word.count("flow");
  if (needs_map && !doc.map) fail(last, "no map to attach data to");

  if (by_word.count("orient")) doc.orientation = collect_tails(*doc.map, by_word["orient"], last, "orient");
  if (by_word.count("corient")) {
    const Completion c = Completion::build(*doc.map);
    doc.completion_orientation = collect_tails(c.map(), by_word["corient"], last, "corient");
  }
  if (by_word.count("angle")) {
    const SurfaceMap& g = *doc.map;
    std::vector<std::uint8_t> labels(g.num_darts(), 0);
    std::vector<int> where(g.num_darts(), 0);
    for (const auto& d : by_word["angle"]) {
      if (d.args.size() != 2) fail(d.line, "angle expects a dart and a color");
      const long long x = d.args[0], c = d.args[1];
      if (x < 0 || x >= g.num_darts()) fail(d.line, "dart " + std::to_string(x) + " out of range");
      if (c < 0 || c > 2) fail(d.line, "color must be 0, 1 or 2");
      if (where[x]) fail(d.line, "angle " + std::to_string(x) + " already colored on line " + std::to_string(where[x]));
      where[x] = d.line;
      labels[x] = static_cast<std::uint8_t>(c);
    }
    for (Dart x = 0; x < g.num_darts(); ++x)
      if (!where[x]) fail(last, "angle " + std::to_string(x) + " has no color");
    doc.labeling = AngleLabeling(std::move(labels));
  }
  if (by_word.count("flow")) {
    Flow f(doc.map->num_edges());
    std::vector<int> where(doc.map->num_edges(), 0);
    for (const auto& d : by_word["flow"]) {
      if (d.args.size() != 2) fail(d.line, "flow expects an edge and a value");
      const long long e = d.args[0];
      if (e < 0 || e >= doc.map->num_edges()) fail(d.line, "edge " + std::to_string(e) + " out of range");
      if (where[e]) fail(d.line, "edge " + std::to_string(e) + " already has a value on line " + std::to_string(where[e]));
      where[e] = d.line;
      f[static_cast<Edge>(e)] = d.args[1];
    }
    doc.flow = std::move(f);
  }
  return doc;
}

Document parse_document_string(const std::string& text, const SurfaceMap* base) {
  std::istringstream in(text);
  return parse_document(in, base);
}

Document read_document(const std::string& path, const SurfaceMap* base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  return parse_document(in, base);
}

void write_map(std::ostream& out, const SurfaceMap& map) {
  out << "darts " << map.num_darts() << "\n";
  for (Edge e = 0; e < map.num_edges(); ++e) out << "edge " << map.lo(e) << " " << map.hi(e) << "\n";
  for (Vertex v = 0; v < map.num_vertices(); ++v) {
    out << "vertex";
    for (Dart d : map.vertex_darts(v)) out << " " << d;
    out << "\n";
  }
}

void write_orientation(std::ostream& out, const Orientation& d, const char* keyword) {
  for (Dart t : d.tails()) out << keyword << " " << t << "\n";
}

void write_labeling(std::ostream& out, const AngleLabeling& l) {
  for (Dart d = 0; d < l.size(); ++d) out << "angle " << d << " " << l[d] << "\n";
}

void write_flow(std::ostream& out, const Flow& f) {
  for (Edge e = 0; e < f.size(); ++e)
    if (f[e] != 0) out << "flow " << e << " " << f[e] << "\n";
}

void write_basis(std::ostream& out, const CycleBasis& basis) {
  for (int i = 0; i < basis.size(); ++i) {
    out << "cycle";
    for (Dart d : basis.cycles[i]) out << " " << d;
    out << "\ndual_cycle";
    for (Dart d : basis.dual_cycles[i]) out << " " << d;
    out << "\n";
  }
}

}  // namespace schnyder
