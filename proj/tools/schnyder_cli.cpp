#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schnyder/completion.hpp"
#include "schnyder/dot.hpp"
#include "schnyder/errors.hpp"
#include "schnyder/fixtures.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/io.hpp"
#include "schnyder/lattice.hpp"
#include "schnyder/oracle.hpp"
#include "schnyder/surface_map.hpp"
#include "schnyder/toroidal.hpp"

using namespace schnyder;

namespace {

constexpr int kValidationFailure = 2;
constexpr int kBudgetExhausted = 3;

struct Input {
  std::string source;
  std::string orient_path;
  std::string labeling_path;
};

struct Loaded {
  SurfaceMap map;
  std::optional<Orientation> orientation;
  std::optional<Orientation> completion_orientation;
  std::optional<AngleLabeling> labeling;
  std::optional<Flow> flow;
};

Loaded load(const Input& in) {
  Loaded out;
  if (!in.source.empty() && in.source[0] == '@') {
    fixtures::Fixture f = fixtures::fixture(in.source.substr(1));
    out.map = f.map;
    out.orientation = f.orientation;
  } else {
    Document doc = read_document(in.source);
    if (!doc.map) throw Error(ErrorCode::Parse, in.source + ": no map directives");
    out.map = *doc.map;
    out.orientation = doc.orientation;
    out.completion_orientation = doc.completion_orientation;
    out.labeling = doc.labeling;
    out.flow = doc.flow;
  }
  if (!in.orient_path.empty()) {
    Document doc = read_document(in.orient_path, &out.map);
    if (doc.map && !doc.orientation && !doc.completion_orientation)
      throw Error(ErrorCode::Parse, in.orient_path + ": no orient or corient lines");
    if (doc.orientation) out.orientation = doc.orientation;
    if (doc.completion_orientation) out.completion_orientation = doc.completion_orientation;
  }
  if (!in.labeling_path.empty()) {
    Document doc = read_document(in.labeling_path, &out.map);
    if (!doc.labeling) throw Error(ErrorCode::Parse, in.labeling_path + ": no angle lines");
    out.labeling = doc.labeling;
  }
  return out;
}

void add_input(CLI::App* cmd, Input& in, bool orient = true, bool labeling = false) {
  cmd->add_option("input", in.source, "map file, or @name for a bundled fixture")->required();
  if (orient) cmd->add_option("--orient", in.orient_path, "orientation file (orient or corient lines)");
  if (labeling) cmd->add_option("--labeling", in.labeling_path, "angle labeling file");
}

const char* yes(bool b) { return b ? "true" : "false"; }

template <class T>
void print_list(const char* key, const std::vector<T>& v) {
  std::cout << key;
  for (const auto& x : v) std::cout << " " << x;
  std::cout << "\n";
}

Orientation require_completion_orientation(const Completion& c, const Loaded& l) {
  if (l.completion_orientation) return *l.completion_orientation;
  if (l.orientation) return c.lift_orientation(*l.orientation);
  if (l.labeling) return labeling_to_orientation(c, *l.labeling);
  throw Error(ErrorCode::InvalidArgument, "an orientation or labeling is required");
}

const Orientation& require_orientation(const Loaded& l) {
  if (!l.orientation) throw Error(ErrorCode::InvalidArgument, "an orientation of the map is required");
  return *l.orientation;
}

std::vector<Dart> parse_darts(const std::string& text) {
  std::vector<Dart> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad dart '" + tok + "'");
    }
  }
  return out;
}

void write_file_or_stdout(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

void print_counts(const SurfaceMap& g) {
  std::cout << "n " << g.num_vertices() << "\nm " << g.num_edges() << "\nf " << g.num_faces() << "\ngenus " << g.genus()
            << "\n";
}

int cmd_validate(const Input& in) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  std::cout << "valid true\n";
  print_counts(g);
  AssumptionReport r = validate_assumptions(g);
  for (Edge e : r.contractible_loops) std::cout << "contractible_loop " << e << "\n";
  for (auto [a, b] : r.contractible_pairs) std::cout << "contractible_pair " << a << " " << b << "\n";
  std::cout << "assumptions " << (r.ok() ? "ok" : "violated") << "\n";
  if (l.orientation) std::cout << "orientation " << yes(is_valid_orientation(g, *l.orientation)) << "\n";
  return r.ok() ? 0 : kValidationFailure;
}

int cmd_info(const Input& in) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  print_counts(g);
  std::cout << "euler " << g.euler_characteristic() << "\n";
  std::cout << "triangulation " << yes(g.is_triangulation()) << "\n";
  if (g.is_triangulation())
    std::cout << "edge_formula " << yes(g.num_edges() == 3 * g.num_vertices() + 6 * (g.genus() - 1)) << "\n";
  std::vector<int> degrees, face_degrees;
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees.push_back(g.degree(v));
  for (Face f = 0; f < g.num_faces(); ++f) face_degrees.push_back(g.face_degree(f));
  print_list("vertex_degrees", degrees);
  print_list("face_degrees", face_degrees);
  if (l.orientation) print_list("outdegrees", l.orientation->outdegrees(g));
  return 0;
}

int cmd_complete(const Input& in, bool emit_map) {
  Loaded l = load(in);
  Completion c = Completion::build(l.map);
  print_counts(c.map());
  int roles[3] = {0, 0, 0};
  for (Vertex v = 0; v < c.map().num_vertices(); ++v) ++roles[static_cast<int>(c.role(v))];
  std::cout << "primal_vertices " << roles[0] << "\ndual_vertices " << roles[1] << "\nedge_vertices " << roles[2] << "\n";
  if (l.orientation) {
    Orientation lifted = c.lift_orientation(*l.orientation);
    std::cout << "mod3 " << yes(is_mod3_orientation(c, lifted)) << "\n";
    if (emit_map) write_orientation(std::cout, lifted, "corient");
  }
  if (emit_map) write_map(std::cout, c.map());
  return 0;
}

int cmd_check(const Input& in) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  Completion c = Completion::build(g);
  Orientation d = require_completion_orientation(c, l);
  CycleBasis basis = tree_cotree_basis(g);
  SchnyderReport r = is_schnyder_orientation(c, d, basis);
  std::cout << "mod3 " << yes(r.mod3) << "\n";
  std::cout << "schnyder " << yes(r.schnyder) << "\n";
  if (r.mod3) print_list("type", r.gamma);
  for (int i = 0; i < basis.size(); ++i) {
    std::cout << "basis_cycle " << i << ":";
    for (Dart x : basis.cycles[i]) std::cout << " " << x;
    std::cout << "\n";
  }
  if (r.mod3)
    for (Edge e = 0; e < g.num_edges(); ++e)
      if (g.is_loop(e)) {
        const Dart loop[1] = {g.lo(e)};
        std::cout << "loop_gamma " << e << " " << gamma(c, d, loop) << "\n";
      }
  return r.schnyder ? 0 : kValidationFailure;
}

int cmd_label(const Input& in) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  Completion c = Completion::build(g);
  AngleLabeling lab = extract_labeling(c, require_completion_orientation(c, l));
  Classification k = classify(g, lab);
  print_list("edge_types", k.edge_type);
  print_list("vertex_types", k.vertex_type);
  print_list("face_types", k.face_type);
  write_labeling(std::cout, lab);
  return 0;
}

int cmd_wood(const Input& in, const std::string& dot_path) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  Completion c = Completion::build(g);
  AngleLabeling lab = l.labeling ? *l.labeling : extract_labeling(c, require_completion_orientation(c, l));
  ColoredWood w = to_colored_wood(g, lab);
  std::cout << "wood valid\n";
  std::vector<int> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.push_back(w.outdegree(g, v));
  print_list("outdegrees", out);
  int types[3] = {0, 0, 0};
  for (int t : w.edge_type) ++types[t];
  std::cout << "edge_type_counts " << types[0] << " " << types[1] << " " << types[2] << "\n";
  if (g.genus() == 1) std::cout << "crossing " << crossing_name(crossing_class(g, w)) << "\n";
  if (!dot_path.empty()) {
    std::ostringstream s;
    write_wood_dot(s, g, w);
    write_file_or_stdout(dot_path, s.str());
  }
  return 0;
}

int cmd_gamma(const Input& in, const std::string& cycle_text) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  Completion c = Completion::build(g);
  Orientation d = require_completion_orientation(c, l);
  if (!cycle_text.empty()) {
    std::vector<Dart> cyc = parse_darts(cycle_text);
    std::cout << "gamma " << gamma(c, d, cyc) << "\n";
    return 0;
  }
  CycleBasis basis = tree_cotree_basis(g);
  for (int i = 0; i < basis.size(); ++i) std::cout << "gamma " << i << " " << gamma(c, d, basis.cycles[i]) << "\n";
  return 0;
}

int budget_nodes(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::min<long long>(oracle::EnumerationBudget::from_env().max_orientations, 1 << 30));
}

int cmd_lattice(const Input& in, int f0, int max_nodes, const std::string& dot_path) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  const Orientation& d0 = require_orientation(l);
  if (f0 < 0 || f0 >= g.num_faces()) throw Error(ErrorCode::InvalidArgument, "f0 out of range");
  HasseDiagram h = enumerate_lattice(g, d0, f0, budget_nodes(max_nodes));
  HasseCheck k = check_hasse_axioms(h);
  int rigid = 0;
  for (char r : h.reduced.rigid) rigid += r;
  auto [lo, hi] = extremes(h);
  std::cout << "nodes " << h.nodes.size() << "\narcs " << h.arcs.size() << "\nrigid_edges " << rigid << "\nreduced_faces "
            << h.reduced.size() << "\n";
  std::cout << "minimum " << h.nodes[lo].bits(g) << "\nmaximum " << h.nodes[hi].bits(g) << "\n";
  std::cout << "axioms " << (k.ok() ? "ok" : "failed") << "\n";
  if (!dot_path.empty()) {
    std::ostringstream s;
    write_hasse_dot(s, g, h);
    write_file_or_stdout(dot_path, s.str());
  }
  return k.ok() ? 0 : kValidationFailure;
}

int cmd_schnyderize(const Input& in, unsigned seed, const std::string& orient_out, const std::string& labeling_out,
                    const std::string& dot_path) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  SchnyderizeOptions opt;
  opt.seed = seed;
  opt.fallback_limit = oracle::EnumerationBudget::from_env().max_orientations;
  SchnyderizeResult r = schnyderize(g, opt);
  std::cout << "schnyder true\n";
  print_list("type", r.type);
  std::cout << "reversals " << r.reversals << "\nfallback " << yes(r.used_fallback) << "\n";
  print_list("middle_a", r.middle_a);
  print_list("middle_b", r.middle_b);
  std::cout << "crossing " << crossing_name(crossing_class(g, r.wood)) << "\n";
  std::cout << "orientation " << r.orientation.bits(g) << "\n";
  std::ostringstream o, lab, dot;
  write_orientation(o, r.orientation);
  write_labeling(lab, r.labeling);
  write_wood_dot(dot, g, r.wood);
  if (!orient_out.empty()) write_file_or_stdout(orient_out, o.str());
  if (!labeling_out.empty()) write_file_or_stdout(labeling_out, lab.str());
  if (!dot_path.empty()) write_file_or_stdout(dot_path, dot.str());
  return 0;
}

int cmd_oracle(const std::string& mode, const Input& in, bool exhaustive, int f0) {
  if (!exhaustive) throw Error(ErrorCode::InvalidArgument, "oracle commands require --exhaustive");
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  const oracle::EnumerationBudget budget = oracle::EnumerationBudget::from_env();
  if (mode == "check") {
    Completion c = Completion::build(g);
    Orientation d = require_completion_orientation(c, l);
    bool ok = oracle::schnyder_check_exhaustive(c, d);
    std::cout << "schnyder " << yes(ok) << "\n";
    return ok ? 0 : kValidationFailure;
  }
  if (mode == "count") {
    Completion c = Completion::build(g);
    CycleBasis basis = tree_cotree_basis(g);
    auto all = oracle::enumerate_mod3_orientations(c, budget);
    long long schnyder = 0, disagree = 0;
    for (const Orientation& d : all) {
      bool slow = oracle::schnyder_check_exhaustive(c, d);
      schnyder += slow;
      disagree += slow != is_schnyder_orientation(c, d, basis).schnyder;
    }
    std::cout << "mod3_orientations " << all.size() << "\nschnyder_orientations " << schnyder << "\ndisagreements "
              << disagree << "\n";
    return disagree == 0 ? 0 : kValidationFailure;
  }
  if (mode == "lattice") {
    const Orientation& d0 = require_orientation(l);
    auto all = oracle::homologous_orientations(g, d0, budget);
    auto fixed = oracle::common_edges(g, all);
    int rigid = 0;
    for (char r : fixed) rigid += r;
    HasseDiagram h = enumerate_lattice(g, d0, f0, budget_nodes(0));
    bool same = h.nodes.size() == all.size();
    for (const Orientation& d : all) same = same && h.find(g, d) >= 0;
    std::cout << "nodes " << all.size() << "\nrigid_edges " << rigid << "\nmatches_lattice " << yes(same) << "\n";
    return same ? 0 : kValidationFailure;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown oracle mode '" + mode + "'");
}

int cmd_gen_grid(int a, int b) {
  SurfaceMap g = fixtures::gen_grid(a, b);
  std::cout << "# torus grid " << a << "x" << b << "\n";
  write_map(std::cout, g);
  return 0;
}

int cmd_gen_fixture(const std::string& name) {
  if (name == "list") {
    for (const auto& n : fixtures::fixture_names()) std::cout << "fixture " << n << "\n";
    return 0;
  }
  fixtures::Fixture f = fixtures::fixture(name);
  std::cout << "# fixture: " << f.name << "\n# " << f.description << "\n";
  std::cout << "# reconstructed: " << yes(f.reconstructed) << "\n";
  write_map(std::cout, f.map);
  if (f.orientation) write_orientation(std::cout, *f.orientation);
  return 0;
}

int cmd_export_dot(const Input& in, const std::string& kind) {
  Loaded l = load(in);
  const SurfaceMap& g = l.map;
  if (kind == "orientation") {
    write_orientation_dot(std::cout, g, require_orientation(l));
  } else if (kind == "wood") {
    Completion c = Completion::build(g);
    AngleLabeling lab = l.labeling ? *l.labeling : extract_labeling(c, require_completion_orientation(c, l));
    write_wood_dot(std::cout, g, to_colored_wood(g, lab));
  } else if (kind == "map") {
    write_orientation_dot(std::cout, g, Orientation::reference(g));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown dot kind '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Schnyder woods on orientable surfaces"};
  app.require_subcommand(1);
  Input in;
  std::string dot_path, cycle_text, orient_out, labeling_out, oracle_mode, fixture_name, dot_kind = "wood";
  int f0 = 0, max_nodes = 0, grid_a = 0, grid_b = 0;
  unsigned seed = 0;
  bool emit_map = false, exhaustive = false;

  auto* validate = app.add_subcommand("validate", "parse a map and check its standing assumptions");
  add_input(validate, in);
  auto* info = app.add_subcommand("info", "print counts, genus and degrees");
  add_input(info, in);
  auto* complete = app.add_subcommand("complete", "build the primal-dual completion");
  add_input(complete, in);
  complete->add_flag("--emit-map", emit_map, "print the completion in map format");
  auto* check = app.add_subcommand("check", "test whether an orientation is Schnyder");
  add_input(check, in, true, true);
  auto* label = app.add_subcommand("label", "extract the angle labeling of a Schnyder orientation");
  add_input(label, in);
  auto* wood = app.add_subcommand("wood", "build and validate the colored wood");
  add_input(wood, in, true, true);
  wood->add_option("--emit-dot", dot_path, "write DOT to this path ('-' for stdout)");
  auto* gam = app.add_subcommand("gamma", "gamma of a cycle, or of every basis cycle");
  add_input(gam, in, true, true);
  gam->add_option("--cycle", cycle_text, "darts of the cycle, space separated");
  auto* lat = app.add_subcommand("lattice", "enumerate the lattice of homologous orientations");
  add_input(lat, in);
  lat->add_option("--f0", f0, "face kept fixed");
  lat->add_option("--max-nodes", max_nodes, "node budget");
  lat->add_option("--emit-dot", dot_path, "write the Hasse diagram as DOT ('-' for stdout)");
  auto* sz = app.add_subcommand("schnyderize", "Schnyder wood of a toroidal triangulation");
  add_input(sz, in, false);
  sz->add_option("--seed", seed, "tie-breaking seed");
  sz->add_option("--orient-out", orient_out, "write the orientation here");
  sz->add_option("--labeling-out", labeling_out, "write the angle labeling here");
  sz->add_option("--emit-dot", dot_path, "write the wood as DOT ('-' for stdout)");
  auto* orc = app.add_subcommand("oracle", "brute-force reference computations");
  orc->add_option("mode", oracle_mode, "check, count or lattice")->required()->check(CLI::IsMember({"check", "count", "lattice"}));
  add_input(orc, in);
  orc->add_flag("--exhaustive", exhaustive, "confirm exhaustive enumeration");
  orc->add_option("--f0", f0, "face kept fixed for the lattice comparison");
  auto* gen = app.add_subcommand("gen", "generate maps");
  gen->require_subcommand(1);
  auto* grid = gen->add_subcommand("grid", "triangulated torus grid");
  grid->add_option("a", grid_a)->required();
  grid->add_option("b", grid_b)->required();
  auto* fix = gen->add_subcommand("fixture", "bundled fixture, or 'list'");
  fix->add_option("name", fixture_name)->required();
  auto* exp = app.add_subcommand("export-dot", "DOT drawing of a map, orientation or wood");
  add_input(exp, in, true, true);
  exp->add_option("--kind", dot_kind, "map, orientation or wood");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(in);
    if (*info) return cmd_info(in);
    if (*complete) return cmd_complete(in, emit_map);
    if (*check) return cmd_check(in);
    if (*label) return cmd_label(in);
    if (*wood) return cmd_wood(in, dot_path);
    if (*gam) return cmd_gamma(in, cycle_text);
    if (*lat) return cmd_lattice(in, f0, max_nodes, dot_path);
    if (*sz) return cmd_schnyderize(in, seed, orient_out, labeling_out, dot_path);
    if (*orc) return cmd_oracle(oracle_mode, in, exhaustive, f0);
    if (*grid) return cmd_gen_grid(grid_a, grid_b);
    if (*fix) return cmd_gen_fixture(fixture_name);
    if (*exp) return cmd_export_dot(in, dot_kind);
  } catch (const Error& e) {
    std::cout << "error " << e.what() << "\n";
    const bool budget = e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::IterationBudgetExceeded;
    return budget ? kBudgetExhausted : kValidationFailure;
  }
  return 1;
}
