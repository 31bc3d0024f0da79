#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schnyder/completion.hpp"
#include "schnyder/homology.hpp"
#include "schnyder/surface_map.hpp"

namespace schnyder {

// Contents of a text file. Recognized directives, one per line, `#` starts a comment:
//   darts N / edge d1 d2 / vertex d1 d2 ...   map
//   orient d                                  tail dart of an edge of the map
//   corient d                                 tail dart of a completion edge
//   angle d c                                 color of the angle at dart d
//   flow e v                                  flow value on edge e (others are 0)
struct Document {
  std::optional<SurfaceMap> map;
  std::optional<Orientation> orientation;
  std::optional<Orientation> completion_orientation;
  std::optional<AngleLabeling> labeling;
  std::optional<Flow> flow;
  std::vector<std::string> header;  // leading comment lines, without '#'
};

// `base` supplies the map when the text has no map directives.
Document parse_document(std::istream& in, const SurfaceMap* base = nullptr);
Document parse_document_string(const std::string& text, const SurfaceMap* base = nullptr);
Document read_document(const std::string& path, const SurfaceMap* base = nullptr);

void write_map(std::ostream& out, const SurfaceMap& map);
void write_orientation(std::ostream& out, const Orientation& d, const char* keyword = "orient");
void write_labeling(std::ostream& out, const AngleLabeling& l);
void write_flow(std::ostream& out, const Flow& f);
void write_basis(std::ostream& out, const CycleBasis& basis);

}  // namespace schnyder
