#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rtop/curve.hpp"
#include "rtop/graph.hpp"

namespace rtop {

/// A parsed input document.
struct InputSpec {
  Parametrization curve;
  std::optional<int> digits;
  std::optional<std::string> isolated;
};

// Errors: Error(kParse) naming the offending field.
InputSpec parse_input(const std::string& text);

// Coefficient list: ascending degree, integers as numbers or decimal strings.
std::string encode_curve(const Parametrization& c);

/// Serialized form of a TopologyGraph; every number is kept as text so a
/// parse/serialize cycle reproduces the bytes.
struct DocExact {
  int generator = 0;
  std::vector<std::string> poly;  // ascending coefficients
  std::string lo;
  std::string hi;
};

struct DocVertex {
  int id = 0;
  std::vector<std::string> coords;
  std::string kind;
  std::vector<std::string> generators;
  std::vector<DocExact> exact;
  std::optional<std::array<std::string, 2>> complex_generator;
};

struct DocEdge {
  int from = 0;
  std::optional<int> to;
  std::string t_from;
  std::string t_to;
  bool bounded = true;
};

struct GraphDocument {
  int dimension = 2;
  std::vector<DocVertex> vertices;
  std::vector<DocEdge> edges;
  int digits_used = 10;
  int escalations = 0;
  std::vector<std::string> transforms;
  std::string isolated_mode;
  std::optional<int> certified_count;
};

GraphDocument to_document(const TopologyGraph& g);
std::string serialize(const GraphDocument& doc);
// Errors: Error(kParse).
GraphDocument parse_document(const std::string& text);

std::string emit_json(const TopologyGraph& g);
std::string emit_dot(const TopologyGraph& g);

// Bounded edges become polylines through `refine` extra curve points;
// rays are clipped to the drawing box. Space curves use an axonometric view.
std::string render_svg(const TopologyGraph& g, const Parametrization& original, int refine);

}  // namespace rtop
