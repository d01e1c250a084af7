#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtop/algebraic.hpp"
#include "rtop/curve.hpp"

namespace rtop {

enum class VertexKind { kCritical, kOnline, kSample, kInfinity, kIsolated };

std::string to_string(VertexKind kind);
std::optional<VertexKind> vertex_kind_from_string(const std::string& s);

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::kSample;
  std::vector<BigFloat> coords;
  // Exact coordinate values where known (rational abscissas, P-infinity).
  std::vector<std::optional<mpq_class>> exact;
  // Ascending; -inf/+inf mark the point at infinity of the parametrization.
  std::vector<ParamValue> generators;
  // Isolated points: the generating parameter u + iv with v > 0.
  std::optional<Complex> complex_generator;
};

struct Edge {
  int from = 0;
  int to = -1;  // -1 for an unbounded ray
  int from_gen = 0;
  int to_gen = -1;
  ParamValue t_lo;  // ascending parameter interval
  ParamValue t_hi;
  bool bounded = true;
};

struct GraphMetadata {
  int dimension = 2;
  int digits_used = 10;
  int escalations = 0;
  std::vector<std::string> transforms;
  std::string isolated_mode = "off";
  std::optional<int> certified_count;
};

struct TopologyGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  GraphMetadata metadata;

  int degree(int vertex_id) const;
  int unbounded_edges() const;
  // Components of the vertex/edge graph, rays included with their vertex.
  int connected_components() const;
  const Vertex* find(int id) const;
};

// Replaces coordinates by their images in the original frame of `applied`.
void map_to_original_frame(TopologyGraph& g, const std::vector<Transform>& applied);

}  // namespace rtop
