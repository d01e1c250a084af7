#include "rtop/graph.hpp"

#include <numeric>

namespace rtop {

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kCritical:
      return "critical";
    case VertexKind::kOnline:
      return "online";
    case VertexKind::kSample:
      return "sample";
    case VertexKind::kInfinity:
      return "infinity";
    case VertexKind::kIsolated:
      return "isolated";
  }
  return "";
}

std::optional<VertexKind> vertex_kind_from_string(const std::string& s) {
  for (auto k : {VertexKind::kCritical, VertexKind::kOnline, VertexKind::kSample, VertexKind::kInfinity, VertexKind::kIsolated}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

int TopologyGraph::degree(int vertex_id) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.from == vertex_id) ++d;
    if (e.to == vertex_id) ++d;
  }
  return d;
}

int TopologyGraph::unbounded_edges() const {
  int n = 0;
  for (const auto& e : edges) n += e.bounded ? 0 : 1;
  return n;
}

const Vertex* TopologyGraph::find(int id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

int TopologyGraph::connected_components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto index = [&](int id) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].id == id) return i;
    }
    return vertices.size();
  };
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& e : edges) {
    if (e.to < 0) continue;
    const std::size_t a = index(e.from);
    const std::size_t b = index(e.to);
    if (a < vertices.size() && b < vertices.size()) parent[root(a)] = root(b);
  }
  int n = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) n += root(i) == i ? 1 : 0;
  return n;
}

void map_to_original_frame(TopologyGraph& g, const std::vector<Transform>& applied) {
  if (applied.empty()) return;
  for (auto& v : g.vertices) {
    v.coords = to_original_frame(applied, v.coords);
    bool all_exact = true;
    for (const auto& e : v.exact) all_exact = all_exact && e.has_value();
    if (all_exact && !v.exact.empty()) {
      std::vector<mpq_class> ex;
      for (const auto& e : v.exact) ex.push_back(*e);
      ex = to_original_frame(applied, ex);
      for (std::size_t i = 0; i < ex.size(); ++i) v.exact[i] = ex[i];
    } else {
      for (auto& e : v.exact) e.reset();
    }
  }
  for (const auto& t : applied) g.metadata.transforms.push_back(t.describe());
}

}  // namespace rtop
