#pragma once

#include <string>
#include <vector>

#include "rtop/curve.hpp"
#include "rtop/graph.hpp"

namespace rtop {

// Violated hypotheses of a space curve (empty when it can be analyzed as is).
std::vector<std::string> check_space_hypotheses(const Parametrization& c);

/// Where the generators of each planar vertex went.
struct LiftRecord {
  // lifted[v][j]: (space vertex id, generator index) of generator j of planar vertex v.
  std::vector<std::vector<std::pair<int, int>>> lifted;
};

// One space vertex per distinct z-value among the generators of each
// planar vertex. Planar isolated vertices are skipped.
TopologyGraph lift_vertices(const TopologyGraph& planar, const Parametrization& c, int digits, LiftRecord& record);
// Adds one space edge per planar edge.
void lift_edges(const TopologyGraph& planar, const LiftRecord& record, TopologyGraph& space);

}  // namespace rtop
