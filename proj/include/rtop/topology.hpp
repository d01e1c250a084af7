#pragma once

#include <optional>
#include <string>

#include "rtop/curve.hpp"
#include "rtop/graph.hpp"

namespace rtop {

enum class IsolatedMode { kOff, kNumeric, kCertified };

std::string to_string(IsolatedMode mode);
std::optional<IsolatedMode> isolated_mode_from_string(const std::string& s);

struct AnalyzeOptions {
  int digits = 10;
  int max_digits = 500;
  IsolatedMode isolated = IsolatedMode::kNumeric;
  // Attempts forced to fail validation, to exercise precision escalation.
  int inject_failures = 0;
};

// Graphs of a prepared curve, in its own frame.
TopologyGraph build_plane_graph(const Parametrization& prepared, const AnalyzeOptions& opts);
TopologyGraph build_space_graph(const Parametrization& prepared, const AnalyzeOptions& opts);

struct Analysis {
  Parametrization prepared;
  TopologyGraph graph;  // coordinates in the input frame
};

// Checks and repairs the hypotheses, builds the graph and maps it back.
// Errors: kImproper, kRepairFailed, kPrecisionExhausted, kDegenerateSystem.
Analysis analyze(const Parametrization& c, const AnalyzeOptions& opts);

}  // namespace rtop
