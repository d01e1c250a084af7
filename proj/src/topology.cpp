#include "rtop/topology.hpp"

#include <algorithm>

#include "rtop/error.hpp"
#include "rtop/isolated.hpp"
#include "rtop/planar.hpp"
#include "rtop/space.hpp"

namespace rtop {

std::string to_string(IsolatedMode mode) {
  switch (mode) {
    case IsolatedMode::kOff:
      return "off";
    case IsolatedMode::kNumeric:
      return "numeric";
    case IsolatedMode::kCertified:
      return "certified";
  }
  return "";
}

std::optional<IsolatedMode> isolated_mode_from_string(const std::string& s) {
  for (auto m : {IsolatedMode::kOff, IsolatedMode::kNumeric, IsolatedMode::kCertified}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

namespace {

PlanarOptions planar_options(const AnalyzeOptions& opts) {
  PlanarOptions p;
  p.digits = opts.digits;
  p.max_digits = opts.max_digits;
  p.inject_failures = opts.inject_failures;
  return p;
}

// Appends isolated vertices of `c` (plane or space) to `g`.
void add_isolated(const Parametrization& c, const IntPoly& m, const CriticalData& d, const AnalyzeOptions& opts, const std::optional<int>& certified,
                  TopologyGraph& g, int digits) {
  g.metadata.isolated_mode = to_string(opts.isolated);
  if (opts.isolated == IsolatedMode::kOff) return;
  const auto real_roots = static_cast<std::size_t>(std::count_if(d.special.begin(), d.special.end(), [](const SpecialValue& s) { return !s.pole; }));
  IsolatedReport report;
  if (certified) {
    report = c.dimension() == 2 ? isolated_certified_2d(c, m, g, *certified, digits, real_roots)
                                : isolated_certified_3d(c, m, g, *certified, digits, real_roots);
  } else {
    report = isolated_numeric(c, m, g, digits, real_roots);
  }
  g.metadata.certified_count = report.certified_count;
  for (auto& v : report.points) g.vertices.push_back(std::move(v));
}

std::optional<int> certified_count(const Parametrization& c, const AnalyzeOptions& opts) {
  if (opts.isolated != IsolatedMode::kCertified) return std::nullopt;
  return certified_solution_count(c);
}

}  // namespace

TopologyGraph build_plane_graph(const Parametrization& prepared, const AnalyzeOptions& opts) {
  const IntPoly m = critical_polynomial(prepared);
  const std::optional<int> certified = certified_count(prepared, opts);
  return with_escalation(planar_options(opts), [&](int digits) {
    const CriticalData d = critical_points(prepared, m, digits);
    TopologyGraph g = build_graph(prepared, d, digits);
    g.metadata.dimension = 2;
    add_isolated(prepared, m, d, opts, certified, g, digits);
    return g;
  });
}

TopologyGraph build_space_graph(const Parametrization& prepared, const AnalyzeOptions& opts) {
  const Parametrization projection = prepared.projection();
  const IntPoly m = critical_polynomial(projection);
  const std::optional<int> certified = certified_count(prepared, opts);
  return with_escalation(planar_options(opts), [&](int digits) {
    const CriticalData d = critical_points(projection, m, digits);
    const TopologyGraph planar = build_graph(projection, d, digits);
    LiftRecord record;
    TopologyGraph g = lift_vertices(planar, prepared, digits, record);
    lift_edges(planar, record, g);
    validate_graph(g);
    add_isolated(prepared, m, d, opts, certified, g, digits);
    return g;
  });
}

Analysis analyze(const Parametrization& c, const AnalyzeOptions& opts) {
  Parametrization prepared = prepare(c);
  TopologyGraph g = prepared.dimension() == 2 ? build_plane_graph(prepared, opts) : build_space_graph(prepared, opts);
  map_to_original_frame(g, prepared.transforms());
  return {std::move(prepared), std::move(g)};
}

}  // namespace rtop
