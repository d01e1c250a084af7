#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rtop/algebraic.hpp"
#include "rtop/curve.hpp"
#include "rtop/graph.hpp"

namespace rtop {

// squarefree(M N) with the roots of q~ removed; primitive, positive leading
// coefficient. M = Res_s(G1, G2), N the numerator of x'.
IntPoly critical_polynomial(const Parametrization& c);

/// A real t that is special for the x-projection: a root of m or a pole of x.
struct SpecialValue {
  std::shared_ptr<AlgebraicReal> t;
  bool pole = false;
  bool x_critical = false;  // x'(t) = 0
  int line = -1;            // index of its critical line (roots of m)
};

/// A vertical line x = a through critical points (or P-infinity).
struct CriticalLine {
  std::optional<mpq_class> level;          // exact abscissa when rational
  std::shared_ptr<const RealRoot> anchor;  // otherwise a = x(anchor)
  Enclosure x;
  std::vector<int> members;  // indices into CriticalData::special (roots of m)
  bool has_infinity = false;
};

struct CriticalData {
  IntPoly m;
  IntPoly n;  // numerator of x'
  std::vector<SpecialValue> special;  // ascending
  std::vector<CriticalLine> lines;    // ascending abscissas
  InfinityPoint infinity;
};

// Real roots of m, poles of x, the point at infinity and the distinct
// critical abscissas, compared at `digits`.
CriticalData critical_points(const Parametrization& c, const IntPoly& m, int digits);

/// A parameter value on a vertical line and the y-value it produces.
struct LinePoint {
  ParamValue t;
  Enclosure y;
  bool special = false;  // a root of m
};

// Points of the curve on critical line `index`, ascending in t.
std::vector<LinePoint> points_on_critical_line(const Parametrization& c, const CriticalData& data, int index, int digits);
// Points on the non-critical line x = a (exact), ascending in t.
std::vector<LinePoint> points_on_line(const Parametrization& c, const mpq_class& a);

// The generator on the adjacent line reached from t_a; `v_b` ascending.
// Throws Error(kMatchingFailure) when the required value does not exist.
std::size_t connect(const ParamValue& t_a, int x_prime_sign, bool toward_right, const std::vector<ParamValue>& v_b);

struct PlanarOptions {
  int digits = 10;
  int max_digits = 500;
  // Number of attempts forced to fail validation (exercises escalation).
  int inject_failures = 0;
};

// One attempt at fixed precision. Throws Error(kMatchingFailure) when a
// validation predicate fails.
TopologyGraph build_graph(const Parametrization& c, const CriticalData& data, int digits);

// Runs `attempt(digits)` with escalation on matching failures.
TopologyGraph with_escalation(const PlanarOptions& opts, const std::function<TopologyGraph(int)>& attempt);

// Topology graph of a prepared plane curve, in its own frame.
TopologyGraph planar_topology(const Parametrization& c, const PlanarOptions& opts);

// Degree of every vertex equals 2 per finite generator plus 1 per infinite
// one, and each generator has matching edge ends.
void validate_graph(const TopologyGraph& g);

}  // namespace rtop
