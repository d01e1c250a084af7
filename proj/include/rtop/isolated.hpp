#pragma once

#include <optional>
#include <vector>

#include "rtop/curve.hpp"
#include "rtop/graph.hpp"

namespace rtop {

/// Components evaluated at t = u + iv: p_k(t) conj(q_k(t)) = re + i im,
/// as polynomials in (u, v) stored with u as the first variable.
struct ComplexParts {
  std::vector<BivarIntPoly> re;
  std::vector<BivarIntPoly> im;
  std::vector<BivarIntPoly> norm;  // |q_k(u + iv)|^2
  BivarIntPoly norm_q_tilde;
};

ComplexParts complex_parts(const Parametrization& c);

/// A non-real parameter value with a real image.
struct IsolatedCandidate {
  Complex t;
  std::vector<BigFloat> point;
};

struct IsolatedReport {
  std::vector<IsolatedCandidate> candidates;  // both members of each conjugate pair
  std::vector<Vertex> points;                 // after exclusion and merging
  std::optional<int> certified_count;
};

// Non-real roots of m whose images are real at `digits`, minus points
// already carried by `g`, conjugates merged. Vertex ids continue g's.
// `real_roots` is the number of real roots of m when already known.
IsolatedReport isolated_numeric(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int digits,
                                std::optional<std::size_t> real_roots = std::nullopt);

// Number of real solutions (u, v), v != 0, of Im x = Im y (= Im z) = 0 away
// from the poles. Throws Error(kDegenerateSystem) for a positive-dimensional
// solution set.
int certified_solution_count(const Parametrization& c);

// Numeric report checked against the certified count; a disagreement
// throws Error(kMatchingFailure) so the caller can raise the precision.
IsolatedReport isolated_certified_2d(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int certified, int digits,
                                    std::optional<std::size_t> real_roots = std::nullopt);
IsolatedReport isolated_certified_3d(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int certified, int digits,
                                    std::optional<std::size_t> real_roots = std::nullopt);

}  // namespace rtop
