#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "rtop/bivar.hpp"
#include "rtop/curve.hpp"

namespace rtop {

/// Implicit equation f(x, y) = 0 of a plane curve; x is the first variable.
struct ImplicitCurve {
  BivarIntPoly f;
  int total_degree = 0;
  std::size_t term_count = 0;
};

// Square-free primitive part of Res_t(p1 - x q1, p2 - y q2) with the
// factors in x alone or y alone removed. Returns nullopt once `budget`
// has elapsed.
std::optional<ImplicitCurve> implicitize(const Parametrization& c, std::chrono::milliseconds budget = std::chrono::seconds(120));

// |f| at a point; exactly zero when f vanishes at exact rational coordinates.
BigFloat check_vertex(const ImplicitCurve& f, const std::vector<BigFloat>& coords);
bool vanishes_exactly(const ImplicitCurve& f, const mpq_class& x, const mpq_class& y);

}  // namespace rtop
