#pragma once

#include <vector>

#include "rtop/poly.hpp"

namespace rtop {

/// A real root of `defining_poly` (square-free, primitive). Either an open
/// isolating interval whose endpoints are not roots, or a degenerate
/// interval [r, r] when the root is the rational r.
struct IsolatingInterval {
  IntPoly defining_poly;
  Interval interval;
  int multiplicity_in_original = 1;

  bool is_exact() const { return interval.lo == interval.hi; }
};

// Distinct real roots, ascending, with multiplicities from the square-free
// decomposition. Each defining polynomial is the matching square-free factor.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& a);
// Isolating intervals for the real roots of a square-free polynomial.
std::vector<Interval> isolate_squarefree(const IntPoly& sqfree);

// Shrinks to width <= `width` by bisection; exact once a midpoint is a root.
IsolatingInterval refine(IsolatingInterval r, const mpq_class& width);
void refine_root(const IntPoly& sqfree, Interval& iv, const mpq_class& width);

// Distinct real roots in the closed interval, by a Sturm sequence.
int count_real_roots_in(const IntPoly& a, const Interval& iv);
int count_real_roots(const IntPoly& a);
std::vector<IntPoly> sturm_sequence(const IntPoly& a);

// Signature of the Hankel matrix of Newton power sums: the number of
// distinct real roots.
int hermite_count_univariate(const IntPoly& a);
std::vector<mpq_class> newton_power_sums(const IntPoly& a, int count);
int signature(const std::vector<std::vector<mpq_class>>& symmetric);

// log2 of a power of two strictly above every root modulus.
unsigned root_bound_log2(const IntPoly& a);

/// Working precision with the escalation policy: start at `digits`, add
/// `escalation_step` on each retry, never exceed `max_digits`.
struct PrecisionContext {
  int digits = 10;
  int max_digits = 500;
  int escalation_step = 5;

  bool can_escalate() const { return digits + escalation_step <= max_digits; }
  // Throws Error(kPrecisionExhausted) when the cap would be exceeded.
  void escalate();
  mpfr_prec_t bits() const { return bits_for_digits(digits); }
};

}  // namespace rtop
