#pragma once

#include <vector>

#include "rtop/poly.hpp"

namespace rtop {

// All complex roots of a (with multiplicity) by simultaneous Aberth
// iteration: a long double pass seeded from the Newton polygon, then a
// polish at `bits` of precision.
std::vector<Complex> complex_roots(const IntPoly& a, mpfr_prec_t bits);

// Roots whose imaginary part is at most 10^-digits * max(1, |z|), counted
// from complex_roots at the working precision for `digits`.
int numeric_real_root_count(const IntPoly& a, int digits);

}  // namespace rtop
