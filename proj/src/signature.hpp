#pragma once

// Signature of a symmetric matrix by congruence (symmetric Gaussian
// elimination). F is a field type; ops supplies zero test and sign.

#include <utility>
#include <vector>

namespace rtop::linalg {

template <class F, class Ops>
int signature(std::vector<std::vector<F>> a, Ops& ops) {
  std::vector<std::size_t> active(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) active[i] = i;
  int pos = 0;
  int neg = 0;
  while (!active.empty()) {
    std::size_t pivot_slot = active.size();
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (!ops.is_zero(a[active[s]][active[s]])) {
        pivot_slot = s;
        break;
      }
    }
    if (pivot_slot == active.size()) {
      // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal.
      bool found = false;
      for (std::size_t s = 0; s < active.size() && !found; ++s) {
        for (std::size_t r = s + 1; r < active.size() && !found; ++r) {
          const std::size_t i = active[s];
          const std::size_t j = active[r];
          if (ops.is_zero(a[i][j])) continue;
          for (std::size_t k : active) a[i][k] = a[i][k] + a[j][k];
          for (std::size_t k : active) a[k][i] = a[k][i] + a[k][j];
          pivot_slot = s;
          found = true;
        }
      }
      if (!found) break;
    }
    const std::size_t p = active[pivot_slot];
    const F d = a[p][p];
    if (ops.sign(d) > 0) {
      ++pos;
    } else {
      ++neg;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_slot));
    for (std::size_t i : active) {
      if (ops.is_zero(a[i][p])) continue;
      const F f = a[i][p] / d;
      for (std::size_t k : active) a[i][k] = a[i][k] - f * a[p][k];
    }
  }
  return pos - neg;
}

}  // namespace rtop::linalg
