#pragma once

#include <initializer_list>

#include "rtop/bivar.hpp"
#include "rtop/curve.hpp"
#include "rtop/poly.hpp"
#include "rtop/ratfunc.hpp"

namespace testing {

inline rtop::RatFunc poly(std::initializer_list<long> c) { return rtop::RatFunc::polynomial(rtop::IntPoly(c)); }
inline rtop::RatFunc ratio(std::initializer_list<long> num, std::initializer_list<long> den) {
  return rtop::RatFunc(rtop::IntPoly(num), rtop::IntPoly(den));
}

inline rtop::Parametrization unit_circle() { return rtop::Parametrization({ratio({1, 0, -1}, {1, 0, 1}), ratio({0, 2}, {1, 0, 1})}); }
inline rtop::Parametrization isolated_cubic() { return rtop::Parametrization({poly({1, 0, 1}), poly({0, 1, 0, 1})}); }

// Bivariate polynomial from (t-degree, s-degree, coefficient) triples.
inline rtop::BivarIntPoly bivar(std::initializer_list<std::tuple<int, int, long>> terms) {
  int dt = 0;
  int ds = 0;
  for (const auto& [i, j, c] : terms) {
    dt = std::max(dt, i);
    ds = std::max(ds, j);
  }
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(dt) + 1, std::vector<mpz_class>(static_cast<std::size_t>(ds) + 1));
  for (const auto& [i, j, c] : terms) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += c;
  return rtop::BivarIntPoly::from_matrix(m);
}

inline bool same_up_to_sign(const rtop::BivarIntPoly& a, const rtop::BivarIntPoly& b) { return a == b || a == -b; }

}  // namespace testing
