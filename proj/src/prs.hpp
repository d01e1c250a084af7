#pragma once

// Polynomial remainder sequences over an integral domain D, with polynomials
// stored as ascending coefficient vectors over D. Instantiated for D = Z
// (mpz_class) and D = Z[t] (IntPoly).

#include <stdexcept>
#include <utility>
#include <vector>

#include "rtop/poly.hpp"

namespace rtop::prs {

inline bool is_zero(const mpz_class& c) { return c == 0; }
inline bool is_zero(const IntPoly& c) { return c.is_zero(); }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divexact(a, b); }

template <class D>
D one() {
  if constexpr (std::is_same_v<D, IntPoly>) {
    return IntPoly::constant(1);
  } else {
    return D(1);
  }
}

template <class D>
D power(D base, unsigned e) {
  D r = one<D>();
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return r;
}

template <class D>
void trim(std::vector<D>& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class D>
int degree(const std::vector<D>& a) {
  return static_cast<int>(a.size()) - 1;
}

// lc(b)^(deg a - deg b + 1) * a mod b
template <class D>
std::vector<D> prem(std::vector<D> a, const std::vector<D>& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
  const int db = degree(b);
  int da = degree(a);
  if (da < db) return a;
  const D& lb = b.back();
  int steps = da - db + 1;
  while (da >= db && !a.empty()) {
    D lead = a.back();
    for (auto& c : a) c = c * lb;
    const int shift = da - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = a[shift + i] - lead * b[i];
    a.pop_back();
    trim(a);
    --steps;
    da = degree(a);
  }
  // Remaining multiplications by lc(b) for skipped degrees.
  if (steps > 0 && !a.empty()) {
    D f = power(lb, static_cast<unsigned>(steps));
    for (auto& c : a) c = c * f;
  }
  return a;
}

// Subresultant-PRS resultant (Collins / Brown-Traub) over D.
template <class D>
D resultant(std::vector<D> a, std::vector<D> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return D();
  bool negate = false;
  if (degree(a) < degree(b)) {
    if ((degree(a) & 1) && (degree(b) & 1)) negate = !negate;
    std::swap(a, b);
  }
  if (degree(b) == 0) {
    D r = power(b[0], static_cast<unsigned>(degree(a)));
    return negate ? D() - r : r;
  }
  D g = one<D>();
  D h = one<D>();
  while (true) {
    const int da = degree(a);
    const int db = degree(b);
    const int delta = da - db;
    if ((da & 1) && (db & 1)) negate = !negate;
    std::vector<D> r = prem(a, b);
    a = std::move(b);
    if (r.empty()) return D();
    D divisor = g * power(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    if (degree(b) == 0) break;
  }
  const int da = degree(a);
  D res = exact_div(power(b[0], static_cast<unsigned>(da)), power(h, static_cast<unsigned>(da - 1)));
  return negate ? D() - res : res;
}

}  // namespace rtop::prs
