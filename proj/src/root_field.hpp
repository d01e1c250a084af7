#pragma once

// Arithmetic in Q(u0) for a real algebraic u0, by dynamic evaluation: the
// defining polynomial is replaced by the factor vanishing at u0 whenever a
// zero divisor shows up.

#include <memory>
#include <vector>

#include "rtop/algebraic.hpp"

namespace rtop {

using QPoly = std::vector<mpq_class>;  // ascending coefficients, trimmed

QPoly to_qpoly(const IntPoly& p);
// Positive multiple with integer coefficients.
IntPoly clear_denominators(const QPoly& p);

class RootField {
 public:
  RootField(IntPoly f, Interval iv);

  QPoly reduce(const QPoly& a) const;
  bool is_zero(const QPoly& a);
  // Sign at u0; 0 exactly when is_zero.
  int sign(const QPoly& a);
  QPoly add(const QPoly& a, const QPoly& b) const;
  QPoly sub(const QPoly& a, const QPoly& b) const;
  QPoly mul(const QPoly& a, const QPoly& b) const;
  // Requires a(u0) != 0.
  QPoly inv(const QPoly& a);

  const IntPoly& modulus() const { return f_; }

 private:
  IntPoly f_;
  std::shared_ptr<AlgebraicReal> root_;
};

/// An element of a RootField, with the operators the signature routine needs.
struct FieldElem {
  QPoly v;
  RootField* k = nullptr;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.k->add(a.v, b.v), a.k}; }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.k->sub(a.v, b.v), a.k}; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return {a.k->mul(a.v, b.v), a.k}; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return {a.k->mul(a.v, a.k->inv(b.v)), a.k}; }
};

// Polynomials in one variable over a RootField, ascending coefficients.
using FieldPoly = std::vector<QPoly>;

void trim(RootField& k, FieldPoly& p);
FieldPoly rem(RootField& k, const FieldPoly& a, const FieldPoly& b);
FieldPoly quo(RootField& k, const FieldPoly& a, const FieldPoly& b);
FieldPoly gcd(RootField& k, FieldPoly a, FieldPoly b);
FieldPoly derivative(const RootField& k, const FieldPoly& p);

// Number of distinct positive real roots of a square-free p (p(0) != 0)
// through the signatures of the Hermite forms for 1 and w.
int positive_root_count(RootField& k, const FieldPoly& p);

}  // namespace rtop
