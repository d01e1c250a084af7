#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rtop/bigfloat.hpp"

namespace rtop {

/// Dense univariate polynomial over the integers, ascending degree.
/// The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int degree);
  // den * t - num for the rational num/den
  static IntPoly linear_root(const mpq_class& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of t^i (zero beyond the degree).
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;

  mpz_class content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  // t^deg * p(1/t)
  IntPoly reversed() const;
  // p(t + shift)
  IntPoly taylor_shift(const mpz_class& shift) const;
  // 2^(k*deg) p(t / 2^k) for k >= 0, i.e. coefficient i scaled by 2^(k*(deg-i)).
  IntPoly scale_down(unsigned k) const;
  // p(c t)
  IntPoly scale_arg(const mpz_class& c) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& c);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator*(const mpz_class& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  // Sign of p(x) computed exactly.
  int sign_at(const mpq_class& x) const;
  BigFloat eval(const BigFloat& x) const;
  Complex eval(const Complex& x) const;
  Interval eval(const Interval& x) const;
  FloatInterval eval(const FloatInterval& x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Exact division; throws std::domain_error when b does not divide a in Z[t].
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Quotient and remainder over Q, scaled: returns (q, r) with lc(b)^(deg a - deg b + 1) a = q b + r.
std::pair<IntPoly, IntPoly> pseudo_divide(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// True when b divides a exactly in Z[t].
bool divides(const IntPoly& b, const IntPoly& a);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly lcm(const IntPoly& a, const IntPoly& b);
// a / gcd(a, a'), primitive, positive leading coefficient. Throws on zero input.
IntPoly squarefree_part(const IntPoly& a);
// Yun decomposition: factors f_i (primitive, positive leading) with
// pp(a) = prod f_i^i; entries with constant f_i are omitted.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);
// Resultant of two univariate integer polynomials.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// Sum of absolute values of the coefficients.
mpz_class norm1(const IntPoly& a);

}  // namespace rtop
