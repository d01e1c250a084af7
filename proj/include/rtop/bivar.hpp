#pragma once

#include <string>
#include <vector>

#include "rtop/poly.hpp"

namespace rtop {

/// Dense polynomial in Z[t, s], stored as a polynomial in s whose
/// coefficients are IntPoly in t. Trailing zero rows/columns are trimmed.
/// The same type carries Z[u, v] polynomials for complex-parameter work.
class BivarIntPoly {
 public:
  BivarIntPoly() = default;
  // coeffs_by_s[j] is the coefficient of s^j.
  explicit BivarIntPoly(std::vector<IntPoly> coeffs_by_s);
  // Entry (i, j) is the coefficient of t^i s^j.
  static BivarIntPoly from_matrix(const std::vector<std::vector<mpz_class>>& by_t_then_s);
  static BivarIntPoly in_t(const IntPoly& p);
  static BivarIntPoly in_s(const IntPoly& p);
  static BivarIntPoly constant(const mpz_class& c);
  // p(t) q(s) - p(s) q(t)
  static BivarIntPoly difference_form(const IntPoly& p, const IntPoly& q);
  // t - s
  static BivarIntPoly diagonal();

  bool is_zero() const { return by_s_.empty(); }
  int deg_s() const { return static_cast<int>(by_s_.size()) - 1; }
  int deg_t() const;
  int total_degree() const;
  std::size_t term_count() const;
  mpz_class coeff(int i_t, int j_s) const;
  const std::vector<IntPoly>& by_s() const { return by_s_; }
  std::vector<std::vector<mpz_class>> to_matrix() const;

  BivarIntPoly swap_vars() const;
  // Integer content removed, sign fixed so the leading term (highest
  // t-degree, then highest s-degree) is positive.
  BivarIntPoly normalized() const;
  mpz_class integer_content() const;
  // gcd in Z[t] of the s-coefficients.
  IntPoly content_s() const;

  IntPoly eval_t(const mpz_class& t) const;       // polynomial in s
  IntPoly eval_s(const mpz_class& s) const;       // polynomial in t
  IntPoly diagonal_restriction() const;           // f(t, t)
  mpq_class eval(const mpq_class& t, const mpq_class& s) const;
  BigFloat eval(const BigFloat& t, const BigFloat& s) const;

  BivarIntPoly& operator+=(const BivarIntPoly& rhs);
  BivarIntPoly& operator-=(const BivarIntPoly& rhs);
  BivarIntPoly operator-() const;
  friend BivarIntPoly operator+(BivarIntPoly a, const BivarIntPoly& b) { return a += b; }
  friend BivarIntPoly operator-(BivarIntPoly a, const BivarIntPoly& b) { return a -= b; }
  friend BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b);
  friend BivarIntPoly operator*(const BivarIntPoly& a, const IntPoly& t_poly);
  friend BivarIntPoly operator*(const BivarIntPoly& a, const mpz_class& c);
  friend bool operator==(const BivarIntPoly& a, const BivarIntPoly& b) = default;

  std::string to_string(const std::string& tv = "t", const std::string& sv = "s") const;

 private:
  void trim();
  std::vector<IntPoly> by_s_;
};

// Exact division in Z[t, s]; throws std::domain_error when inexact.
BivarIntPoly divexact(const BivarIntPoly& a, const BivarIntPoly& b);
// Primitive gcd with deterministic sign; gcd(0, 0) = 0.
BivarIntPoly gcd_bivar(const BivarIntPoly& a, const BivarIntPoly& b);
BivarIntPoly gcd_bivar(const std::vector<BivarIntPoly>& polys);
// Res_s(a, b) in Z[t]. Picks the subresultant PRS for small inputs and a
// modular evaluation/interpolation path otherwise.
IntPoly resultant_s(const BivarIntPoly& a, const BivarIntPoly& b);
IntPoly resultant_s_subresultant(const BivarIntPoly& a, const BivarIntPoly& b);
IntPoly resultant_s_modular(const BivarIntPoly& a, const BivarIntPoly& b);

}  // namespace rtop
