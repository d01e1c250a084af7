#pragma once

#include <string>

#include "rtop/poly.hpp"

namespace rtop {

/// Reduced quotient num/den of integer polynomials. The denominator has a
/// positive leading coefficient and num, den share no integer content.
class RatFunc {
 public:
  RatFunc() : num_(), den_{1} {}
  // Throws Error(kInvalidArgument) when den is identically zero.
  RatFunc(IntPoly num, IntPoly den);
  static RatFunc polynomial(IntPoly p) { return RatFunc(std::move(p), IntPoly{1}); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  // max(deg num, deg den)
  int degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }

  // Evaluation throws Error(kInvalidArgument, "pole") at a denominator root,
  // or when an interval enclosure of the denominator contains zero.
  mpq_class eval(const mpq_class& t) const;
  BigFloat eval(const BigFloat& t) const;
  Complex eval(const Complex& t) const;
  Interval eval(const Interval& t) const;
  FloatInterval eval(const FloatInterval& t) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const mpq_class& c, const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  IntPoly num_;
  IntPoly den_;
};

// Numerator N of f' with sign(N(t)) = sign(f'(t)) wherever den(t) != 0.
IntPoly derivative_numerator(const RatFunc& f);

}  // namespace rtop
