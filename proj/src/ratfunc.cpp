#include "rtop/ratfunc.hpp"

#include <algorithm>

#include "rtop/error.hpp"

namespace rtop {

namespace {

IntPoly divide_integer(const IntPoly& p, const mpz_class& c) {
  std::vector<mpz_class> v = p.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

[[noreturn]] void pole() { throw Error(ErrorCode::kInvalidArgument, "pole"); }

}  // namespace

RatFunc::RatFunc(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (num.is_zero()) {
    num_ = IntPoly();
    den_ = IntPoly{1};
    return;
  }
  IntPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  mpz_class c = gcd(num.content(), den.content());
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = divide_integer(num, c);
    den = divide_integer(den, c);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

mpq_class RatFunc::eval(const mpq_class& t) const {
  mpq_class d = den_.eval(t);
  if (d == 0) pole();
  return num_.eval(t) / d;
}

BigFloat RatFunc::eval(const BigFloat& t) const {
  BigFloat d = den_.eval(t);
  if (d.is_zero()) pole();
  return num_.eval(t) / d;
}

Complex RatFunc::eval(const Complex& t) const {
  Complex d = den_.eval(t);
  if (d.re.is_zero() && d.im.is_zero()) pole();
  return num_.eval(t) / d;
}

Interval RatFunc::eval(const Interval& t) const {
  Interval d = den_.eval(t);
  if (!d.strict_sign()) pole();
  Interval n = num_.eval(t);
  mpq_class a = n.lo / d.lo;
  mpq_class b = n.lo / d.hi;
  mpq_class c = n.hi / d.lo;
  mpq_class e = n.hi / d.hi;
  return Interval(std::min({a, b, c, e}), std::max({a, b, c, e}));
}

FloatInterval RatFunc::eval(const FloatInterval& t) const {
  FloatInterval d = den_.eval(t);
  if (!d.strict_sign()) pole();
  return num_.eval(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const mpq_class& c, const RatFunc& a) {
  return RatFunc(a.num_ * c.get_num(), a.den_ * c.get_den());
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial() && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

IntPoly derivative_numerator(const RatFunc& f) {
  const IntPoly& p = f.num();
  const IntPoly& q = f.den();
  IntPoly num = p.derivative() * q - p * q.derivative();
  if (num.is_zero() || q.degree() == 0) return num;
  // Cancel only even powers of common factors so the sign of f' survives.
  IntPoly g = gcd(num, q * q);
  if (g.degree() <= 0) return num;
  IntPoly even{1};
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    for (int k = 0; k < 2 * (mult / 2); ++k) even *= factor;
  }
  return even.degree() > 0 ? divexact(num, even) : num;
}

}  // namespace rtop
