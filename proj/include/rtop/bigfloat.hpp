#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <optional>
#include <string>

namespace rtop {

// Mantissa bits for a working precision of `digits` decimal digits, with
// guard bits so that rounding in long Horner chains stays below 10^-digits.
mpfr_prec_t bits_for_digits(int digits);

/// Owning wrapper over an mpfr_t. Arithmetic results take the larger of the
/// operand precisions and are rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(int value, mpfr_prec_t prec) : BigFloat(static_cast<long>(value), prec) {}
  BigFloat(long value, mpfr_prec_t prec);
  BigFloat(double value, mpfr_prec_t prec);
  BigFloat(const mpz_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  // Exact value of the binary float.
  mpq_class to_rational() const;
  // Shortest "%g"-style rendering with `digits` significant digits.
  std::string to_string(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  static BigFloat abs(const BigFloat& x);
  static BigFloat sqrt(const BigFloat& x);
  static BigFloat pow10(long exponent, mpfr_prec_t prec);

 private:
  void ensure_precision(mpfr_prec_t prec);

  mpfr_t value_;
};

/// Complex number with BigFloat parts.
struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  Complex conj() const { return Complex(re, -im); }
  BigFloat norm() const;  // |z|^2
  BigFloat abs() const;
};

/// Interval with exact rational endpoints, lo <= hi.
struct Interval {
  mpq_class lo;
  mpq_class hi;

  Interval() = default;
  Interval(mpq_class l, mpq_class h);
  static Interval point(const mpq_class& v) { return Interval(v, v); }

  mpq_class width() const { return hi - lo; }
  mpq_class midpoint() const { return (lo + hi) / 2; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  // +1 / -1 when the interval is strictly positive / negative.
  std::optional<int> strict_sign() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) = default;
};

/// Outward-rounded interval over BigFloat endpoints; the fast carrier used
/// when enclosing values at algebraic points.
struct FloatInterval {
  BigFloat lo;
  BigFloat hi;

  explicit FloatInterval(mpfr_prec_t prec = 64) : lo(prec), hi(prec) {}
  FloatInterval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}
  FloatInterval(const mpz_class& v, mpfr_prec_t prec);
  FloatInterval(const mpq_class& v, mpfr_prec_t prec);
  FloatInterval(const Interval& iv, mpfr_prec_t prec);

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  std::optional<int> strict_sign() const;
  BigFloat width() const;
  BigFloat midpoint() const;
  // max(|lo|, |hi|)
  BigFloat magnitude() const;
  bool overlaps(const FloatInterval& other) const { return !(hi < other.lo || other.hi < lo); }

  friend FloatInterval operator+(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator-(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator*(const FloatInterval& a, const FloatInterval& b);
  // Requires b not to contain zero.
  friend FloatInterval operator/(const FloatInterval& a, const FloatInterval& b);
};

}  // namespace rtop
