#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "rtop/ratfunc.hpp"
#include "rtop/realroots.hpp"

namespace rtop {

/// A real number known through a rational bracket that can be shrunk on
/// demand. Brackets are cached, so refinement is logically const.
class RealRoot {
 public:
  virtual ~RealRoot() = default;
  // Current bracket; degenerate when the value is known exactly.
  virtual Interval bracket() const = 0;
  // Shrinks the bracket to width <= w, or to a point.
  virtual void refine(const mpq_class& w) const = 0;
  // Square-free integer polynomial vanishing at the value, when known.
  virtual const IntPoly* defining_poly() const { return nullptr; }

  bool is_exact() const;
  std::optional<mpq_class> exact_value() const;
  // Midpoint of a bracket refined to relative width 2^-bits.
  BigFloat approx(mpfr_prec_t bits) const;
  // Bracket refined to width <= 2^-bits * max(1, |value|), as floats.
  FloatInterval enclosure(mpfr_prec_t bits) const;
};

/// Root of a square-free integer polynomial in an isolating bracket.
class AlgebraicReal : public RealRoot {
 public:
  AlgebraicReal(IntPoly poly, Interval iv);
  static std::shared_ptr<AlgebraicReal> from(const IsolatingInterval& r);
  static std::shared_ptr<AlgebraicReal> rational(const mpq_class& v);

  Interval bracket() const override { return iv_; }
  void refine(const mpq_class& w) const override;
  const IntPoly* defining_poly() const override { return &poly_; }

  // Exact sign of f at the root.
  int sign_of(const IntPoly& f) const;
  // Exact equality test via the gcd of the defining polynomials.
  bool equals(const AlgebraicReal& other) const;

 private:
  IntPoly poly_;
  mutable Interval iv_;
};

/// The unique t in a bracket where a strictly monotone rational function
/// f reaches a level, the level being a rational or f at an algebraic point.
class LevelRoot : public RealRoot {
 public:
  LevelRoot(RatFunc f, Interval bracket, mpq_class level, mpfr_prec_t cap_bits);
  LevelRoot(RatFunc f, Interval bracket, std::shared_ptr<const RealRoot> anchor, mpfr_prec_t cap_bits);

  Interval bracket() const override { return iv_; }
  void refine(const mpq_class& w) const override;

 private:
  // Sign of f(t) - level at a rational t; 0 when equal up to cap_bits.
  int side(const mpq_class& t) const;

  RatFunc f_;
  mutable Interval iv_;
  std::optional<mpq_class> level_;
  std::shared_ptr<const RealRoot> anchor_;
  mpfr_prec_t cap_bits_;
  mutable int lo_side_ = 0;
};

/// A generator of a curve point: a finite real parameter or one of -inf, +inf.
class ParamValue {
 public:
  enum class Kind { kMinusInf, kFinite, kPlusInf };

  ParamValue() = default;
  static ParamValue minus_inf() { return ParamValue(Kind::kMinusInf, nullptr); }
  static ParamValue plus_inf() { return ParamValue(Kind::kPlusInf, nullptr); }
  static ParamValue finite(std::shared_ptr<const RealRoot> root) { return ParamValue(Kind::kFinite, std::move(root)); }
  static ParamValue rational(const mpq_class& v) { return finite(AlgebraicReal::rational(v)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  const RealRoot& root() const { return *root_; }
  const std::shared_ptr<const RealRoot>& root_ptr() const { return root_; }

  // Decimal string at `digits` significant digits, or "-inf" / "+inf".
  std::string to_string(int digits) const;

 private:
  ParamValue(Kind k, std::shared_ptr<const RealRoot> r) : kind_(k), root_(std::move(r)) {}
  Kind kind_ = Kind::kMinusInf;
  std::shared_ptr<const RealRoot> root_;
};

// Total order: -inf < finite < +inf. Finite values are separated by
// refinement; equality is reported for shared roots, equal rationals and
// algebraic numbers with a common root in both brackets.
int compare(const ParamValue& a, const ParamValue& b);
int compare(const RealRoot& a, const RealRoot& b);
int compare(const RealRoot& a, const mpq_class& b);

// A real value presented by enclosures at increasing precision.
using Enclosure = std::function<FloatInterval(mpfr_prec_t)>;

// Numeric comparison with tolerance 10^-digits * max(1, |value|): values
// whose enclosures still overlap at that width count as equal.
int compare_numeric(const Enclosure& a, const Enclosure& b, int digits);

// Enclosure of f at a root (refining until the denominator is nonzero).
FloatInterval enclose(const RatFunc& f, const RealRoot& r, mpfr_prec_t bits);
Enclosure value_of(const RatFunc& f, std::shared_ptr<const RealRoot> r);
Enclosure constant(const mpq_class& v);

// Simplest rational (smallest denominator, then numerator) in the open
// interval (lo, hi).
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi);

}  // namespace rtop
