#include "rtop/algebraic.hpp"

#include <algorithm>

#include "rtop/error.hpp"

namespace rtop {

namespace {

constexpr long kSeparationLimitBits = 4000;

mpq_class pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? mpq_class(p) : mpq_class(1) / mpq_class(p);
}

mpq_class magnitude(const Interval& iv) { return std::max(abs(iv.lo), abs(iv.hi)); }

bool sign_change(const IntPoly& g, const Interval& iv) { return g.sign_at(iv.lo) * g.sign_at(iv.hi) < 0; }

}  // namespace

bool RealRoot::is_exact() const {
  Interval b = bracket();
  return b.lo == b.hi;
}

std::optional<mpq_class> RealRoot::exact_value() const {
  Interval b = bracket();
  if (b.lo == b.hi) return b.lo;
  return std::nullopt;
}

FloatInterval RealRoot::enclosure(mpfr_prec_t bits) const {
  const mpq_class scale = std::max(mpq_class(1), magnitude(bracket()));
  refine(pow2(-static_cast<long>(bits)) * scale);
  return FloatInterval(bracket(), bits + 32);
}

BigFloat RealRoot::approx(mpfr_prec_t bits) const { return enclosure(bits).midpoint(); }

AlgebraicReal::AlgebraicReal(IntPoly poly, Interval iv) : poly_(std::move(poly)), iv_(std::move(iv)) {}

std::shared_ptr<AlgebraicReal> AlgebraicReal::from(const IsolatingInterval& r) {
  if (r.is_exact()) return rational(r.interval.lo);
  return std::make_shared<AlgebraicReal>(r.defining_poly, r.interval);
}

std::shared_ptr<AlgebraicReal> AlgebraicReal::rational(const mpq_class& v) {
  return std::make_shared<AlgebraicReal>(IntPoly::linear_root(v), Interval::point(v));
}

void AlgebraicReal::refine(const mpq_class& w) const { refine_root(poly_, iv_, w); }

int AlgebraicReal::sign_of(const IntPoly& f) const {
  if (f.is_zero()) return 0;
  if (iv_.lo == iv_.hi) return f.sign_at(iv_.lo);
  if (f.degree() == 0) return sgn(f.leading());
  IntPoly g = gcd(poly_, f);
  if (g.degree() > 0 && sign_change(g, iv_)) return 0;
  mpfr_prec_t bits = 64;
  while (true) {
    if (iv_.lo == iv_.hi) return f.sign_at(iv_.lo);
    FloatInterval v = f.eval(FloatInterval(iv_, bits));
    if (auto s = v.strict_sign()) return *s;
    refine(iv_.width() / 65536);
    bits += 32;
  }
}

bool AlgebraicReal::equals(const AlgebraicReal& other) const {
  if (this == &other) return true;
  if (iv_.hi < other.iv_.lo || other.iv_.hi < iv_.lo) return false;
  if (is_exact() && other.is_exact()) return iv_.lo == other.iv_.lo;
  if (is_exact()) return other.poly_.sign_at(iv_.lo) == 0;
  if (other.is_exact()) return poly_.sign_at(other.iv_.lo) == 0;
  Interval common(std::max(iv_.lo, other.iv_.lo), std::min(iv_.hi, other.iv_.hi));
  IntPoly g = gcd(poly_, other.poly_);
  if (g.degree() <= 0) return false;
  return sign_change(g, common);
}

LevelRoot::LevelRoot(RatFunc f, Interval bracket, mpq_class level, mpfr_prec_t cap_bits)
    : f_(std::move(f)), iv_(std::move(bracket)), level_(std::move(level)), cap_bits_(cap_bits) {}

LevelRoot::LevelRoot(RatFunc f, Interval bracket, std::shared_ptr<const RealRoot> anchor, mpfr_prec_t cap_bits)
    : f_(std::move(f)), iv_(std::move(bracket)), anchor_(std::move(anchor)), cap_bits_(cap_bits) {
  if (auto v = anchor_->exact_value()) {
    level_ = f_.eval(*v);
    anchor_.reset();
  }
}

int LevelRoot::side(const mpq_class& t) const {
  const mpq_class fv = f_.eval(t);
  if (level_) return sgn(fv - *level_);
  for (mpfr_prec_t bits = 64; bits <= cap_bits_; bits *= 2) {
    FloatInterval a = enclose(f_, *anchor_, bits);
    FloatInterval v(fv, bits + 32);
    if (a.hi < v.lo) return 1;
    if (v.hi < a.lo) return -1;
  }
  return 0;
}

void LevelRoot::refine(const mpq_class& w) const {
  if (iv_.lo == iv_.hi) return;
  if (lo_side_ == 0) {
    lo_side_ = side(iv_.lo);
    if (lo_side_ == 0) {
      iv_ = Interval::point(iv_.lo);
      return;
    }
  }
  while (iv_.width() > w) {
    mpq_class mid = iv_.midpoint();
    const int s = side(mid);
    if (s == 0) {
      iv_ = Interval::point(mid);
      return;
    }
    if (s == lo_side_) {
      iv_.lo = std::move(mid);
    } else {
      iv_.hi = std::move(mid);
    }
  }
}

std::string ParamValue::to_string(int digits) const {
  switch (kind_) {
    case Kind::kMinusInf:
      return "-inf";
    case Kind::kPlusInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  if (auto v = root_->exact_value()) {
    if (v->get_den() == 1) return v->get_num().get_str();
  }
  return root_->approx(bits_for_digits(digits)).to_string(digits);
}

int compare(const RealRoot& a, const RealRoot& b) {
  if (&a == &b) return 0;
  const auto* aa = dynamic_cast<const AlgebraicReal*>(&a);
  const auto* bb = dynamic_cast<const AlgebraicReal*>(&b);
  if (aa != nullptr && bb != nullptr && aa->equals(*bb)) return 0;
  for (long bits = 8;; bits += 8) {
    Interval x = a.bracket();
    Interval y = b.bracket();
    if (x.hi < y.lo) return -1;
    if (y.hi < x.lo) return 1;
    if (x.lo == x.hi && y.lo == y.hi) return 0;
    if (bits > kSeparationLimitBits) throw Error(ErrorCode::kMatchingFailure, "parameter values could not be separated");
    const mpq_class w = std::max(x.width(), y.width()) / 256;
    a.refine(w);
    b.refine(w);
  }
}

int compare(const RealRoot& a, const mpq_class& b) {
  if (const auto* aa = dynamic_cast<const AlgebraicReal*>(&a)) {
    const Interval x = aa->bracket();
    if (x.hi < b) return -1;
    if (b < x.lo) return 1;
    if (x.lo == x.hi) return 0;
    if (aa->defining_poly()->sign_at(b) == 0) return 0;
  }
  for (long bits = 8;; bits += 8) {
    Interval x = a.bracket();
    if (x.hi < b) return -1;
    if (b < x.lo) return 1;
    if (x.lo == x.hi) return 0;
    if (bits > kSeparationLimitBits) throw Error(ErrorCode::kMatchingFailure, "parameter value could not be separated");
    a.refine(x.width() / 256);
  }
}

int compare(const ParamValue& a, const ParamValue& b) {
  auto rank = [](ParamValue::Kind k) {
    switch (k) {
      case ParamValue::Kind::kMinusInf:
        return 0;
      case ParamValue::Kind::kFinite:
        return 1;
      case ParamValue::Kind::kPlusInf:
        return 2;
    }
    return 1;
  };
  const int ra = rank(a.kind());
  const int rb = rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra != 1) return 0;
  return compare(a.root(), b.root());
}

int compare_numeric(const Enclosure& a, const Enclosure& b, int digits) {
  const BigFloat tol_unit = BigFloat::pow10(-digits, 64);
  for (mpfr_prec_t bits = bits_for_digits(digits); bits <= (1 << 16); bits *= 2) {
    FloatInterval x = a(bits);
    FloatInterval y = b(bits);
    if (x.hi < y.lo) return -1;
    if (y.hi < x.lo) return 1;
    BigFloat mag = BigFloat::abs(x.magnitude());
    if (mag < BigFloat(1, 64)) mag = BigFloat(1, 64);
    const BigFloat tol = tol_unit * mag;
    if (x.width() <= tol && y.width() <= tol) return 0;
  }
  return 0;
}

FloatInterval enclose(const RatFunc& f, const RealRoot& r, mpfr_prec_t bits) {
  for (mpfr_prec_t b = bits; b <= bits + 4096; b += 64) {
    FloatInterval t = r.enclosure(b);
    FloatInterval d = f.den().eval(t);
    if (!d.strict_sign()) continue;
    return f.num().eval(t) / d;
  }
  throw Error(ErrorCode::kInvalidArgument, "pole");
}

Enclosure value_of(const RatFunc& f, std::shared_ptr<const RealRoot> r) {
  return [f, r = std::move(r)](mpfr_prec_t bits) { return enclose(f, *r, bits); };
}

Enclosure constant(const mpq_class& v) {
  return [v](mpfr_prec_t bits) { return FloatInterval(v, bits + 32); };
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi absent means +inf.
mpq_class simplest_nonneg(const mpq_class& lo, const std::optional<mpq_class>& hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  const mpq_class next(fl + 1);
  if (!hi || next < *hi) return next;
  // lo and hi lie in [fl, fl + 1].
  const mpq_class base(fl);
  const mpq_class new_lo = 1 / (*hi - base);
  std::optional<mpq_class> new_hi;
  if (lo != base) new_hi = 1 / (lo - base);
  return base + 1 / simplest_nonneg(new_lo, new_hi);
}

}  // namespace

mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_nonneg(-hi, mpq_class(-lo));
  return simplest_nonneg(lo, hi);
}

}  // namespace rtop
