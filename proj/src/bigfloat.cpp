#include "rtop/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rtop {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::ensure_precision(mpfr_prec_t prec) {
  if (prec > precision()) mpfr_prec_round(value_, prec, MPFR_RNDN);
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite BigFloat");
  mpq_class q;
  if (is_zero()) return q;
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  q = mant;
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat BigFloat::abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long exponent, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
  return r;
}

// ---- Complex ----

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  BigFloat r = re * rhs.re - im * rhs.im;
  BigFloat i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  BigFloat d = rhs.norm();
  BigFloat r = (re * rhs.re + im * rhs.im) / d;
  BigFloat i = (im * rhs.re - re * rhs.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigFloat Complex::norm() const { return re * re + im * im; }

BigFloat Complex::abs() const {
  BigFloat r(std::max(re.precision(), im.precision()));
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

// ---- Interval ----

Interval::Interval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

std::optional<int> Interval::strict_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return std::nullopt;
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

// ---- FloatInterval ----

FloatInterval::FloatInterval(const mpz_class& v, mpfr_prec_t prec)
    : lo(v, prec, MPFR_RNDD), hi(v, prec, MPFR_RNDU) {}

FloatInterval::FloatInterval(const mpq_class& v, mpfr_prec_t prec)
    : lo(v, prec, MPFR_RNDD), hi(v, prec, MPFR_RNDU) {}

FloatInterval::FloatInterval(const Interval& iv, mpfr_prec_t prec)
    : lo(iv.lo, prec, MPFR_RNDD), hi(iv.hi, prec, MPFR_RNDU) {}

std::optional<int> FloatInterval::strict_sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  return std::nullopt;
}

BigFloat FloatInterval::width() const {
  BigFloat w(hi.precision());
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w;
}

BigFloat FloatInterval::midpoint() const {
  BigFloat m(hi.precision() + 1);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat FloatInterval::magnitude() const {
  BigFloat a = BigFloat::abs(lo);
  BigFloat b = BigFloat::abs(hi);
  return a < b ? b : a;
}

namespace {

mpfr_prec_t max_prec(const FloatInterval& a, const FloatInterval& b) {
  return std::max({a.lo.precision(), a.hi.precision(), b.lo.precision(), b.hi.precision()});
}

}  // namespace

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  FloatInterval r(p);
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

FloatInterval operator-(const FloatInterval& a, const FloatInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  FloatInterval r(p);
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}

FloatInterval operator*(const FloatInterval& a, const FloatInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  FloatInterval r(p);
  BigFloat t(p);
  bool first = true;
  const BigFloat* xs[2] = {&a.lo, &a.hi};
  const BigFloat* ys[2] = {&b.lo, &b.hi};
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo) r.lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi < t) r.hi = t;
      first = false;
    }
  }
  return r;
}

FloatInterval operator/(const FloatInterval& a, const FloatInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  mpfr_prec_t p = max_prec(a, b);
  FloatInterval r(p);
  BigFloat t(p);
  bool first = true;
  const BigFloat* xs[2] = {&a.lo, &a.hi};
  const BigFloat* ys[2] = {&b.lo, &b.hi};
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo) r.lo = t;
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi < t) r.hi = t;
      first = false;
    }
  }
  return r;
}

}  // namespace rtop
