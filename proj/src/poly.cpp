#include "rtop/poly.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "prs.hpp"
#include "rtop/modular.hpp"

namespace rtop {

namespace {

const mpz_class kZero(0);

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const mpq_class& root) {
  return IntPoly(std::vector<mpz_class>{-root.get_num(), root.get_den()});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class c = content();
  if (leading() < 0) c = -c;
  if (c == 1) return *this;
  IntPoly r(*this);
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::taylor_shift(const mpz_class& shift) const {
  std::vector<mpz_class> a = coeffs_;
  const std::size_t n = a.size();
  if (n <= 1 || shift == 0) return *this;
  // Horner-style synthetic division repeated n times.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      if (shift == 1) {
        a[j - 1] += a[j];
      } else {
        a[j - 1] += shift * a[j];
      }
    }
  }
  return IntPoly(std::move(a));
}

IntPoly IntPoly::scale_down(unsigned k) const {
  if (k == 0 || is_zero()) return *this;
  std::vector<mpz_class> a = coeffs_;
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 0; i < d; ++i) mpz_mul_2exp(a[i].get_mpz_t(), a[i].get_mpz_t(), k * (d - i));
  return IntPoly(std::move(a));
}

IntPoly IntPoly::scale_arg(const mpz_class& c) const {
  std::vector<mpz_class> a = coeffs_;
  mpz_class pw = 1;
  for (auto& x : a) {
    x *= pw;
    pw *= c;
  }
  return IntPoly(std::move(a));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

namespace {

// sum c_i num^i den^(d-i) for x = num/den, i.e. den^d p(x).
mpz_class homogeneous_eval(const std::vector<mpz_class>& coeffs, const mpq_class& x) {
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  const std::size_t d = coeffs.size() - 1;
  std::vector<mpz_class> dpows(coeffs.size());
  dpows[0] = 1;
  for (std::size_t i = 1; i < coeffs.size(); ++i) dpows[i] = dpows[i - 1] * den;
  mpz_class r = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r *= num;
    mpz_addmul(r.get_mpz_t(), coeffs[k].get_mpz_t(), dpows[d - k].get_mpz_t());
  }
  return r;
}

}  // namespace

mpq_class IntPoly::eval(const mpq_class& x) const {
  if (is_zero()) return 0;
  mpz_class den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(degree()));
  mpq_class q(homogeneous_eval(coeffs_, x), den_pow);
  q.canonicalize();
  return q;
}

int IntPoly::sign_at(const mpq_class& x) const {
  if (is_zero()) return 0;
  return sgn(homogeneous_eval(coeffs_, x));
}

BigFloat IntPoly::eval(const BigFloat& x) const {
  BigFloat r(x.precision());
  BigFloat c(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= x;
    mpfr_set_z(c.get(), it->get_mpz_t(), MPFR_RNDN);
    r += c;
  }
  return r;
}

Complex IntPoly::eval(const Complex& x) const {
  mpfr_prec_t p = std::max(x.re.precision(), x.im.precision());
  Complex r(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= x;
    r.re += BigFloat(*it, p);
  }
  return r;
}

Interval IntPoly::eval(const Interval& x) const {
  Interval r = Interval::point(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * x + Interval::point(mpq_class(*it));
  }
  return r;
}

FloatInterval IntPoly::eval(const FloatInterval& x) const {
  mpfr_prec_t p = std::max(x.lo.precision(), x.hi.precision());
  FloatInterval r(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * x + FloatInterval(*it, p);
  }
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  const int db = b.degree();
  int da = a.degree();
  if (da < db) return {IntPoly(), a};
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(da - db) + 1);
  const mpz_class& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const mpz_class lead = r[static_cast<std::size_t>(k + db)];
    for (auto& c : q) c *= lb;
    q[static_cast<std::size_t>(k)] += lead;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= lead * b.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) { return pseudo_divide(a, b).second; }

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(da - db) + 1);
  const mpz_class& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    mpz_class& lead = r[static_cast<std::size_t>(k + db)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) {
      mpz_submul(r[static_cast<std::size_t>(k + i)].get_mpz_t(), c.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(i)].get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  try {
    (void)divexact(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

namespace {

modular::ModPoly reduce_mod(const IntPoly& a, modular::u64 p) {
  modular::ModPoly r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = modular::reduce(a.coeffs()[i], p);
  modular::trim(r);
  return r;
}

// gcd of two primitive polynomials of positive degree, via Chinese remaindering
// over word-size primes with a trial-division stopping test.
IntPoly modular_gcd(const IntPoly& a, const IntPoly& b) {
  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.leading().get_mpz_t(), b.leading().get_mpz_t());
  int best_degree = std::min(a.degree(), b.degree()) + 1;
  std::unique_ptr<modular::CrtAccumulator> acc;
  std::vector<mpz_class> previous;
  for (std::size_t pi = 0;; ++pi) {
    const modular::u64 p = modular::prime(pi);
    if (modular::reduce(a.leading(), p) == 0 || modular::reduce(b.leading(), p) == 0) continue;
    modular::ModPoly g = modular::gcd(reduce_mod(a, p), reduce_mod(b, p), p);
    const int dg = modular::degree(g);
    if (dg == 0) return IntPoly::constant(1);
    if (dg > best_degree) continue;
    if (dg < best_degree) {
      best_degree = dg;
      acc = std::make_unique<modular::CrtAccumulator>(g.size());
      previous.clear();
    }
    // Scale the monic image so its leading coefficient is lc_gcd.
    const modular::u64 lc_mod = modular::reduce(lc_gcd, p);
    for (auto& c : g) c = modular::mul(c, lc_mod, p);
    acc->add(g, p);
    std::vector<mpz_class> candidate = acc->symmetric();
    if (candidate == previous) {
      IntPoly h = IntPoly(candidate).primitive_part();
      if (divides(h, a) && divides(h, b)) return h;
    }
    previous = std::move(candidate);
  }
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return IntPoly::constant(1);
  return modular_gcd(a.primitive_part(), b.primitive_part());
}

IntPoly lcm(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly g = gcd(a, b);
  return (divexact(a.primitive_part(), g) * b.primitive_part()).primitive_part();
}

IntPoly squarefree_part(const IntPoly& a) {
  if (a.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  IntPoly p = a.primitive_part();
  if (p.degree() <= 1) return p;
  IntPoly g = gcd(p, p.derivative());
  return divexact(p, g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
  std::vector<std::pair<IntPoly, int>> out;
  if (a.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  IntPoly p = a.primitive_part();
  if (p.degree() <= 0) return out;
  // Yun's algorithm.
  IntPoly dp = p.derivative();
  IntPoly g = gcd(p, dp);
  IntPoly c = divexact(p, g).primitive_part();
  IntPoly w = c;                   // product of factors with multiplicity >= i
  IntPoly rest = g;                // p / (product of factors so far)
  int i = 1;
  while (w.degree() > 0) {
    IntPoly y = gcd(w, rest);
    IntPoly z = divexact(w, y).primitive_part();
    if (z.degree() > 0) out.emplace_back(z, i);
    w = y;
    if (y.degree() > 0) rest = divexact(rest, y).primitive_part();
    ++i;
  }
  return out;
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  return prs::resultant<mpz_class>(a.coeffs(), b.coeffs());
}

mpz_class norm1(const IntPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a.coeffs()) s += abs(c);
  return s;
}

}  // namespace rtop
