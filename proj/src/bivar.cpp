#include "rtop/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prs.hpp"
#include "rtop/error.hpp"
#include "rtop/modular.hpp"

namespace rtop {

BivarIntPoly::BivarIntPoly(std::vector<IntPoly> coeffs_by_s) : by_s_(std::move(coeffs_by_s)) { trim(); }

void BivarIntPoly::trim() {
  while (!by_s_.empty() && by_s_.back().is_zero()) by_s_.pop_back();
}

BivarIntPoly BivarIntPoly::from_matrix(const std::vector<std::vector<mpz_class>>& m) {
  std::size_t ns = 0;
  for (const auto& row : m) ns = std::max(ns, row.size());
  std::vector<std::vector<mpz_class>> cols(ns, std::vector<mpz_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) cols[j][i] = m[i][j];
  }
  std::vector<IntPoly> by_s;
  by_s.reserve(ns);
  for (auto& c : cols) by_s.emplace_back(std::move(c));
  return BivarIntPoly(std::move(by_s));
}

BivarIntPoly BivarIntPoly::in_t(const IntPoly& p) { return BivarIntPoly(std::vector<IntPoly>{p}); }

BivarIntPoly BivarIntPoly::in_s(const IntPoly& p) {
  std::vector<IntPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(IntPoly::constant(c));
  return BivarIntPoly(std::move(v));
}

BivarIntPoly BivarIntPoly::constant(const mpz_class& c) { return in_t(IntPoly::constant(c)); }

BivarIntPoly BivarIntPoly::difference_form(const IntPoly& p, const IntPoly& q) {
  return in_t(p) * in_s(q) - in_s(p) * in_t(q);
}

BivarIntPoly BivarIntPoly::diagonal() { return BivarIntPoly(std::vector<IntPoly>{IntPoly{0, 1}, IntPoly{-1}}); }

int BivarIntPoly::deg_t() const {
  int d = -1;
  for (const auto& c : by_s_) d = std::max(d, c.degree());
  return d;
}

int BivarIntPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < by_s_.size(); ++j) {
    if (!by_s_[j].is_zero()) d = std::max(d, by_s_[j].degree() + static_cast<int>(j));
  }
  return d;
}

std::size_t BivarIntPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : by_s_) {
    for (const auto& x : c.coeffs()) n += (x != 0);
  }
  return n;
}

mpz_class BivarIntPoly::coeff(int i_t, int j_s) const {
  if (j_s < 0 || j_s > deg_s()) return 0;
  return by_s_[static_cast<std::size_t>(j_s)].coeff(i_t);
}

std::vector<std::vector<mpz_class>> BivarIntPoly::to_matrix() const {
  const int dt = deg_t();
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(dt + 1), std::vector<mpz_class>(by_s_.size()));
  for (std::size_t j = 0; j < by_s_.size(); ++j) {
    for (int i = 0; i <= by_s_[j].degree(); ++i) m[static_cast<std::size_t>(i)][j] = by_s_[j].coeff(i);
  }
  return m;
}

BivarIntPoly BivarIntPoly::swap_vars() const {
  auto m = to_matrix();
  // Transpose: new entry (j, i) = old (i, j).
  std::vector<std::vector<mpz_class>> t(by_s_.size(), std::vector<mpz_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return from_matrix(t);
}

mpz_class BivarIntPoly::integer_content() const {
  mpz_class g = 0;
  for (const auto& c : by_s_) {
    mpz_class cc = c.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
  }
  return g;
}

IntPoly BivarIntPoly::content_s() const {
  IntPoly g;
  for (const auto& c : by_s_) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BivarIntPoly BivarIntPoly::normalized() const {
  if (is_zero()) return *this;
  mpz_class c = integer_content();
  // Leading term: highest t-degree, then highest s-degree.
  const int dt = deg_t();
  int sign = 0;
  for (int j = deg_s(); j >= 0 && sign == 0; --j) {
    mpz_class v = coeff(dt, j);
    if (v != 0) sign = sgn(v);
  }
  if (sign < 0) c = -c;
  if (c == 1) return *this;
  std::vector<IntPoly> out;
  out.reserve(by_s_.size());
  for (const auto& p : by_s_) {
    std::vector<mpz_class> v = p.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    out.emplace_back(std::move(v));
  }
  return BivarIntPoly(std::move(out));
}

IntPoly BivarIntPoly::eval_t(const mpz_class& t) const {
  std::vector<mpz_class> v;
  v.reserve(by_s_.size());
  for (const auto& c : by_s_) v.push_back(c.eval(t));
  return IntPoly(std::move(v));
}

IntPoly BivarIntPoly::eval_s(const mpz_class& s) const {
  IntPoly r;
  for (auto it = by_s_.rbegin(); it != by_s_.rend(); ++it) {
    r *= s;
    r += *it;
  }
  return r;
}

IntPoly BivarIntPoly::diagonal_restriction() const {
  IntPoly r;
  for (std::size_t j = 0; j < by_s_.size(); ++j) r += by_s_[j] * IntPoly::monomial(1, static_cast<int>(j));
  return r;
}

mpq_class BivarIntPoly::eval(const mpq_class& t, const mpq_class& s) const {
  mpq_class r = 0;
  for (auto it = by_s_.rbegin(); it != by_s_.rend(); ++it) r = r * s + it->eval(t);
  return r;
}

BigFloat BivarIntPoly::eval(const BigFloat& t, const BigFloat& s) const {
  BigFloat r(std::max(t.precision(), s.precision()));
  for (auto it = by_s_.rbegin(); it != by_s_.rend(); ++it) r = r * s + it->eval(t);
  return r;
}

BivarIntPoly& BivarIntPoly::operator+=(const BivarIntPoly& rhs) {
  if (rhs.by_s_.size() > by_s_.size()) by_s_.resize(rhs.by_s_.size());
  for (std::size_t j = 0; j < rhs.by_s_.size(); ++j) by_s_[j] += rhs.by_s_[j];
  trim();
  return *this;
}

BivarIntPoly& BivarIntPoly::operator-=(const BivarIntPoly& rhs) {
  if (rhs.by_s_.size() > by_s_.size()) by_s_.resize(rhs.by_s_.size());
  for (std::size_t j = 0; j < rhs.by_s_.size(); ++j) by_s_[j] -= rhs.by_s_[j];
  trim();
  return *this;
}

BivarIntPoly BivarIntPoly::operator-() const {
  std::vector<IntPoly> v;
  for (const auto& c : by_s_) v.push_back(-c);
  return BivarIntPoly(std::move(v));
}

BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> r(a.by_s_.size() + b.by_s_.size() - 1);
  for (std::size_t i = 0; i < a.by_s_.size(); ++i) {
    if (a.by_s_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.by_s_.size(); ++j) r[i + j] += a.by_s_[i] * b.by_s_[j];
  }
  return BivarIntPoly(std::move(r));
}

BivarIntPoly operator*(const BivarIntPoly& a, const IntPoly& t_poly) {
  std::vector<IntPoly> r;
  for (const auto& c : a.by_s_) r.push_back(c * t_poly);
  return BivarIntPoly(std::move(r));
}

BivarIntPoly operator*(const BivarIntPoly& a, const mpz_class& c) {
  std::vector<IntPoly> r;
  for (const auto& x : a.by_s_) r.push_back(x * c);
  return BivarIntPoly(std::move(r));
}

std::string BivarIntPoly::to_string(const std::string& tv, const std::string& sv) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_t(); i >= 0; --i) {
    for (int j = deg_s(); j >= 0; --j) {
      mpz_class c = coeff(i, j);
      if (c == 0) continue;
      mpz_class a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool mono = i > 0 || j > 0;
      if (!mono || a != 1) os << a.get_str();
      bool need_star = !mono ? false : a != 1;
      if (i > 0) {
        os << (need_star ? "*" : "") << tv;
        if (i > 1) os << "^" << i;
        need_star = true;
      }
      if (j > 0) {
        os << (need_star ? "*" : "") << sv;
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

BivarIntPoly divexact(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.deg_s();
  const int da = a.deg_s();
  if (da < db) throw std::domain_error("inexact bivariate division");
  std::vector<IntPoly> r = a.by_s();
  std::vector<IntPoly> q(static_cast<std::size_t>(da - db) + 1);
  const IntPoly& lb = b.by_s().back();
  for (int k = da - db; k >= 0; --k) {
    const IntPoly& lead = r[static_cast<std::size_t>(k + db)];
    if (lead.is_zero()) continue;
    IntPoly c = divexact(lead, lb);
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= c * b.by_s()[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  for (int i = 0; i < db; ++i) {
    if (!r[static_cast<std::size_t>(i)].is_zero()) throw std::domain_error("inexact bivariate division");
  }
  return BivarIntPoly(std::move(q));
}

namespace {

std::vector<IntPoly> divide_content(std::vector<IntPoly> a, const IntPoly& c) {
  if (c.degree() == 0 && abs(c.leading()) == 1) return a;
  for (auto& x : a) x = divexact(x, c);
  return a;
}

IntPoly coeff_gcd(const std::vector<IntPoly>& a) {
  IntPoly g;
  for (const auto& x : a) {
    g = gcd(g, x);
    if (g.degree() == 0) break;
  }
  return g;
}

}  // namespace

BivarIntPoly gcd_bivar(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  IntPoly ca = a.content_s();
  IntPoly cb = b.content_s();
  IntPoly c = gcd(ca, cb);
  std::vector<IntPoly> A = divide_content(a.by_s(), ca);
  std::vector<IntPoly> B = divide_content(b.by_s(), cb);
  if (prs::degree(A) < prs::degree(B)) std::swap(A, B);
  // Primitive PRS in s over Z[t].
  while (!B.empty() && prs::degree(B) > 0) {
    std::vector<IntPoly> R = prs::prem(A, B);
    A = std::move(B);
    if (R.empty()) {
      B.clear();
      break;
    }
    B = divide_content(R, coeff_gcd(R));
  }
  BivarIntPoly g;
  if (B.empty()) {
    g = BivarIntPoly(A);
    g = BivarIntPoly(divide_content(g.by_s(), g.content_s()));
  } else {
    g = BivarIntPoly::constant(1);
  }
  return (g * c).normalized();
}

BivarIntPoly gcd_bivar(const std::vector<BivarIntPoly>& polys) {
  BivarIntPoly g;
  for (const auto& p : polys) g = gcd_bivar(g, p);
  return g;
}

IntPoly resultant_s_subresultant(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "undefined resultant");
  if (a.is_zero() || b.is_zero()) return {};
  return prs::resultant<IntPoly>(a.by_s(), b.by_s());
}

namespace {

mpz_class norm1(const BivarIntPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a.by_s()) s += rtop::norm1(c);
  return s;
}

modular::ModPoly reduce_mod(const IntPoly& a, modular::u64 p) {
  modular::ModPoly r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = modular::reduce(a.coeffs()[i], p);
  modular::trim(r);
  return r;
}

}  // namespace

IntPoly resultant_s_modular(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "undefined resultant");
  if (a.is_zero() || b.is_zero()) return {};
  const int m = a.deg_s();
  const int n = b.deg_s();
  if (m == 0 && n == 0) return IntPoly::constant(1);
  // Degree bound in t and a coefficient bound via 1-norms of the Sylvester rows.
  int deg_bound = a.deg_t() * n + b.deg_t() * m;
  deg_bound = std::min(deg_bound, a.total_degree() * b.total_degree());
  mpz_class na = norm1(a);
  mpz_class nb = norm1(b);
  mpz_class bound;
  mpz_class t1;
  mpz_pow_ui(bound.get_mpz_t(), na.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(t1.get_mpz_t(), nb.get_mpz_t(), static_cast<unsigned long>(m));
  bound *= t1;
  bound = 2 * bound + 1;

  std::vector<modular::ModPoly> a_mod(a.by_s().size());
  std::vector<modular::ModPoly> b_mod(b.by_s().size());
  const std::size_t npts = static_cast<std::size_t>(deg_bound) + 1;
  modular::CrtAccumulator acc(npts);
  for (std::size_t pi = 0; acc.modulus() < bound; ++pi) {
    const modular::u64 p = modular::prime(pi);
    for (std::size_t j = 0; j < a_mod.size(); ++j) a_mod[j] = reduce_mod(a.by_s()[j], p);
    for (std::size_t j = 0; j < b_mod.size(); ++j) b_mod[j] = reduce_mod(b.by_s()[j], p);
    std::vector<modular::u64> xs;
    std::vector<modular::u64> ys;
    xs.reserve(npts);
    ys.reserve(npts);
    modular::ModPoly ua(static_cast<std::size_t>(m) + 1);
    modular::ModPoly ub(static_cast<std::size_t>(n) + 1);
    for (modular::u64 x = 0; xs.size() < npts; ++x) {
      for (int j = 0; j <= m; ++j) ua[static_cast<std::size_t>(j)] = modular::eval(a_mod[static_cast<std::size_t>(j)], x, p);
      for (int j = 0; j <= n; ++j) ub[static_cast<std::size_t>(j)] = modular::eval(b_mod[static_cast<std::size_t>(j)], x, p);
      if (ua.back() == 0 || ub.back() == 0) continue;
      xs.push_back(x);
      ys.push_back(modular::resultant(ua, ub, p));
    }
    modular::ModPoly r = modular::interpolate(xs, ys, p);
    r.resize(npts, 0);
    acc.add(r, p);
  }
  return IntPoly(acc.symmetric());
}

IntPoly resultant_s(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.is_zero() || b.is_zero()) return resultant_s_subresultant(a, b);
  const int work = (a.deg_s() + b.deg_s()) * std::max(a.deg_t(), b.deg_t());
  if (work <= 24) return resultant_s_subresultant(a, b);
  return resultant_s_modular(a, b);
}

}  // namespace rtop
