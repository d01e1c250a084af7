#include "root_field.hpp"

#include "rtop/error.hpp"
#include "signature.hpp"

namespace rtop {

namespace {

void trim_q(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly rem_q(QPoly a, const QPoly& b) {
  trim_q(a);
  const std::size_t n = b.size();
  while (a.size() >= n) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - n;
    for (std::size_t i = 0; i < n; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

QPoly mul_q(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim_q(out);
  return out;
}

QPoly sub_q(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_q(a);
  return a;
}

}  // namespace

QPoly to_qpoly(const IntPoly& p) {
  QPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  trim_q(out);
  return out;
}

IntPoly clear_denominators(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> out;
  for (const auto& c : p) out.push_back(mpz_class(c * l));
  return IntPoly(std::move(out));
}

RootField::RootField(IntPoly f, Interval iv) : f_(std::move(f)), root_(std::make_shared<AlgebraicReal>(f_, std::move(iv))) {}

QPoly RootField::reduce(const QPoly& a) const { return rem_q(a, to_qpoly(f_)); }

bool RootField::is_zero(const QPoly& a) {
  const QPoly r = reduce(a);
  if (r.empty()) return true;
  const IntPoly g = rtop::gcd(clear_denominators(r), f_);
  if (g.degree() <= 0) return false;
  // Zero divisor: keep the factor that vanishes at u0.
  const IntPoly other = divexact(f_, g);
  IntPoly keep = root_->sign_of(g) == 0 ? g : other;
  keep = keep.primitive_part();
  root_ = std::make_shared<AlgebraicReal>(keep, root_->bracket());
  f_ = std::move(keep);
  return reduce(a).empty();
}

int RootField::sign(const QPoly& a) {
  if (is_zero(a)) return 0;
  return root_->sign_of(clear_denominators(reduce(a)));
}

QPoly RootField::add(const QPoly& a, const QPoly& b) const {
  QPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim_q(out);
  return reduce(out);
}

QPoly RootField::sub(const QPoly& a, const QPoly& b) const { return reduce(sub_q(a, b)); }

QPoly RootField::mul(const QPoly& a, const QPoly& b) const { return reduce(mul_q(reduce(a), reduce(b))); }

QPoly RootField::inv(const QPoly& a) {
  if (is_zero(a)) throw Error(ErrorCode::kInternal, "division by zero in an algebraic extension");
  // Extended Euclid: s a + t f = g with g a nonzero constant.
  QPoly r0 = to_qpoly(f_);
  QPoly r1 = reduce(a);
  QPoly s0;
  QPoly s1 = {mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q;
    QPoly r = r0;
    q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, mpq_class(0));
    while (r.size() >= r1.size()) {
      const mpq_class f = r.back() / r1.back();
      const std::size_t shift = r.size() - r1.size();
      q[shift] = f;
      for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] -= f * r1[i];
      r.pop_back();
      trim_q(r);
    }
    trim_q(q);
    QPoly s = sub_q(s0, mul_q(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::kInternal, "non-invertible element");
  const mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return reduce(s1);
}

void trim(RootField& k, FieldPoly& p) {
  for (auto& c : p) c = k.reduce(c);
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

namespace {

std::pair<FieldPoly, FieldPoly> divide(RootField& k, FieldPoly a, FieldPoly b) {
  trim(k, a);
  trim(k, b);
  if (b.empty()) throw Error(ErrorCode::kInternal, "division by the zero polynomial");
  const QPoly lead_inv = k.inv(b.back());
  FieldPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const QPoly f = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(f, b[i]));
    a.pop_back();
    trim(k, a);
  }
  trim(k, q);
  return {q, a};
}

}  // namespace

FieldPoly rem(RootField& k, const FieldPoly& a, const FieldPoly& b) { return divide(k, a, b).second; }

FieldPoly quo(RootField& k, const FieldPoly& a, const FieldPoly& b) { return divide(k, a, b).first; }

FieldPoly gcd(RootField& k, FieldPoly a, FieldPoly b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    FieldPoly r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const QPoly lead_inv = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, lead_inv);
  return a;
}

FieldPoly derivative(const RootField& k, const FieldPoly& p) {
  FieldPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    QPoly c = p[i];
    for (auto& x : c) x *= static_cast<unsigned long>(i);
    out.push_back(k.reduce(c));
  }
  return out;
}

namespace {

struct FieldOps {
  RootField* k;
  bool is_zero(const FieldElem& a) { return k->is_zero(a.v); }
  int sign(const FieldElem& a) { return k->sign(a.v); }
};

}  // namespace

int positive_root_count(RootField& k, const FieldPoly& p_in) {
  FieldPoly p = p_in;
  trim(k, p);
  const int n = static_cast<int>(p.size()) - 1;
  if (n <= 0) return 0;
  const QPoly lead_inv = k.inv(p.back());
  std::vector<QPoly> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = k.mul(p[static_cast<std::size_t>(i)], lead_inv);
  // Newton identities for the power sums s_0 .. s_{2n-1}.
  std::vector<QPoly> s(static_cast<std::size_t>(2 * n));
  s[0] = {mpq_class(n)};
  for (int j = 1; j < 2 * n; ++j) {
    QPoly acc;
    if (j <= n) acc = k.mul(c[static_cast<std::size_t>(n - j)], {mpq_class(j)});
    for (int i = 1; i <= std::min(j - 1, n); ++i) {
      acc = k.add(acc, k.mul(c[static_cast<std::size_t>(n - i)], s[static_cast<std::size_t>(j - i)]));
    }
    s[static_cast<std::size_t>(j)] = k.sub({}, acc);
  }
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<std::vector<FieldElem>> h1(un, std::vector<FieldElem>(un));
  std::vector<std::vector<FieldElem>> hw(un, std::vector<FieldElem>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      h1[i][j] = {s[i + j], &k};
      hw[i][j] = {s[i + j + 1], &k};
    }
  }
  FieldOps ops{&k};
  const int sig1 = linalg::signature(h1, ops);
  const int sigw = linalg::signature(hw, ops);
  return (sig1 + sigw) / 2;
}

}  // namespace rtop
