#include "rtop/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>

#include "rtop/complexroots.hpp"
#include "rtop/error.hpp"
#include "signature.hpp"

namespace rtop {

namespace {

int variations(const std::vector<mpz_class>& c) {
  int v = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Sign variations of (x+1)^n Q(1/(x+1)), a bound on the roots of Q in (0, 1).
int descartes_unit(const IntPoly& q) {
  IntPoly t = q.reversed().taylor_shift(1);
  return variations(t.coeffs());
}

// Exact sign at a rational, trying a cheap float enclosure first.
int sign_at_fast(const IntPoly& p, const mpq_class& x) {
  if (p.degree() > 8) {
    const mpfr_prec_t prec = 64 + 2 * static_cast<mpfr_prec_t>(mpz_sizeinbase(x.get_den_mpz_t(), 2) +
                                                               mpz_sizeinbase(x.get_num_mpz_t(), 2));
    FloatInterval v = p.eval(FloatInterval(x, prec));
    if (auto s = v.strict_sign()) return *s;
  }
  return p.sign_at(x);
}

struct UnitRoot {
  mpz_class c;
  unsigned k;
  bool exact;  // the root is c / 2^k; otherwise it lies in (c/2^k, (c+1)/2^k)
};

// Roots of q in the open unit interval (q(0) != 0 assumed).
void isolate_unit(const IntPoly& q0, std::vector<UnitRoot>& out) {
  struct Node {
    IntPoly q;
    mpz_class c;
    unsigned k;
  };
  std::vector<Node> stack;
  stack.push_back({q0, 0, 0});
  std::vector<UnitRoot> found;
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    if (n.q.degree() <= 0) continue;
    const int v = descartes_unit(n.q);
    if (v == 0) continue;
    if (v == 1) {
      found.push_back({n.c, n.k, false});
      continue;
    }
    IntPoly left = n.q.scale_down(1);
    IntPoly right = left.taylor_shift(1);
    const mpz_class c2 = 2 * n.c;
    if (right.coeff(0) == 0) {
      found.push_back({c2 + 1, n.k + 1, true});
      std::vector<mpz_class> cs(right.coeffs().begin() + 1, right.coeffs().end());
      right = IntPoly(std::move(cs));
    }
    stack.push_back({std::move(right), c2 + 1, n.k + 1});
    stack.push_back({std::move(left), c2, n.k + 1});
  }
  out.insert(out.end(), found.begin(), found.end());
}

mpq_class dyadic(const mpz_class& c, unsigned k) {
  mpq_class r(c);
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  r /= two_k;
  return r;
}

// Moves endpoints that are roots inward so that both endpoints are non-roots.
void clear_endpoints(const IntPoly& p, Interval& iv) {
  while (p.sign_at(iv.lo) == 0 || p.sign_at(iv.hi) == 0) {
    const mpq_class mid = iv.midpoint();
    const int sm = p.sign_at(mid);
    if (sm == 0) {
      iv = Interval::point(mid);
      return;
    }
    // Sign just inside the open interval at lo.
    int slo = p.sign_at(iv.lo);
    if (slo == 0) slo = p.derivative().sign_at(iv.lo);
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

// Roots of the square-free p on (0, inf) (or (-inf, 0) when negated), in
// original coordinates. Endpoints are kept off the roots of `full`.
void positive_roots(const IntPoly& p, const IntPoly& full, bool negate, std::vector<Interval>& out) {
  IntPoly q = negate ? p.scale_arg(-1) : p;
  const unsigned k = root_bound_log2(q);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
  IntPoly unit = q.scale_arg(scale);
  unit = unit.primitive_part();
  std::vector<UnitRoot> roots;
  isolate_unit(unit, roots);
  std::vector<Interval> local;
  for (const auto& r : roots) {
    mpq_class lo = dyadic(r.c, r.k) * scale;
    if (r.exact) {
      local.push_back(Interval::point(negate ? mpq_class(-lo) : lo));
      continue;
    }
    mpq_class hi = dyadic(r.c + 1, r.k) * scale;
    Interval iv = negate ? Interval(-hi, -lo) : Interval(lo, hi);
    clear_endpoints(full, iv);
    local.push_back(iv);
  }
  out.insert(out.end(), local.begin(), local.end());
}

bool before(const Interval& a, const Interval& b) { return a.hi < b.lo; }

// Value c / 2^k of a dyadic rational.
std::pair<mpz_class, unsigned> as_dyadic(const mpq_class& x) {
  const unsigned k = static_cast<unsigned>(mpz_sizeinbase(x.get_den_mpz_t(), 2) - 1);
  return {x.get_num(), k};
}

// Roots of p in the open interval (l, r) with dyadic endpoints that are not roots.
void roots_between(const IntPoly& p, const mpq_class& l, const mpq_class& r, std::vector<Interval>& out) {
  auto [a, ka] = as_dyadic(l);
  auto [b, kb] = as_dyadic(r);
  const unsigned k = std::max(ka, kb);
  a <<= k - ka;
  b <<= k - kb;
  // q(x) = 2^(k deg p) p((a + (b - a) x) / 2^k) on the unit interval.
  const IntPoly q = p.scale_down(k).taylor_shift(a).scale_arg(b - a).primitive_part();
  std::vector<UnitRoot> roots;
  isolate_unit(q, roots);
  const mpq_class w = r - l;
  for (const auto& u : roots) {
    const mpq_class lo = l + w * dyadic(u.c, u.k);
    if (u.exact) {
      out.push_back(Interval::point(lo));
      continue;
    }
    Interval iv(lo, l + w * dyadic(u.c + 1, u.k));
    clear_endpoints(p, iv);
    out.push_back(iv);
  }
}

// Roots of p above the dyadic non-root l.
void roots_above(const IntPoly& p, const mpq_class& l, std::vector<Interval>& out) {
  auto [a, k] = as_dyadic(l);
  const IntPoly q = p.scale_down(k).taylor_shift(a).primitive_part();
  std::vector<Interval> local;
  positive_roots(q, q, false, local);
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  for (const auto& iv : local) out.push_back(Interval((iv.lo + a) / two_k, (iv.hi + a) / two_k));
}

// Isolation guided by floating-point root approximations: small boxes around
// the nearly real approximations, and the gaps between them, are each
// certified by Descartes' rule. Bisection only runs inside pieces whose
// first test is inconclusive.
std::optional<std::vector<Interval>> hinted_isolation(const IntPoly& p) {
  std::vector<Complex> approx;
  try {
    approx = complex_roots(p, 64);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<std::complex<double>> z;
  for (const auto& c : approx) {
    const double re = c.re.to_double();
    const double im = c.im.to_double();
    if (!std::isfinite(re) || !std::isfinite(im)) return std::nullopt;
    z.emplace_back(re, im);
  }
  std::vector<std::pair<double, double>> boxes;  // centre, radius
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double scale = std::max(1.0, std::abs(z[i]));
    if (std::abs(z[i].imag()) > 1e-6 * scale) continue;
    double sep = 1e-3 * scale;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) sep = std::min(sep, std::abs(z[i] - z[j]) / 4);
    }
    if (!(sep > 0)) return std::nullopt;
    boxes.emplace_back(z[i].real(), sep);
  }
  std::sort(boxes.begin(), boxes.end());
  // Breakpoints l_0 < r_0 <= l_1 < r_1 ...; none of them a root of p.
  std::vector<mpq_class> cuts;
  for (auto [c, rad] : boxes) {
    for (int side : {-1, 1}) {
      double d = rad;
      mpq_class x(c + side * d);
      for (int tries = 0; p.sign_at(x) == 0; ++tries) {
        if (tries == 8) return std::nullopt;
        d *= 0.75;
        x = mpq_class(c + side * d);
      }
      if (!cuts.empty() && x <= cuts.back()) return std::nullopt;
      cuts.push_back(x);
    }
  }
  std::vector<Interval> out;
  if (cuts.empty()) {
    if (p.sign_at(0) == 0) return std::nullopt;
    cuts.push_back(0);
  }
  std::vector<Interval> below;
  roots_above(p.scale_arg(-1), -cuts.front(), below);
  for (const auto& iv : below) out.push_back(Interval(-iv.hi, -iv.lo));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < cuts[i + 1]) roots_between(p, cuts[i], cuts[i + 1], out);
  }
  roots_above(p, cuts.back(), out);
  return out;
}

}  // namespace

unsigned root_bound_log2(const IntPoly& a) {
  // Fujiwara: |root| <= 2 max |a_i / a_n|^(1 / (n - i)), with |a_i / a_n| < 2^(bits_i - bits_n + 1).
  const int n = a.degree();
  const long lead_bits = static_cast<long>(mpz_sizeinbase(a.leading().get_mpz_t(), 2));
  long best = 0;
  for (int i = 0; i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    const long bits = static_cast<long>(mpz_sizeinbase(a.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), 2));
    const long num = bits - lead_bits + 1;
    const long den = n - i;
    best = std::max(best, num > 0 ? (num + den - 1) / den : 0L);
  }
  return static_cast<unsigned>(best + 2);
}

namespace {

// Sorts isolating intervals and refines neighbours that share an endpoint.
void separate(const IntPoly& sqfree, std::vector<Interval>& out) {
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (!before(out[i], out[i + 1])) {
      refine_root(sqfree, out[i], out[i].width() / 2);
      refine_root(sqfree, out[i + 1], out[i + 1].width() / 2);
    }
  }
}

}  // namespace

std::vector<Interval> isolate_squarefree(const IntPoly& sqfree) {
  std::vector<Interval> out;
  if (sqfree.degree() <= 0) return out;
  if (sqfree.degree() > 24) {
    if (auto hinted = hinted_isolation(sqfree)) {
      separate(sqfree, *hinted);
      return std::move(*hinted);
    }
  }
  IntPoly p = sqfree;
  bool zero_root = false;
  if (p.coeff(0) == 0) {
    zero_root = true;
    std::vector<mpz_class> cs(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(cs));
  }
  positive_roots(p, sqfree, true, out);
  if (zero_root) out.push_back(Interval::point(0));
  positive_roots(p, sqfree, false, out);
  separate(sqfree, out);
  return out;
}

void refine_root(const IntPoly& p, Interval& iv, const mpq_class& width) {
  if (iv.lo == iv.hi) return;
  int slo = sign_at_fast(p, iv.lo);
  if (slo == 0) {
    iv = Interval::point(iv.lo);
    return;
  }
  while (iv.width() > width) {
    mpq_class mid = iv.midpoint();
    const int sm = sign_at_fast(p, mid);
    if (sm == 0) {
      iv = Interval::point(mid);
      return;
    }
    if (sm == slo) {
      iv.lo = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }
}

IsolatingInterval refine(IsolatingInterval r, const mpq_class& width) {
  refine_root(r.defining_poly, r.interval, width);
  return r;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no isolated roots");
  std::vector<IsolatingInterval> all;
  for (const auto& [factor, mult] : squarefree_decomposition(a)) {
    for (auto& iv : isolate_squarefree(factor)) all.push_back({factor, std::move(iv), mult});
  }
  auto less = [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.interval.lo < y.interval.lo; };
  std::sort(all.begin(), all.end(), less);
  // Roots of different factors are distinct; refine until their intervals separate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].interval.hi < all[i + 1].interval.lo) continue;
      for (auto* r : {&all[i], &all[i + 1]}) {
        if (!r->is_exact()) refine_root(r->defining_poly, r->interval, r->interval.width() / 2);
      }
      changed = true;
    }
    if (changed) std::sort(all.begin(), all.end(), less);
  }
  return all;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& a) {
  std::vector<IntPoly> seq;
  if (a.is_zero()) return seq;
  IntPoly p0 = a.degree() > 0 ? squarefree_part(a) : a;
  seq.push_back(p0);
  if (p0.degree() <= 0) return seq;
  seq.push_back(p0.derivative());
  while (seq.back().degree() > 0) {
    const IntPoly& f = seq[seq.size() - 2];
    const IntPoly& g = seq.back();
    IntPoly r = pseudo_remainder(f, g);
    const int e = f.degree() - g.degree() + 1;
    // prem multiplies by lc(g)^e; undo a negative factor to keep signs.
    if (g.leading() < 0 && (e % 2 != 0)) r = -r;
    if (r.is_zero()) break;
    r = -r;
    mpz_class c = r.content();
    if (c != 1) {
      std::vector<mpz_class> v = r.coeffs();
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      r = IntPoly(std::move(v));
    }
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace {

int variations_at(const std::vector<IntPoly>& seq, const mpq_class& x) {
  int v = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
  int v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(p.leading());
    if (!positive && (p.degree() % 2 != 0)) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int count_real_roots_in(const IntPoly& a, const Interval& iv) {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial");
  if (a.degree() == 0) return 0;
  auto seq = sturm_sequence(a);
  int n = variations_at(seq, iv.lo) - variations_at(seq, iv.hi);
  if (seq.front().sign_at(iv.lo) == 0) ++n;
  return n;
}

int count_real_roots(const IntPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial");
  if (a.degree() == 0) return 0;
  auto seq = sturm_sequence(a);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::vector<mpq_class> newton_power_sums(const IntPoly& a, int count) {
  const int n = a.degree();
  std::vector<mpq_class> c(static_cast<std::size_t>(n));  // monic coefficients c_0..c_{n-1}
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = mpq_class(a.coeff(i), a.leading());
    c[static_cast<std::size_t>(i)].canonicalize();
  }
  std::vector<mpq_class> s(static_cast<std::size_t>(std::max(count, 1)));
  s[0] = n;
  for (int k = 1; k < count; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= std::min(k - 1, n); ++j) acc += c[static_cast<std::size_t>(n - j)] * s[static_cast<std::size_t>(k - j)];
    if (k <= n) acc += k * c[static_cast<std::size_t>(n - k)];
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s;
}

namespace {

struct RationalOps {
  bool is_zero(const mpq_class& x) const { return x == 0; }
  int sign(const mpq_class& x) const { return sgn(x); }
};

}  // namespace

int signature(const std::vector<std::vector<mpq_class>>& symmetric) {
  RationalOps ops;
  return linalg::signature(symmetric, ops);
}

int hermite_count_univariate(const IntPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial");
  const int d = a.degree();
  if (d <= 0) return 0;
  auto s = newton_power_sums(a, 2 * d - 1);
  std::vector<std::vector<mpq_class>> h(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(i + j)];
  }
  return signature(h);
}

void PrecisionContext::escalate() {
  if (!can_escalate()) throw Error(ErrorCode::kPrecisionExhausted, "precision exhausted at " + std::to_string(digits) + " digits");
  digits += escalation_step;
}

}  // namespace rtop
