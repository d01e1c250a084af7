#include "rtop/isolated.hpp"

#include <algorithm>

#include "root_field.hpp"
#include "rtop/complexroots.hpp"
#include "rtop/error.hpp"

namespace rtop {

namespace {

// p(u + iv) as (real part, imaginary part).
std::pair<BivarIntPoly, BivarIntPoly> expand(const IntPoly& p) {
  const BivarIntPoly u = BivarIntPoly::in_t(IntPoly{0, 1});
  const BivarIntPoly v = BivarIntPoly::in_s(IntPoly{0, 1});
  BivarIntPoly re;
  BivarIntPoly im;
  for (int k = p.degree(); k >= 0; --k) {
    BivarIntPoly nr = re * u - im * v + BivarIntPoly::constant(p.coeff(k));
    BivarIntPoly ni = re * v + im * u;
    re = std::move(nr);
    im = std::move(ni);
  }
  return {re, im};
}

BivarIntPoly norm_of(const IntPoly& q) {
  auto [qr, qi] = expand(q);
  return qr * qr + qi * qi;
}

// f(u, v) = v g(u, v^2) for odd f, or g(u, v^2) for even f; returns g with
// w = v^2 as the second variable.
BivarIntPoly in_w(const BivarIntPoly& f, bool odd) {
  std::vector<IntPoly> out;
  const auto& by = f.by_s();
  for (std::size_t j = odd ? 1 : 0; j < by.size(); j += 2) out.push_back(by[j]);
  return BivarIntPoly(std::move(out));
}

FieldPoly restrict(RootField& k, const BivarIntPoly& f) {
  FieldPoly out;
  for (const auto& c : f.by_s()) out.push_back(k.reduce(to_qpoly(c)));
  trim(k, out);
  return out;
}

BigFloat tolerance(int digits, mpfr_prec_t bits) { return BigFloat::pow10(-digits, bits); }

bool nearly_real(const Complex& z, const BigFloat& tol) {
  BigFloat scale = BigFloat::abs(z.re);
  if (scale < BigFloat(1, scale.precision())) scale = BigFloat(1, scale.precision());
  return BigFloat::abs(z.im) <= tol * scale;
}

bool same_point(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b, const BigFloat& tol) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    BigFloat scale = BigFloat::abs(a[i]);
    if (scale < BigFloat(1, scale.precision())) scale = BigFloat(1, scale.precision());
    if (BigFloat::abs(a[i] - b[i]) > tol * scale) return false;
  }
  return true;
}

}  // namespace

ComplexParts complex_parts(const Parametrization& c) {
  ComplexParts parts;
  for (const auto& f : c.components()) {
    auto [pr, pi] = expand(f.num());
    auto [qr, qi] = expand(f.den());
    parts.re.push_back(pr * qr + pi * qi);
    parts.im.push_back(pi * qr - pr * qi);
    parts.norm.push_back(qr * qr + qi * qi);
  }
  parts.norm_q_tilde = norm_of(c.q_tilde());
  return parts;
}

IsolatedReport isolated_numeric(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int digits,
                                std::optional<std::size_t> real_roots) {
  IsolatedReport report;
  if (m.degree() <= 0) return report;
  const mpfr_prec_t bits = bits_for_digits(digits) + 32;
  const BigFloat tol = tolerance(digits, bits);
  std::vector<Complex> roots = complex_roots(m, bits);
  // The count of real roots is exact; the remaining roots are the non-real ones.
  const std::size_t n_real = real_roots ? *real_roots : static_cast<std::size_t>(count_real_roots(m));
  auto realness = [](const Complex& z) {
    BigFloat scale = z.abs();
    if (scale < BigFloat(1, scale.precision())) scale = BigFloat(1, scale.precision());
    return BigFloat::abs(z.im) / scale;
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const Complex& a, const Complex& b) { return realness(a) < realness(b); });
  for (std::size_t i = n_real; i < roots.size(); ++i) {
    IsolatedCandidate cand;
    cand.t = roots[i];
    bool real = true;
    for (const auto& f : c.components()) {
      const Complex v = f.eval(roots[i]);
      if (!nearly_real(v, tol)) {
        real = false;
        break;
      }
      cand.point.push_back(v.re);
    }
    if (real) report.candidates.push_back(std::move(cand));
  }

  const BigFloat vertex_tol = tolerance(digits - 1, bits);
  int next_id = 0;
  for (const auto& v : g.vertices) next_id = std::max(next_id, v.id + 1);
  for (const auto& cand : report.candidates) {
    bool reached = false;
    for (const auto& v : g.vertices) {
      if (v.kind == VertexKind::kIsolated) continue;
      if (same_point(cand.point, v.coords, vertex_tol)) {
        reached = true;
        break;
      }
    }
    if (reached) continue;
    bool merged = false;
    for (auto& p : report.points) {
      if (same_point(cand.point, p.coords, vertex_tol)) {
        if (cand.t.im.sign() > 0 && p.complex_generator->im.sign() < 0) p.complex_generator = cand.t;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    Vertex p;
    p.id = next_id++;
    p.kind = VertexKind::kIsolated;
    for (const auto& x : cand.point) {
      p.coords.push_back(x);
      p.exact.emplace_back();
    }
    p.complex_generator = cand.t;
    report.points.push_back(std::move(p));
  }
  return report;
}

int certified_solution_count(const Parametrization& c) {
  const ComplexParts parts = complex_parts(c);
  const BivarIntPoly b = in_w(parts.im[0], true);
  const BivarIntPoly d = in_w(parts.im[1], true);
  std::optional<BivarIntPoly> h;
  if (c.dimension() == 3) h = in_w(parts.im[2], true);
  const BivarIntPoly e = in_w(parts.norm_q_tilde, false);
  if (b.is_zero() || d.is_zero()) throw Error(ErrorCode::kDegenerateSystem, "degenerate system: a coordinate is constant");
  const IntPoly r = resultant_s(b, d);
  if (r.is_zero()) throw Error(ErrorCode::kDegenerateSystem, "degenerate system: Res_w(B, D) vanishes identically");
  if (r.degree() <= 0) return 0;
  int total = 0;
  for (const auto& root : isolate_real_roots(r)) {
    RootField k(root.defining_poly, root.interval);
    FieldPoly f = gcd(k, restrict(k, b), restrict(k, d));
    if (h) f = gcd(k, f, restrict(k, *h));
    if (f.empty()) throw Error(ErrorCode::kDegenerateSystem, "degenerate system: a fiber is positive-dimensional");
    // Drop the root w = 0 (v = 0).
    while (f.size() > 1 && k.is_zero(f[0])) f.erase(f.begin());
    if (f.size() <= 1) continue;
    const FieldPoly sq = gcd(k, f, derivative(k, f));
    if (sq.size() > 1) f = quo(k, f, sq);
    const FieldPoly at_poles = gcd(k, f, restrict(k, e));
    if (at_poles.size() > 1) f = quo(k, f, at_poles);
    total += 2 * positive_root_count(k, f);
  }
  return total;
}

namespace {

IsolatedReport checked(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int certified, int digits,
                       std::optional<std::size_t> real_roots) {
  IsolatedReport report = isolated_numeric(c, m, g, digits, real_roots);
  if (static_cast<int>(report.candidates.size()) != certified) {
    throw Error(ErrorCode::kMatchingFailure, "numeric isolated candidates (" + std::to_string(report.candidates.size()) +
                                                 ") differ from the certified count (" + std::to_string(certified) + ")");
  }
  report.certified_count = certified;
  return report;
}

}  // namespace

IsolatedReport isolated_certified_2d(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int certified, int digits,
                                    std::optional<std::size_t> real_roots) {
  if (c.dimension() != 2) throw Error(ErrorCode::kInvalidArgument, "plane curve expected");
  return checked(c, m, g, certified, digits, real_roots);
}

IsolatedReport isolated_certified_3d(const Parametrization& c, const IntPoly& m, const TopologyGraph& g, int certified, int digits,
                                    std::optional<std::size_t> real_roots) {
  if (c.dimension() != 3) throw Error(ErrorCode::kInvalidArgument, "space curve expected");
  return checked(c, m, g, certified, digits, real_roots);
}

}  // namespace rtop
