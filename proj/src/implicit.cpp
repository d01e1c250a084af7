#include "rtop/implicit.hpp"

#include "rtop/error.hpp"
#include "rtop/modular.hpp"

namespace rtop {

namespace {

using modular::ModPoly;
using modular::u64;

ModPoly reduce_poly(const IntPoly& a, u64 p) {
  ModPoly out;
  for (const auto& c : a.coeffs()) out.push_back(modular::reduce(c, p));
  modular::trim(out);
  return out;
}

// a - v b over Z/p.
ModPoly combine(const ModPoly& a, const ModPoly& b, u64 v, u64 p) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = modular::sub(out[i], modular::mul(v, b[i], p), p);
  modular::trim(out);
  return out;
}

// Evaluation points where the t-degree does not drop.
std::vector<u64> good_points(const ModPoly& a, const ModPoly& b, int degree, std::size_t count, u64 p) {
  std::vector<u64> out;
  for (u64 v = 1; out.size() < count; ++v) {
    if (modular::degree(combine(a, b, v, p)) == degree) out.push_back(v);
  }
  return out;
}

// Factor of f depending on the first variable only.
IntPoly content_in_first(const BivarIntPoly& f) { return f.content_s(); }

bool squarefree_by_specialization(const BivarIntPoly& f) {
  const u64 p = modular::prime(7);
  for (u64 y0 = 3; y0 < 40; ++y0) {
    ModPoly g;
    for (int i = 0; i <= f.deg_t(); ++i) {
      mpz_class c = 0;
      mpz_class pw = 1;
      for (int j = 0; j <= f.deg_s(); ++j) {
        c += f.coeff(i, j) * pw;
        pw *= y0;
      }
      g.push_back(modular::reduce(c, p));
    }
    modular::trim(g);
    if (modular::degree(g) != f.deg_t()) continue;
    ModPoly dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(modular::mul(g[i], i % p, p));
    modular::trim(dg);
    return modular::degree(modular::gcd(g, dg, p)) == 0;
  }
  return false;
}

}  // namespace

std::optional<ImplicitCurve> implicitize(const Parametrization& c, std::chrono::milliseconds budget) {
  const auto deadline = std::chrono::steady_clock::now() + budget;
  const IntPoly& p1 = c.x().num();
  const IntPoly& q1 = c.x().den();
  const IntPoly& p2 = c.y().num();
  const IntPoly& q2 = c.y().den();
  const int n1 = std::max(p1.degree(), q1.degree());
  const int n2 = std::max(p2.degree(), q2.degree());
  if (n1 <= 0 || n2 <= 0) throw Error(ErrorCode::kInvalidArgument, "implicitization needs two non-constant components");
  // f has degree <= n2 in x and <= n1 in y; Hadamard bound on its coefficients.
  const mpz_class bound = 2 * [&] {
    mpz_class b = 1;
    for (int i = 0; i < n2; ++i) b *= norm1(p1) + norm1(q1);
    for (int i = 0; i < n1; ++i) b *= norm1(p2) + norm1(q2);
    return b;
  }() + 1;
  const std::size_t nx = static_cast<std::size_t>(n2) + 1;
  const std::size_t ny = static_cast<std::size_t>(n1) + 1;
  modular::CrtAccumulator crt(nx * ny);
  for (std::size_t k = 0; crt.modulus() <= bound; ++k) {
    if (std::chrono::steady_clock::now() > deadline) return std::nullopt;
    const u64 p = modular::prime(k);
    const ModPoly mp1 = reduce_poly(p1, p);
    const ModPoly mq1 = reduce_poly(q1, p);
    const ModPoly mp2 = reduce_poly(p2, p);
    const ModPoly mq2 = reduce_poly(q2, p);
    const std::vector<u64> xs = good_points(mp1, mq1, n1, nx, p);
    const std::vector<u64> ys = good_points(mp2, mq2, n2, ny, p);
    // coeff[i][j]: coefficient of x^i y^j.
    std::vector<std::vector<u64>> by_y_for_x(nx);
    for (std::size_t a = 0; a < nx; ++a) {
      const ModPoly fx = combine(mp1, mq1, xs[a], p);
      std::vector<u64> vals(ny);
      for (std::size_t b = 0; b < ny; ++b) vals[b] = modular::resultant(fx, combine(mp2, mq2, ys[b], p), p);
      ModPoly in_y = modular::interpolate(ys, vals, p);
      in_y.resize(ny, 0);
      by_y_for_x[a] = std::move(in_y);
    }
    std::vector<u64> residues(nx * ny, 0);
    for (std::size_t j = 0; j < ny; ++j) {
      std::vector<u64> vals(nx);
      for (std::size_t a = 0; a < nx; ++a) vals[a] = by_y_for_x[a][j];
      ModPoly in_x = modular::interpolate(xs, vals, p);
      in_x.resize(nx, 0);
      for (std::size_t i = 0; i < nx; ++i) residues[i * ny + j] = in_x[i];
    }
    crt.add(residues, p);
  }
  const std::vector<mpz_class> coeffs = crt.symmetric();
  std::vector<std::vector<mpz_class>> m(nx, std::vector<mpz_class>(ny));
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) m[i][j] = coeffs[i * ny + j];
  }
  BivarIntPoly f = BivarIntPoly::from_matrix(m);
  if (f.is_zero()) throw Error(ErrorCode::kInternal, "eliminant vanishes identically");
  // Spurious factors in x alone or y alone come from the behaviour at t = infinity.
  const IntPoly cx = content_in_first(f);
  if (cx.degree() > 0) f = divexact(f, BivarIntPoly::in_t(cx));
  const IntPoly cy = content_in_first(f.swap_vars());
  if (cy.degree() > 0) f = divexact(f, BivarIntPoly::in_s(cy));
  f = f.normalized();
  if (!squarefree_by_specialization(f)) {
    BivarIntPoly dx;
    {
      std::vector<std::vector<mpz_class>> d = f.to_matrix();
      std::vector<std::vector<mpz_class>> out;
      for (std::size_t i = 1; i < d.size(); ++i) {
        out.push_back(d[i]);
        for (auto& v : out.back()) v *= static_cast<unsigned long>(i);
      }
      dx = BivarIntPoly::from_matrix(out);
    }
    const BivarIntPoly g = gcd_bivar(f, dx);
    if (g.total_degree() > 0) f = divexact(f, g).normalized();
  }
  ImplicitCurve out;
  out.f = f;
  out.total_degree = f.total_degree();
  out.term_count = f.term_count();
  return out;
}

BigFloat check_vertex(const ImplicitCurve& f, const std::vector<BigFloat>& coords) {
  return BigFloat::abs(f.f.eval(coords[0], coords[1]));
}

bool vanishes_exactly(const ImplicitCurve& f, const mpq_class& x, const mpq_class& y) { return f.f.eval(x, y) == 0; }

}  // namespace rtop
