#include "rtop/curve.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "rtop/error.hpp"

namespace rtop {

std::string Transform::describe() const {
  switch (kind) {
    case Kind::kAxisSwap:
      return "axis_swap";
    case Kind::kShear2d:
      return "shear2d(" + mu.get_str() + ")";
    case Kind::kShear3d:
      return "shear3d(" + a.get_str() + "," + b.get_str() + ")";
  }
  return "";
}

namespace {

template <class T, class Mul>
std::vector<T> invert(const std::vector<Transform>& applied, std::vector<T> c, Mul mul) {
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    switch (it->kind) {
      case Transform::Kind::kAxisSwap:
        std::swap(c[0], c[1]);
        break;
      case Transform::Kind::kShear2d:
        c[0] = c[0] + mul(it->mu, c[1]);
        break;
      case Transform::Kind::kShear3d:
        c[0] = c[0] - mul(it->a, c[2]);
        c[1] = c[1] - mul(it->b, c[2]);
        break;
    }
  }
  return c;
}

}  // namespace

std::vector<BigFloat> to_original_frame(const std::vector<Transform>& applied, std::vector<BigFloat> coords) {
  return invert(applied, std::move(coords), [](const mpq_class& k, const BigFloat& v) { return BigFloat(k, v.precision()) * v; });
}

std::vector<mpq_class> to_original_frame(const std::vector<Transform>& applied, std::vector<mpq_class> coords) {
  return invert(applied, std::move(coords), [](const mpq_class& k, const mpq_class& v) { return mpq_class(k * v); });
}

struct Parametrization::Cache {
  std::once_flag g_flag;
  std::once_flag h_flag;
  std::once_flag m_flag;
  BivarIntPoly g_tilde;
  BivarIntPoly h1;
  BivarIntPoly h2;
  IntPoly m;
};

Parametrization::Parametrization(std::vector<RatFunc> components, std::vector<Transform> transforms)
    : components_(std::move(components)), transforms_(std::move(transforms)), cache_(std::make_shared<Cache>()) {
  if (components_.size() != 2 && components_.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "a curve needs 2 or 3 components");
  }
}

Parametrization Parametrization::projection() const { return Parametrization({components_[0], components_[1]}, transforms_); }

BivarIntPoly Parametrization::g_tilde_i(int i) const {
  const RatFunc& f = component(i);
  return BivarIntPoly::difference_form(f.num(), f.den());
}

const BivarIntPoly& Parametrization::g1() const {
  std::call_once(cache_->h_flag, [this] {
    const BivarIntPoly diag = BivarIntPoly::diagonal();
    cache_->h1 = divexact(g_tilde_i(0), diag);
    cache_->h2 = divexact(g_tilde_i(1), diag);
  });
  return cache_->h1;
}

const BivarIntPoly& Parametrization::g2() const {
  g1();
  return cache_->h2;
}

const IntPoly& Parametrization::resultant_m() const {
  std::call_once(cache_->m_flag, [this] {
    const BivarIntPoly& a = g1();
    const BivarIntPoly& b = g2();
    if (a.is_zero() || b.is_zero()) {
      cache_->m = IntPoly();
    } else {
      cache_->m = resultant_s(a, b);
    }
  });
  return cache_->m;
}

const BivarIntPoly& Parametrization::g_tilde() const {
  std::call_once(cache_->g_flag, [this] {
    const BivarIntPoly diag = BivarIntPoly::diagonal();
    if (!resultant_m().is_zero()) {
      cache_->g_tilde = diag;
      return;
    }
    if (dimension() == 3) {
      // A common factor of G1, G2, G3 divides G2 + k G3 for every k.
      const BivarIntPoly h3 = divexact(g_tilde_i(2), diag);
      if (!g1().is_zero()) {
        for (long k = 1; k <= 3; ++k) {
          if (!resultant_s(g1(), g2() + h3 * mpz_class(k)).is_zero()) {
            cache_->g_tilde = diag;
            return;
          }
        }
      }
    }
    std::vector<BivarIntPoly> parts;
    for (int i = 0; i < dimension(); ++i) parts.push_back(g_tilde_i(i));
    cache_->g_tilde = gcd_bivar(parts);
  });
  return cache_->g_tilde;
}

IntPoly Parametrization::q_tilde_planar() const { return lcm(components_[0].den(), components_[1].den()); }

IntPoly Parametrization::q_tilde() const {
  IntPoly q = q_tilde_planar();
  if (dimension() == 3) q = lcm(q, components_[2].den());
  return q;
}

std::string Parametrization::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dimension(); ++i) {
    if (i > 0) os << ", ";
    os << component(i).to_string();
  }
  os << ")";
  return os.str();
}

ProperResult properness_check(const Parametrization& c) {
  ProperResult r;
  r.g_tilde = c.g_tilde();
  r.proper = r.g_tilde == BivarIntPoly::diagonal();
  return r;
}

namespace {

// Part of a square-free `q` whose roots are not roots of `other`.
IntPoly roots_not_in(const IntPoly& q, const IntPoly& other) {
  if (q.degree() <= 0) return IntPoly{1};
  IntPoly h = squarefree_part(q);
  IntPoly g = gcd(h, other);
  if (g.degree() > 0) h = divexact(h, g);
  return h;
}

bool has_real_root(const IntPoly& p) { return p.degree() > 0 && count_real_roots(p) > 0; }

bool bounded(const RatFunc& f) { return f.num().degree() <= f.den().degree(); }

}  // namespace

AsymptoteCase vertical_asymptote_check(const Parametrization& c) {
  if (has_real_root(roots_not_in(c.y().den(), c.x().den()))) return AsymptoteCase::kA;
  if (!bounded(c.y()) && bounded(c.x())) return AsymptoteCase::kB;
  return AsymptoteCase::kNone;
}

AsymptoteCase z_asymptote_check(const Parametrization& c) {
  if (c.dimension() != 3) return AsymptoteCase::kNone;
  const RatFunc& z = c.component(2);
  if (has_real_root(roots_not_in(z.den(), c.x().den() * c.y().den()))) return AsymptoteCase::kA;
  if (!bounded(z) && bounded(c.x()) && bounded(c.y())) return AsymptoteCase::kB;
  return AsymptoteCase::kNone;
}

InfinityPoint point_at_infinity(const Parametrization& c) {
  InfinityPoint p;
  for (const auto& f : c.components()) {
    if (!bounded(f)) return p;
  }
  p.exists = true;
  IntPoly g;
  for (const auto& f : c.components()) {
    mpq_class a = 0;
    if (f.num().degree() == f.den().degree() && !f.num().is_zero()) {
      a = mpq_class(f.num().leading(), f.den().leading());
      a.canonicalize();
    }
    p.coords.push_back(a);
    // a q - p scaled to integers.
    IntPoly diff = f.den() * a.get_num() - f.num() * a.get_den();
    g = gcd(g, diff);
  }
  p.reaching_poly = g;
  if (g.degree() >= 1) {
    p.reached = true;
    p.reaching_values = isolate_real_roots(g);
  }
  return p;
}

Parametrization repair_transform(const Parametrization& c, const Transform& t) {
  std::vector<RatFunc> comps = c.components();
  switch (t.kind) {
    case Transform::Kind::kAxisSwap:
      std::swap(comps[0], comps[1]);
      break;
    case Transform::Kind::kShear2d:
      if (t.mu == 0) return c;
      comps[0] = comps[0] - t.mu * comps[1];
      break;
    case Transform::Kind::kShear3d:
      if (c.dimension() != 3) throw Error(ErrorCode::kInvalidArgument, "shear3d needs a space curve");
      if (t.a == 0 && t.b == 0) return c;
      comps[0] = comps[0] + t.a * comps[2];
      comps[1] = comps[1] + t.b * comps[2];
      break;
  }
  std::vector<Transform> record = c.transforms();
  record.push_back(t);
  return Parametrization(std::move(comps), std::move(record));
}

namespace {

std::vector<mpq_class> shear_candidates() {
  std::vector<mpq_class> mus;
  for (int k = 1; k <= 8; ++k) {
    mus.emplace_back(k);
    mus.emplace_back(-k);
  }
  for (int k = 1; k <= 4; ++k) {
    mus.push_back(mpq_class(1, 2) * (2 * k - 1));
    mus.push_back(mpq_class(-1, 2) * (2 * k - 1));
  }
  return mus;
}

std::vector<std::pair<int, int>> shear3d_candidates() {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= 3; ++r) {
    for (int a = -r; a <= r; ++a) {
      for (int b = -r; b <= r; ++b) {
        if (std::max(std::abs(a), std::abs(b)) == r) out.emplace_back(a, b);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](auto x, auto y) {
    return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
  });
  return out;
}

bool planar_ok(const Parametrization& c) {
  if (c.x().num().degree() <= 0 && c.x().den().degree() <= 0) return false;
  if (vertical_asymptote_check(c) != AsymptoteCase::kNone) return false;
  if (c.dimension() == 3) {
    if (z_asymptote_check(c) != AsymptoteCase::kNone) return false;
  }
  return true;
}

// Swap, then shears of the swapped and of the unswapped curve.
std::optional<Parametrization> repair_planar(const Parametrization& c) {
  if (planar_ok(c)) return c;
  Parametrization swapped = repair_transform(c, Transform::axis_swap());
  if (planar_ok(swapped)) return swapped;
  for (const Parametrization* base : std::vector<const Parametrization*>{&swapped, &c}) {
    for (const auto& mu : shear_candidates()) {
      Parametrization s = repair_transform(*base, Transform::shear2d(mu));
      if (planar_ok(s)) return s;
    }
  }
  return std::nullopt;
}

bool projection_proper(const Parametrization& c) { return !c.resultant_m().is_zero() || properness_check(c.projection()).proper; }

}  // namespace

Parametrization prepare(const Parametrization& c) {
  if (c.x().num().degree() <= 0 && c.x().den().degree() <= 0 && c.y().num().degree() <= 0 && c.y().den().degree() <= 0) {
    throw Error(ErrorCode::kImproper, "improper parametrization: the curve is a point");
  }
  if (!properness_check(c).proper) throw Error(ErrorCode::kImproper, "improper parametrization");
  if (c.dimension() == 2) {
    if (auto r = repair_planar(c)) return *r;
    throw Error(ErrorCode::kRepairFailed, "hypothesis repair failed");
  }
  std::vector<std::pair<int, int>> grid = {{0, 0}};
  for (const auto& g : shear3d_candidates()) grid.push_back(g);
  for (const auto& [a, b] : grid) {
    Parametrization s = repair_transform(c, Transform::shear3d(a, b));
    if (z_asymptote_check(s) != AsymptoteCase::kNone) continue;
    if (!projection_proper(s)) continue;
    if (auto r = repair_planar(s)) return *r;
  }
  throw Error(ErrorCode::kRepairFailed, "hypothesis repair failed");
}

}  // namespace rtop
