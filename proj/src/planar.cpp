#include "rtop/planar.hpp"

#include <algorithm>

#include "rtop/complexroots.hpp"
#include "rtop/error.hpp"

namespace rtop {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::kMatchingFailure, what); }

IntPoly normalized(IntPoly p) {
  if (p.is_zero()) return p;
  p = p.primitive_part();
  if (p.leading() < 0) p = -p;
  return p;
}

bool x_bounded(const Parametrization& c) { return c.x().num().degree() <= c.x().den().degree(); }

// Rational strictly inside the piece between special values lo and hi
// (indices into `special`, -1 / size() for the ends of the real line).
mpq_class piece_sample(const CriticalData& d, int lo, int hi) {
  const int n = static_cast<int>(d.special.size());
  if (lo < 0 && hi >= n) return 0;
  if (lo < 0) return d.special[static_cast<std::size_t>(hi)].t->bracket().lo - 1;
  if (hi >= n) return d.special[static_cast<std::size_t>(lo)].t->bracket().hi + 1;
  return simplest_between(d.special[static_cast<std::size_t>(lo)].t->bracket().hi, d.special[static_cast<std::size_t>(hi)].t->bracket().lo);
}

std::vector<int> breakpoints(const CriticalData& d) {
  std::vector<int> bp;
  for (std::size_t i = 0; i < d.special.size(); ++i) {
    if (d.special[i].pole || d.special[i].x_critical) bp.push_back(static_cast<int>(i));
  }
  return bp;
}

int infinity_line(const CriticalData& d) {
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    if (d.lines[i].has_infinity) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

IntPoly critical_polynomial(const Parametrization& c) {
  IntPoly big_m = c.resultant_m();
  if (c.g2().is_zero()) {
    big_m = IntPoly{1};
  } else if (big_m.is_zero()) {
    throw Error(ErrorCode::kInternal, "properness violated");
  }
  const IntPoly n = derivative_numerator(c.x());
  if (n.is_zero()) throw Error(ErrorCode::kInternal, "x is constant");
  IntPoly m = squarefree_part(big_m * n);
  const IntPoly g = gcd(m, c.q_tilde_planar());
  if (g.degree() > 0) m = divexact(m, g);
  return normalized(m);
}

CriticalData critical_points(const Parametrization& c, const IntPoly& m, int digits) {
  CriticalData d;
  d.m = m;
  d.n = derivative_numerator(c.x());
  for (const auto& r : isolate_real_roots(m)) {
    SpecialValue s;
    s.t = AlgebraicReal::from(r);
    s.x_critical = s.t->sign_of(d.n) == 0;
    d.special.push_back(std::move(s));
  }
  for (const auto& r : isolate_real_roots(c.x().den())) {
    SpecialValue s;
    s.t = AlgebraicReal::from(r);
    s.pole = true;
    d.special.push_back(std::move(s));
  }
  std::sort(d.special.begin(), d.special.end(), [](const SpecialValue& a, const SpecialValue& b) { return compare(*a.t, *b.t) < 0; });
  for (std::size_t i = 0; i + 1 < d.special.size(); ++i) compare(*d.special[i].t, *d.special[i + 1].t);

  d.infinity = point_at_infinity(c.projection());

  for (std::size_t i = 0; i < d.special.size(); ++i) {
    if (d.special[i].pole) continue;
    Enclosure x = value_of(c.x(), d.special[i].t);
    bool placed = false;
    for (auto& line : d.lines) {
      if (compare_numeric(line.x, x, digits) == 0) {
        line.members.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (placed) continue;
    CriticalLine line;
    if (auto v = d.special[i].t->exact_value()) {
      line.level = c.x().eval(*v);
      line.x = constant(*line.level);
    } else {
      line.anchor = d.special[i].t;
      line.x = std::move(x);
    }
    line.members.push_back(static_cast<int>(i));
    d.lines.push_back(std::move(line));
  }
  if (d.infinity.exists) {
    const mpq_class x_inf = d.infinity.coords[0];
    bool placed = false;
    for (auto& line : d.lines) {
      if (compare_numeric(line.x, constant(x_inf), digits) == 0) {
        line.has_infinity = true;
        line.level = x_inf;
        line.anchor.reset();
        line.x = constant(x_inf);
        placed = true;
        break;
      }
    }
    if (!placed) {
      CriticalLine line;
      line.level = x_inf;
      line.x = constant(x_inf);
      line.has_infinity = true;
      d.lines.push_back(std::move(line));
    }
  }
  std::sort(d.lines.begin(), d.lines.end(), [digits](const CriticalLine& a, const CriticalLine& b) { return compare_numeric(a.x, b.x, digits) < 0; });
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    for (int k : d.lines[i].members) d.special[static_cast<std::size_t>(k)].line = static_cast<int>(i);
  }
  return d;
}

std::vector<LinePoint> points_on_critical_line(const Parametrization& c, const CriticalData& d, int index, int digits) {
  const CriticalLine& line = d.lines[static_cast<std::size_t>(index)];
  const std::vector<int> bp = breakpoints(d);
  const int n_special = static_cast<int>(d.special.size());
  const int inf_line = infinity_line(d);
  const mpfr_prec_t cap_bits = 4 * bits_for_digits(digits) + 64;

  // Position of a limit value relative to the line: -1 below, 0 on, +1 above.
  auto rel_at = [&](int special_index, int dir, bool left_end) {
    if (special_index < 0 || special_index >= n_special) {
      if (x_bounded(c)) return inf_line < 0 ? 0 : (inf_line > index) - (inf_line < index);
      return left_end ? -dir : dir;
    }
    const SpecialValue& s = d.special[static_cast<std::size_t>(special_index)];
    if (s.pole) return left_end ? -dir : dir;
    return (s.line > index) - (s.line < index);
  };
  auto side = [&](const mpq_class& t) { return compare_numeric(constant(c.x().eval(t)), line.x, digits); };

  // Interior members of the line (roots of m with x' != 0), grouped by piece.
  std::vector<std::vector<int>> interior(bp.size() + 1);
  {
    std::size_t k = 0;
    for (int i = 0; i < n_special; ++i) {
      while (k < bp.size() && bp[k] < i) ++k;
      if (k < bp.size() && bp[k] == i) continue;
      if (d.special[static_cast<std::size_t>(i)].line == index) interior[k].push_back(i);
    }
  }

  std::vector<LinePoint> out;
  if (line.has_infinity) out.push_back({ParamValue::minus_inf(), constant(d.infinity.coords[1]), false});
  for (std::size_t k = 0; k <= bp.size(); ++k) {
    const int lo = k == 0 ? -1 : bp[k - 1];
    const int hi = k == bp.size() ? n_special : bp[k];
    const mpq_class mid = piece_sample(d, lo, hi);
    const int dir = d.n.sign_at(mid);
    const int rel_lo = rel_at(lo, dir, true);
    const int rel_hi = rel_at(hi, dir, false);
    const bool crosses = rel_lo * rel_hi == -1;
    const auto& members = interior[k];
    if (!crosses && !members.empty()) mismatch("critical value outside its monotone piece");
    if (crosses && members.size() > 1) mismatch("two critical values on one monotone piece");
    if (crosses && members.size() == 1) {
      const auto& t = d.special[static_cast<std::size_t>(members[0])].t;
      out.push_back({ParamValue::finite(t), value_of(c.y(), t), true});
    } else if (crosses) {
      mpq_class a = mid;
      mpq_class b = mid;
      bool ok = false;
      for (int j = 1; j <= 2000 && !ok; ++j) {
        if (lo < 0) {
          a = mid - mpq_class(mpz_class(1) << static_cast<unsigned>(j));
        } else {
          const auto& t = d.special[static_cast<std::size_t>(lo)].t;
          mpq_class w = mid - t->bracket().hi;
          mpz_class scale = mpz_class(1) << static_cast<unsigned>(j);
          t->refine(w / scale);
          a = t->bracket().hi + (mid - t->bracket().hi) / scale;
        }
        ok = side(a) == rel_lo;
      }
      if (!ok) mismatch("level root bracket not found");
      ok = false;
      for (int j = 1; j <= 2000 && !ok; ++j) {
        if (hi >= n_special) {
          b = mid + mpq_class(mpz_class(1) << static_cast<unsigned>(j));
        } else {
          const auto& t = d.special[static_cast<std::size_t>(hi)].t;
          mpq_class w = t->bracket().lo - mid;
          mpz_class scale = mpz_class(1) << static_cast<unsigned>(j);
          t->refine(w / scale);
          b = t->bracket().lo - (t->bracket().lo - mid) / scale;
        }
        ok = side(b) == rel_hi;
      }
      if (!ok) mismatch("level root bracket not found");
      std::shared_ptr<const RealRoot> r;
      if (line.level) {
        r = std::make_shared<LevelRoot>(c.x(), Interval{a, b}, *line.level, cap_bits);
      } else {
        r = std::make_shared<LevelRoot>(c.x(), Interval{a, b}, line.anchor, cap_bits);
      }
      out.push_back({ParamValue::finite(r), value_of(c.y(), r), false});
    }
    if (k < bp.size()) {
      const SpecialValue& s = d.special[static_cast<std::size_t>(bp[k])];
      if (!s.pole && s.line == index) out.push_back({ParamValue::finite(s.t), value_of(c.y(), s.t), true});
    }
  }
  if (line.has_infinity) out.push_back({ParamValue::plus_inf(), constant(d.infinity.coords[1]), false});
  return out;
}

namespace {

IntPoly line_polynomial(const Parametrization& c, const mpq_class& a) {
  return c.x().num() * a.get_den() - c.x().den() * a.get_num();
}

}  // namespace

std::vector<LinePoint> points_on_line(const Parametrization& c, const mpq_class& a) {
  std::vector<LinePoint> out;
  const IntPoly q = c.q_tilde_planar();
  for (const auto& r : isolate_real_roots(line_polynomial(c, a))) {
    auto t = AlgebraicReal::from(r);
    if (t->sign_of(q) == 0) continue;
    out.push_back({ParamValue::finite(t), value_of(c.y(), t), false});
  }
  return out;
}

std::size_t connect(const ParamValue& t_a, int x_prime_sign, bool toward_right, const std::vector<ParamValue>& v_b) {
  const bool want_greater = toward_right == (x_prime_sign > 0);
  if (want_greater) {
    for (std::size_t i = 0; i < v_b.size(); ++i) {
      const int s = compare(v_b[i], t_a);
      if (s == 0) mismatch("generator shared by two lines");
      if (s > 0) return i;
    }
  } else {
    for (std::size_t i = v_b.size(); i-- > 0;) {
      const int s = compare(v_b[i], t_a);
      if (s == 0) mismatch("generator shared by two lines");
      if (s < 0) return i;
    }
  }
  mismatch("no matching point on the adjacent line");
}

namespace {

struct GenRef {
  int vertex = 0;
  int gen = 0;
};

struct LineGens {
  std::vector<ParamValue> t;
  std::vector<GenRef> ref;
};

mpq_class sample_abscissa(const CriticalData& d, std::size_t i, int digits) {
  const std::size_t n = d.lines.size();
  for (mpfr_prec_t bits = bits_for_digits(digits); bits <= (1 << 16); bits *= 2) {
    if (i == 0) {
      const mpq_class a = d.lines[0].x(bits).lo.to_rational();
      return simplest_between(a - mpq_class(3, 2), a - mpq_class(1, 2));
    }
    if (i == n) {
      const mpq_class b = d.lines[n - 1].x(bits).hi.to_rational();
      return simplest_between(b + mpq_class(1, 2), b + mpq_class(3, 2));
    }
    const FloatInterval a = d.lines[i - 1].x(bits);
    const FloatInterval b = d.lines[i].x(bits);
    if (a.hi < b.lo) return simplest_between(a.hi.to_rational(), b.lo.to_rational());
  }
  mismatch("critical abscissas not separated");
}

// Nearest pole of x beyond t in the given direction, or the matching infinity.
ParamValue ray_end(const CriticalData& d, const ParamValue& t, bool increasing) {
  if (increasing) {
    for (const auto& s : d.special) {
      if (s.pole && compare(ParamValue::finite(s.t), t) > 0) return ParamValue::finite(s.t);
    }
    return ParamValue::plus_inf();
  }
  for (auto it = d.special.rbegin(); it != d.special.rend(); ++it) {
    if (it->pole && compare(ParamValue::finite(it->t), t) < 0) return ParamValue::finite(it->t);
  }
  return ParamValue::minus_inf();
}

int x_prime_sign(const CriticalData& d, const ParamValue& t) {
  const auto* r = dynamic_cast<const AlgebraicReal*>(&t.root());
  if (r == nullptr) throw Error(ErrorCode::kInternal, "sample generator is not algebraic");
  const int s = r->sign_of(d.n);
  if (s == 0) mismatch("x' vanishes on a non-critical line");
  return s;
}

}  // namespace

TopologyGraph build_graph(const Parametrization& c, const CriticalData& d, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  TopologyGraph g;
  g.metadata.digits_used = digits;
  const std::size_t n_lines = d.lines.size();
  std::vector<LineGens> line_gens(n_lines);

  auto y_coord = [&](const LinePoint& p, Vertex& v) {
    if (!p.t.is_finite()) {
      v.coords.emplace_back(d.infinity.coords[1], bits);
      v.exact.emplace_back(d.infinity.coords[1]);
      return;
    }
    if (auto t = p.t.root().exact_value()) {
      const mpq_class y = c.y().eval(*t);
      v.coords.emplace_back(y, bits);
      v.exact.emplace_back(y);
      return;
    }
    v.coords.push_back(p.y(bits).midpoint());
    v.exact.emplace_back();
  };

  for (std::size_t i = 0; i < n_lines; ++i) {
    const CriticalLine& line = d.lines[i];
    const std::vector<LinePoint> pts = points_on_critical_line(c, d, static_cast<int>(i), digits);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      bool placed = false;
      for (auto& grp : groups) {
        if (compare_numeric(pts[grp.front()].y, pts[k].y, digits) == 0) {
          grp.push_back(k);
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({k});
    }
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) { return compare_numeric(pts[a.front()].y, pts[b.front()].y, digits) < 0; });
    for (std::size_t a = 0; a + 1 < groups.size(); ++a) {
      if (compare_numeric(pts[groups[a].front()].y, pts[groups[a + 1].front()].y, digits) >= 0) mismatch("points on a line not separated");
    }
    std::vector<GenRef> refs(pts.size());
    for (const auto& grp : groups) {
      Vertex v;
      v.id = static_cast<int>(g.vertices.size());
      for (std::size_t j = 0; j < grp.size(); ++j) refs[grp[j]] = {v.id, static_cast<int>(j)};
      bool infinite = false;
      bool special = false;
      int finite = 0;
      for (std::size_t k : grp) {
        infinite = infinite || !pts[k].t.is_finite();
        special = special || pts[k].special;
        finite += pts[k].t.is_finite() ? 1 : 0;
      }
      if (!infinite && finite > 1) {
        for (std::size_t k : grp) {
          if (!pts[k].special) mismatch("distinct points merged on a critical line");
        }
      }
      v.kind = infinite ? VertexKind::kInfinity : (special ? VertexKind::kCritical : VertexKind::kOnline);
      if (line.level) {
        v.coords.emplace_back(*line.level, bits);
        v.exact.emplace_back(*line.level);
      } else {
        v.coords.push_back(line.x(bits).midpoint());
        v.exact.emplace_back();
      }
      const LinePoint* rep = &pts[grp.front()];
      for (std::size_t k : grp) {
        if (!pts[k].t.is_finite()) rep = &pts[k];
      }
      y_coord(*rep, v);
      for (std::size_t k : grp) v.generators.push_back(pts[k].t);
      g.vertices.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      line_gens[i].t.push_back(pts[k].t);
      line_gens[i].ref.push_back(refs[k]);
    }
  }

  auto add_edge = [&](int va, const ParamValue& ta, int vb, int gb, const ParamValue& tb) {
    Edge e;
    if (compare(ta, tb) < 0) {
      e.from = va;
      e.from_gen = 0;
      e.to = vb;
      e.to_gen = gb;
      e.t_lo = ta;
      e.t_hi = tb;
    } else {
      e.from = vb;
      e.from_gen = gb;
      e.to = va;
      e.to_gen = 0;
      e.t_lo = tb;
      e.t_hi = ta;
    }
    g.edges.push_back(std::move(e));
  };
  auto add_ray = [&](int va, const ParamValue& ta, int sign, bool toward_right) {
    const bool increasing = toward_right == (sign > 0);
    Edge e;
    e.from = va;
    e.from_gen = 0;
    e.to = -1;
    e.to_gen = -1;
    e.bounded = false;
    if (increasing) {
      e.t_lo = ta;
      e.t_hi = ray_end(d, ta, true);
    } else {
      e.t_lo = ray_end(d, ta, false);
      e.t_hi = ta;
    }
    g.edges.push_back(std::move(e));
  };

  const std::size_t n_samples = n_lines == 0 ? 1 : n_lines + 1;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const mpq_class a = n_lines == 0 ? mpq_class(0) : sample_abscissa(d, i, digits);
    std::vector<LinePoint> pts = points_on_line(c, a);
    {
      IntPoly lp = squarefree_part(line_polynomial(c, a));
      const IntPoly q = gcd(lp, c.q_tilde_planar());
      if (q.degree() > 0) lp = divexact(lp, q);
      if (numeric_real_root_count(lp, digits) != static_cast<int>(pts.size())) mismatch("numeric point count differs on a sample line");
    }
    std::vector<std::size_t> order(pts.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return compare_numeric(pts[x].y, pts[y].y, digits) < 0; });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (compare_numeric(pts[order[k]].y, pts[order[k + 1]].y, digits) >= 0) mismatch("sample points not separated");
    }
    for (std::size_t k : order) {
      const LinePoint& p = pts[k];
      Vertex v;
      v.id = static_cast<int>(g.vertices.size());
      v.kind = VertexKind::kSample;
      v.coords.emplace_back(a, bits);
      v.exact.emplace_back(a);
      y_coord(p, v);
      v.generators.push_back(p.t);
      const int id = v.id;
      g.vertices.push_back(std::move(v));

      const int sign = x_prime_sign(d, p.t);
      if (i == 0) {
        add_ray(id, p.t, sign, false);
      } else {
        const LineGens& lg = line_gens[i - 1];
        const std::size_t j = connect(p.t, sign, false, lg.t);
        add_edge(id, p.t, lg.ref[j].vertex, lg.ref[j].gen, lg.t[j]);
      }
      if (i + 1 == n_samples) {
        add_ray(id, p.t, sign, true);
      } else {
        const LineGens& lg = line_gens[i];
        const std::size_t j = connect(p.t, sign, true, lg.t);
        add_edge(id, p.t, lg.ref[j].vertex, lg.ref[j].gen, lg.t[j]);
      }
    }
  }
  validate_graph(g);
  return g;
}

void validate_graph(const TopologyGraph& g) {
  for (const auto& v : g.vertices) {
    std::vector<int> ends(v.generators.size(), 0);
    for (const auto& e : g.edges) {
      if (e.from == v.id && e.from_gen >= 0 && static_cast<std::size_t>(e.from_gen) < ends.size()) ++ends[static_cast<std::size_t>(e.from_gen)];
      if (e.to == v.id && e.to_gen >= 0 && static_cast<std::size_t>(e.to_gen) < ends.size()) ++ends[static_cast<std::size_t>(e.to_gen)];
    }
    for (std::size_t j = 0; j < ends.size(); ++j) {
      const int expected = v.generators[j].is_finite() ? 2 : 1;
      if (ends[j] != expected) mismatch("vertex " + std::to_string(v.id) + " has " + std::to_string(ends[j]) + " edge ends at generator " + std::to_string(j));
    }
  }
}

TopologyGraph with_escalation(const PlanarOptions& opts, const std::function<TopologyGraph(int)>& attempt) {
  PrecisionContext ctx;
  ctx.digits = opts.digits;
  ctx.max_digits = opts.max_digits;
  int failures = 0;
  for (;;) {
    try {
      if (failures < opts.inject_failures) mismatch("injected failure");
      TopologyGraph g = attempt(ctx.digits);
      g.metadata.digits_used = ctx.digits;
      g.metadata.escalations = failures;
      return g;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMatchingFailure) throw;
      ++failures;
      ctx.escalate();
    }
  }
}

TopologyGraph planar_topology(const Parametrization& c, const PlanarOptions& opts) {
  const IntPoly m = critical_polynomial(c);
  return with_escalation(opts, [&](int digits) {
    const CriticalData d = critical_points(c, m, digits);
    return build_graph(c, d, digits);
  });
}

}  // namespace rtop
