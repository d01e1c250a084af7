#include "property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "rtop/error.hpp"
#include "rtop/planar.hpp"
#include "rtop/topology.hpp"

namespace testing {

using namespace rtop;

namespace {

constexpr int kDigits = 10;

Parametrization random_curve(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::uniform_int_distribution<int> degree(1, 4);
  std::bernoulli_distribution rational(0.5);
  std::vector<RatFunc> comps;
  // Shared denominator, as produced by common parametrizations.
  std::vector<mpz_class> den{1};
  if (rational(rng)) {
    den.assign(static_cast<std::size_t>(degree(rng)) + 1, 0);
    for (auto& c : den) c = coeff(rng);
    if (den.back() == 0) den.back() = 1;
  }
  for (int i = 0; i < 2; ++i) {
    std::vector<mpz_class> num(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : num) c = coeff(rng);
    if (num.back() == 0) num.back() = 1;
    comps.emplace_back(IntPoly(num), IntPoly(den));
  }
  return Parametrization(comps);
}

std::optional<double> eval(const RatFunc& f, double t) {
  const double d = f.den().eval(BigFloat(t, 64)).to_double();
  if (d == 0) return std::nullopt;
  const double v = f.num().eval(BigFloat(t, 64)).to_double() / d;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

// Parameter samples strictly inside (lo, hi); infinite ends are reached
// through t = a +- s / (1 - s).
std::vector<double> samples(const std::optional<double>& lo, const std::optional<double>& hi, int n) {
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) {
    const double s = static_cast<double>(k) / (n + 1);
    if (lo && hi) {
      out.push_back(*lo + s * (*hi - *lo));
    } else if (lo) {
      out.push_back(*lo + s / (1 - s));
    } else if (hi) {
      out.push_back(*hi - (1 - s) / s);
    } else {
      out.push_back(std::tan((s - 0.5) * 3.14159265358979));
    }
  }
  return out;
}

std::optional<double> finite_value(const ParamValue& v) {
  if (!v.is_finite()) return std::nullopt;
  return v.root().approx(64).to_double();
}

// (a) every generator maps to its vertex.
int residual_failures(const Parametrization& c, const TopologyGraph& g, std::vector<std::string>& notes) {
  const mpfr_prec_t bits = bits_for_digits(kDigits + 20);
  const BigFloat tol = BigFloat::pow10(1 - g.metadata.digits_used, bits);
  const InfinityPoint inf = point_at_infinity(c);
  int failures = 0;
  for (const auto& v : g.vertices) {
    for (const auto& t : v.generators) {
      for (int i = 0; i < 2; ++i) {
        BigFloat value(bits);
        if (t.is_finite()) {
          value = c.component(i).eval(t.root().approx(bits));
        } else if (inf.exists) {
          value = BigFloat(inf.coords[static_cast<std::size_t>(i)], bits);
        } else {
          continue;
        }
        if (BigFloat::abs(value - v.coords[static_cast<std::size_t>(i)]) >= tol) {
          ++failures;
          notes.push_back("residual at vertex " + std::to_string(v.id));
        }
      }
    }
  }
  return failures;
}

// (c) x is strictly monotone along every bounded edge.
int monotone_failures(const Parametrization& c, const TopologyGraph& g, std::vector<std::string>& notes) {
  int failures = 0;
  for (const auto& e : g.edges) {
    if (!e.bounded) continue;
    const std::vector<double> ts = samples(finite_value(e.t_lo), finite_value(e.t_hi), 20);
    std::vector<double> xs;
    for (double t : ts) {
      if (const auto x = eval(c.x(), t)) xs.push_back(*x);
    }
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      up = up && xs[i] > xs[i - 1];
      down = down && xs[i] < xs[i - 1];
    }
    if (xs.size() > 1 && !up && !down) {
      ++failures;
      notes.push_back("x not monotone on edge " + std::to_string(e.from) + "-" + std::to_string(e.to));
    }
  }
  return failures;
}

struct Pt {
  double x;
  double y;
};

double cross(const Pt& o, const Pt& a, const Pt& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool segments_meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x)) return false;
  if (std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) return false;
  const double d1 = cross(a, b, c);
  const double d2 = cross(a, b, d);
  const double d3 = cross(c, d, a);
  const double d4 = cross(c, d, b);
  return ((d1 <= 0 && d2 >= 0) || (d1 >= 0 && d2 <= 0)) && ((d3 <= 0 && d4 >= 0) || (d3 >= 0 && d4 <= 0));
}

// Components of the curve without its isolated points, from dense samples.
// The parameter line is cut at the real poles; the two unbounded pieces are
// joined when the curve has a finite point at infinity, and pieces are
// joined when their polylines cross.
int sampled_components(const Parametrization& c, double radius) {
  std::vector<double> poles;
  for (const auto& r : isolate_real_roots(c.q_tilde_planar())) {
    poles.push_back(AlgebraicReal::from(r)->approx(64).to_double());
  }
  std::vector<std::optional<double>> cuts{std::nullopt};
  for (double p : poles) cuts.emplace_back(p);
  cuts.emplace_back(std::nullopt);
  const std::size_t n = cuts.size() - 1;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  if (n > 1 && point_at_infinity(c).exists) parent[find(0)] = find(n - 1);

  std::vector<std::vector<std::vector<Pt>>> pieces(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Pt> run;
    for (double t : samples(cuts[k], cuts[k + 1], 6000)) {
      const auto x = eval(c.x(), t);
      const auto y = eval(c.y(), t);
      if (x && y && std::abs(*x) <= radius && std::abs(*y) <= radius) {
        run.push_back({*x, *y});
      } else if (!run.empty()) {
        pieces[k].push_back(std::move(run));
        run.clear();
      }
    }
    if (!run.empty()) pieces[k].push_back(std::move(run));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (find(a) == find(b)) continue;
      bool met = false;
      for (const auto& pa : pieces[a]) {
        for (const auto& pb : pieces[b]) {
          for (std::size_t i = 1; i < pa.size() && !met; ++i) {
            for (std::size_t j = 1; j < pb.size() && !met; ++j) met = segments_meet(pa[i - 1], pa[i], pb[j - 1], pb[j]);
          }
        }
      }
      if (met) parent[find(a)] = find(b);
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) count += find(i) == i ? 1 : 0;
  return count;
}

int components_without_isolated(const TopologyGraph& g) {
  TopologyGraph h = g;
  h.vertices.erase(std::remove_if(h.vertices.begin(), h.vertices.end(), [](const Vertex& v) { return v.kind == VertexKind::kIsolated; }),
                   h.vertices.end());
  return h.connected_components();
}

void check_hermite(const IntPoly& p, PropertyReport& report) {
  if (p.degree() <= 0) return;
  ++report.hermite_checked;
  const int by_isolation = static_cast<int>(isolate_real_roots(p).size());
  if (hermite_count_univariate(p) != by_isolation) {
    ++report.hermite_failures;
    report.notes.push_back("hermite count differs for " + p.to_string());
  }
}

}  // namespace

PropertyReport run_property_suite(unsigned seed, int count) {
  PropertyReport report;
  std::mt19937 rng(seed);
  while (report.curves < count) {
    const Parametrization c = random_curve(rng);
    if (!properness_check(c).proper) {
      ++report.skipped;
      continue;
    }
    AnalyzeOptions opts;
    opts.digits = kDigits;
    opts.isolated = IsolatedMode::kNumeric;
    std::optional<Analysis> result;
    try {
      result = analyze(c, opts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRepairFailed) throw;
      ++report.skipped;
      continue;
    }
    if (!result->graph.metadata.transforms.empty()) {
      ++report.skipped;
      continue;
    }
    ++report.curves;
    const TopologyGraph& g = result->graph;
    const std::string tag = c.to_string() + ": ";
    std::vector<std::string> notes;
    report.residual_failures += residual_failures(c, g, notes);
    for (const auto& v : g.vertices) {
      if (v.kind == VertexKind::kSample && g.degree(v.id) != 2) {
        ++report.degree_failures;
        notes.push_back("sample vertex " + std::to_string(v.id) + " has degree " + std::to_string(g.degree(v.id)));
      }
    }
    report.monotone_failures += monotone_failures(c, g, notes);
    double radius = 10;
    for (const auto& v : g.vertices) {
      for (const auto& x : v.coords) radius = std::max(radius, 2 * std::abs(x.to_double()) + 10);
    }
    const int sampled = sampled_components(c, radius);
    const int graph = components_without_isolated(g);
    if (sampled != graph) {
      ++report.component_failures;
      notes.push_back("components: graph " + std::to_string(graph) + ", samples " + std::to_string(sampled));
    }
    for (auto& n : notes) report.notes.push_back(tag + n);
    const IntPoly& m = c.resultant_m();
    check_hermite(m, report);
    check_hermite(critical_polynomial(c), report);
    check_hermite(c.q_tilde_planar(), report);
    check_hermite(c.x().num().derivative() * c.x().den() - c.x().num() * c.x().den().derivative(), report);
  }
  return report;
}

}  // namespace testing
