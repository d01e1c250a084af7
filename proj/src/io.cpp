#include "rtop/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "rtop/error.hpp"

namespace rtop {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

mpz_class parse_integer(const ojson& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<std::uint64_t>()));
    return mpz_class(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    static const std::regex integer_re("^[+-]?[0-9]+$");
    std::string s = v.get<std::string>();
    if (!std::regex_match(s, integer_re)) parse_error(field + ": \"" + s + "\" is not an integer");
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  }
  if (v.is_number_float()) parse_error(field + ": non-integer coefficient (write large integers as strings)");
  parse_error(field + ": coefficient must be an integer or a decimal string");
}

IntPoly parse_coeffs(const ojson& arr, const std::string& field) {
  if (!arr.is_array()) parse_error(field + ": expected an array of coefficients");
  std::vector<mpz_class> c;
  for (std::size_t i = 0; i < arr.size(); ++i) c.push_back(parse_integer(arr[i], field + "[" + std::to_string(i) + "]"));
  return IntPoly(std::move(c));
}

RatFunc parse_component(const ojson& j, const std::string& name) {
  if (!j.is_object()) parse_error(name + ": expected an object with \"num\" and \"den\"");
  const bool has_num = j.contains("num");
  const bool has_den = j.contains("den");
  if (!has_num) parse_error(name + ".num: missing");
  const IntPoly num = parse_coeffs(j["num"], name + ".num");
  const IntPoly den = has_den ? parse_coeffs(j["den"], name + ".den") : IntPoly{1};
  if (j["num"].empty() && has_den && j["den"].empty()) parse_error(name + ": empty numerator and denominator");
  if (den.is_zero()) parse_error(name + ".den: zero denominator");
  return RatFunc(num, den);
}

ojson coeffs_json(const IntPoly& p) {
  ojson arr = ojson::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  if (p.is_zero()) arr.push_back(0);
  return arr;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string int_list_key(std::size_t i) {
  static const char* names[] = {"x", "y", "z"};
  return names[i];
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) parse_error("top level: expected an object");
  if (!j.contains("x") || !j.contains("y")) parse_error("top level: components \"x\" and \"y\" are required");
  std::vector<RatFunc> comps;
  comps.push_back(parse_component(j["x"], "x"));
  comps.push_back(parse_component(j["y"], "y"));
  if (j.contains("z") && !j["z"].is_null()) comps.push_back(parse_component(j["z"], "z"));
  InputSpec spec{Parametrization(std::move(comps)), std::nullopt, std::nullopt};
  if (j.contains("options")) {
    const ojson& o = j["options"];
    if (!o.is_object()) parse_error("options: expected an object");
    if (o.contains("digits")) {
      if (!o["digits"].is_number_integer()) parse_error("options.digits: expected an integer");
      spec.digits = o["digits"].get<int>();
    }
    if (o.contains("isolated")) {
      if (!o["isolated"].is_string()) parse_error("options.isolated: expected a string");
      spec.isolated = o["isolated"].get<std::string>();
    }
  }
  return spec;
}

std::string encode_curve(const Parametrization& c) {
  ojson j = ojson::object();
  for (int i = 0; i < c.dimension(); ++i) {
    ojson comp = ojson::object();
    comp["num"] = coeffs_json(c.component(i).num());
    comp["den"] = coeffs_json(c.component(i).den());
    j[int_list_key(static_cast<std::size_t>(i))] = comp;
  }
  return j.dump() + "\n";
}

GraphDocument to_document(const TopologyGraph& g) {
  GraphDocument doc;
  const int digits = g.metadata.digits_used;
  doc.dimension = g.metadata.dimension;
  doc.digits_used = digits;
  doc.escalations = g.metadata.escalations;
  doc.transforms = g.metadata.transforms;
  doc.isolated_mode = g.metadata.isolated_mode;
  doc.certified_count = g.metadata.certified_count;
  for (const auto& v : g.vertices) {
    DocVertex d;
    d.id = v.id;
    d.kind = to_string(v.kind);
    for (const auto& x : v.coords) d.coords.push_back(x.to_string(digits));
    for (std::size_t j = 0; j < v.generators.size(); ++j) {
      const ParamValue& t = v.generators[j];
      d.generators.push_back(t.to_string(digits));
      if (!t.is_finite()) continue;
      const IntPoly* poly = t.root().defining_poly();
      if (poly == nullptr) continue;
      DocExact e;
      e.generator = static_cast<int>(j);
      for (const auto& c : poly->coeffs()) e.poly.push_back(c.get_str());
      const Interval iv = t.root().bracket();
      e.lo = rational_string(iv.lo);
      e.hi = rational_string(iv.hi);
      d.exact.push_back(std::move(e));
    }
    if (v.complex_generator) d.complex_generator = std::array<std::string, 2>{v.complex_generator->re.to_string(digits), v.complex_generator->im.to_string(digits)};
    doc.vertices.push_back(std::move(d));
  }
  for (const auto& e : g.edges) {
    DocEdge d;
    d.from = e.from;
    if (e.to >= 0) d.to = e.to;
    d.t_from = e.t_lo.to_string(digits);
    d.t_to = e.t_hi.to_string(digits);
    d.bounded = e.bounded;
    doc.edges.push_back(std::move(d));
  }
  return doc;
}

std::string serialize(const GraphDocument& doc) {
  ojson j = ojson::object();
  j["dimension"] = doc.dimension;
  ojson vs = ojson::array();
  for (const auto& v : doc.vertices) {
    ojson o = ojson::object();
    o["id"] = v.id;
    for (std::size_t i = 0; i < v.coords.size(); ++i) o[int_list_key(i)] = v.coords[i];
    o["kind"] = v.kind;
    o["generators"] = v.generators;
    if (!v.exact.empty()) {
      ojson ex = ojson::array();
      for (const auto& e : v.exact) {
        ojson eo = ojson::object();
        eo["generator"] = e.generator;
        eo["poly"] = e.poly;
        eo["interval"] = ojson::array({e.lo, e.hi});
        ex.push_back(eo);
      }
      o["exact"] = ex;
    }
    if (v.complex_generator) o["complex_generator"] = ojson::array({(*v.complex_generator)[0], (*v.complex_generator)[1]});
    vs.push_back(o);
  }
  j["vertices"] = vs;
  ojson es = ojson::array();
  for (const auto& e : doc.edges) {
    ojson o = ojson::object();
    o["from"] = e.from;
    o["to"] = e.to ? ojson(*e.to) : ojson(nullptr);
    o["t_from"] = e.t_from;
    o["t_to"] = e.t_to;
    o["bounded"] = e.bounded;
    es.push_back(o);
  }
  j["edges"] = es;
  ojson meta = ojson::object();
  meta["digits_used"] = doc.digits_used;
  meta["escalations"] = doc.escalations;
  meta["transforms"] = doc.transforms;
  meta["isolated_mode"] = doc.isolated_mode;
  if (doc.certified_count) meta["certified_count"] = *doc.certified_count;
  j["metadata"] = meta;
  return j.dump(2) + "\n";
}

namespace {

const ojson& field(const ojson& o, const char* key, const std::string& where) {
  if (!o.is_object() || !o.contains(key)) parse_error(where + ": missing \"" + key + "\"");
  return o[key];
}

int get_int(const ojson& o, const char* key, const std::string& where) {
  const ojson& v = field(o, key, where);
  if (!v.is_number_integer()) parse_error(where + "." + key + ": expected an integer");
  return v.get<int>();
}

std::string get_string(const ojson& o, const char* key, const std::string& where) {
  const ojson& v = field(o, key, where);
  if (!v.is_string()) parse_error(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const ojson& v, const std::string& where) {
  if (!v.is_array()) parse_error(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) parse_error(where + ": expected strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  GraphDocument doc;
  doc.dimension = get_int(j, "dimension", "document");
  const ojson& vs = field(j, "vertices", "document");
  if (!vs.is_array()) parse_error("vertices: expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const ojson& o = vs[i];
    DocVertex v;
    v.id = get_int(o, "id", where);
    for (int k = 0; k < doc.dimension; ++k) v.coords.push_back(get_string(o, int_list_key(static_cast<std::size_t>(k)).c_str(), where));
    v.kind = get_string(o, "kind", where);
    if (!vertex_kind_from_string(v.kind)) parse_error(where + ".kind: unknown kind \"" + v.kind + "\"");
    v.generators = get_strings(field(o, "generators", where), where + ".generators");
    if (o.contains("exact")) {
      for (const auto& eo : o["exact"]) {
        DocExact e;
        e.generator = get_int(eo, "generator", where + ".exact");
        e.poly = get_strings(field(eo, "poly", where + ".exact"), where + ".exact.poly");
        const auto iv = get_strings(field(eo, "interval", where + ".exact"), where + ".exact.interval");
        if (iv.size() != 2) parse_error(where + ".exact.interval: expected two endpoints");
        e.lo = iv[0];
        e.hi = iv[1];
        v.exact.push_back(std::move(e));
      }
    }
    if (o.contains("complex_generator")) {
      const auto z = get_strings(o["complex_generator"], where + ".complex_generator");
      if (z.size() != 2) parse_error(where + ".complex_generator: expected two parts");
      v.complex_generator = std::array<std::string, 2>{z[0], z[1]};
    }
    doc.vertices.push_back(std::move(v));
  }
  const ojson& es = field(j, "edges", "document");
  if (!es.is_array()) parse_error("edges: expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const ojson& o = es[i];
    DocEdge e;
    e.from = get_int(o, "from", where);
    const ojson& to = field(o, "to", where);
    if (to.is_number_integer()) {
      e.to = to.get<int>();
    } else if (!to.is_null()) {
      parse_error(where + ".to: expected an integer or null");
    }
    e.t_from = get_string(o, "t_from", where);
    e.t_to = get_string(o, "t_to", where);
    const ojson& b = field(o, "bounded", where);
    if (!b.is_boolean()) parse_error(where + ".bounded: expected a boolean");
    e.bounded = b.get<bool>();
    doc.edges.push_back(std::move(e));
  }
  const ojson& meta = field(j, "metadata", "document");
  doc.digits_used = get_int(meta, "digits_used", "metadata");
  doc.escalations = get_int(meta, "escalations", "metadata");
  doc.transforms = get_strings(field(meta, "transforms", "metadata"), "metadata.transforms");
  doc.isolated_mode = get_string(meta, "isolated_mode", "metadata");
  if (meta.contains("certified_count")) doc.certified_count = get_int(meta, "certified_count", "metadata");
  return doc;
}

std::string emit_json(const TopologyGraph& g) { return serialize(to_document(g)); }

std::string emit_dot(const TopologyGraph& g) {
  std::ostringstream os;
  os << "graph topology {\n";
  for (const auto& v : g.vertices) {
    os << "  v" << v.id << " [label=\"(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i].to_string(6);
    os << ") " << to_string(v.kind) << "\"];\n";
  }
  int rays = 0;
  for (const auto& e : g.edges) {
    if (e.to >= 0) {
      os << "  v" << e.from << " -- v" << e.to << ";\n";
    } else {
      os << "  inf" << rays << " [label=\"\xE2\x88\x9E\", shape=point, synthetic=true];\n";
      os << "  v" << e.from << " -- inf" << rays << ";\n";
      ++rays;
    }
  }
  os << "}\n";
  return os.str();
}

namespace {

struct P2 {
  double x;
  double y;
};

class Sampler {
 public:
  explicit Sampler(const Parametrization& c) : c_(c) {}

  std::optional<std::vector<double>> at(double t) const {
    std::vector<double> out;
    const BigFloat bt(t, 64);
    for (const auto& f : c_.components()) {
      const BigFloat d = f.den().eval(bt);
      if (d.is_zero()) return std::nullopt;
      out.push_back((f.num().eval(bt) / d).to_double());
      if (!std::isfinite(out.back())) return std::nullopt;
    }
    return out;
  }

 private:
  const Parametrization& c_;
};

P2 project(const std::vector<double>& p) {
  if (p.size() == 2) return {p[0], p[1]};
  const double c30 = std::sqrt(3.0) / 2;
  return {(p[0] - p[1]) * c30, p[2] - (p[0] + p[1]) / 2};
}

std::vector<double> coords_of(const Vertex& v) {
  std::vector<double> out;
  for (const auto& x : v.coords) out.push_back(x.to_double());
  return out;
}

double param(const ParamValue& t) {
  if (t.kind() == ParamValue::Kind::kMinusInf) return -std::numeric_limits<double>::infinity();
  if (t.kind() == ParamValue::Kind::kPlusInf) return std::numeric_limits<double>::infinity();
  return t.root().approx(64).to_double();
}

// k interior parameters of (a, b), ascending; infinite ends are reached by
// the substitution t = a + s / (1 - s).
std::vector<double> interior(double a, double b, int k) {
  std::vector<double> out;
  for (int i = 1; i <= k; ++i) {
    const double s = static_cast<double>(i) / (k + 1);
    if (std::isfinite(a) && std::isfinite(b)) {
      out.push_back(a + (b - a) * s);
    } else if (std::isfinite(a)) {
      out.push_back(a + s / (1 - s));
    } else if (std::isfinite(b)) {
      out.push_back(b - (1 - s) / s);
    } else {
      out.push_back((s - 0.5) / (s * (1 - s)));
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

}  // namespace

std::string render_svg(const TopologyGraph& g, const Parametrization& original, int refine) {
  const Sampler sampler(original);
  std::vector<std::vector<P2>> lines;
  std::vector<std::vector<P2>> rays;
  std::vector<P2> hull;
  auto vertex_point = [&](int id) { return project(coords_of(*g.find(id))); };
  for (const auto& v : g.vertices) hull.push_back(project(coords_of(v)));
  for (const auto& e : g.edges) {
    const double a = param(e.t_lo);
    const double b = param(e.t_hi);
    if (e.bounded) {
      std::vector<P2> pl{vertex_point(e.from)};
      for (double t : interior(a, b, refine)) {
        if (auto p = sampler.at(t)) {
          pl.push_back(project(*p));
          hull.push_back(pl.back());
        }
      }
      pl.push_back(vertex_point(e.to));
      lines.push_back(std::move(pl));
      continue;
    }
    // A ray starts at the vertex that owns one end of its parameter interval.
    const Vertex& v = *g.find(e.from);
    const bool starts_low = v.generators[static_cast<std::size_t>(e.from_gen)].root_ptr() == e.t_lo.root_ptr() && e.t_lo.is_finite();
    const double start = starts_low ? a : b;
    const double end = starts_low ? b : a;
    std::vector<P2> pl{vertex_point(e.from)};
    for (int j = 1; j <= 60; ++j) {
      double t = 0;
      if (std::isfinite(end)) {
        t = start + (end - start) * (1 - std::ldexp(1.0, -j));
      } else {
        t = start + (end > 0 ? 1 : -1) * (std::ldexp(1.0, j / 2) - 1 + 0.25 * j);
      }
      if (auto p = sampler.at(t)) pl.push_back(project(*p));
    }
    rays.push_back(std::move(pl));
  }
  double xmin = 0;
  double xmax = 0;
  double ymin = 0;
  double ymax = 0;
  if (!hull.empty()) {
    xmin = xmax = hull[0].x;
    ymin = ymax = hull[0].y;
  }
  for (const auto& p : hull) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double cx = (xmin + xmax) / 2;
  const double cy = (ymin + ymax) / 2;
  const double half = std::max({(xmax - xmin) / 2 * 1.2, (ymax - ymin) / 2 * 1.2, 1.0});
  const double size = 600;
  auto sx = [&](double x) { return (x - cx + half) / (2 * half) * size; };
  auto sy = [&](double y) { return size - (y - cy + half) / (2 * half) * size; };
  auto path = [&](const std::vector<P2>& pl) {
    std::string d;
    for (std::size_t i = 0; i < pl.size(); ++i) d += (i ? " L " : "M ") + fmt(sx(pl[i].x)) + " " + fmt(sy(pl[i].y));
    return d;
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "  <defs><clipPath id=\"box\"><rect x=\"0\" y=\"0\" width=\"600\" height=\"600\"/></clipPath></defs>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "  <g clip-path=\"url(#box)\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& pl : lines) os << "    <path d=\"" << path(pl) << "\"/>\n";
  for (const auto& pl : rays) os << "    <path d=\"" << path(pl) << "\" stroke-dasharray=\"6 3\"/>\n";
  os << "  </g>\n";
  if (g.metadata.dimension == 3) {
    const double ox = sx(0);
    const double oy = sy(0);
    os << "  <path d=\"M " << fmt(ox) << " " << fmt(oy - 6) << " L " << fmt(ox + 6) << " " << fmt(oy) << " L " << fmt(ox) << " " << fmt(oy + 6) << " L "
       << fmt(ox - 6) << " " << fmt(oy) << " Z\" fill=\"none\" stroke=\"gray\"/>\n";
  }
  for (const auto& v : g.vertices) {
    const P2 p = project(coords_of(v));
    const bool isolated = v.kind == VertexKind::kIsolated;
    os << "  <circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"" << (isolated ? "5" : "3") << "\" fill=\""
       << (isolated ? "red" : "black") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rtop
