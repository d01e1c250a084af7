#include "doctest.h"
#include "helpers.hpp"
#include "rtop/error.hpp"
#include "rtop/io.hpp"
#include "rtop/planar.hpp"

using namespace rtop;
using testing::poly;

namespace {

TopologyGraph plane_graph(const Parametrization& c, PlanarOptions opts = {}) { return planar_topology(prepare(c), opts); }

const Vertex* vertex_at(const TopologyGraph& g, double x, double y) {
  for (const auto& v : g.vertices) {
    if (std::abs(v.coords[0].to_double() - x) < 1e-9 && std::abs(v.coords[1].to_double() - y) < 1e-9) return &v;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("planar") {
  TEST_CASE("critical polynomial") {
    CHECK(critical_polynomial(testing::unit_circle()) == IntPoly{0, 1});
    CHECK(critical_polynomial(testing::isolated_cubic()) == IntPoly{0, 1, 0, 1});
    CHECK(critical_polynomial(Parametrization({poly({0, 1}), poly({0, 0, 1})})).degree() == 0);
  }

  TEST_CASE("critical points of the circle") {
    const Parametrization c = testing::unit_circle();
    const CriticalData d = critical_points(c, critical_polynomial(c), 10);
    REQUIRE(d.special.size() == 1);
    CHECK(d.special[0].x_critical);
    CHECK(d.special[0].t->bracket().lo <= 0);
    CHECK(d.special[0].t->bracket().hi >= 0);
    REQUIRE(d.lines.size() == 2);
    CHECK(d.lines[0].has_infinity);
    CHECK(d.lines[0].level == mpq_class(-1));
    CHECK(d.lines[1].level == mpq_class(1));
    CHECK(d.infinity.exists);
  }

  TEST_CASE("critical points of the cubic with an isolated point") {
    const Parametrization c = testing::isolated_cubic();
    const CriticalData d = critical_points(c, critical_polynomial(c), 10);
    REQUIRE(d.special.size() == 1);
    REQUIRE(d.lines.size() == 1);
    CHECK(d.lines[0].level == mpq_class(1));
    CHECK_FALSE(d.infinity.exists);
  }

  TEST_CASE("no critical points") {
    const Parametrization c({poly({0, 1}), poly({0, 0, 1})});
    const CriticalData d = critical_points(c, critical_polynomial(c), 10);
    CHECK(d.special.empty());
    CHECK(d.lines.empty());
    CHECK_FALSE(d.infinity.exists);
  }

  TEST_CASE("points on lines") {
    const Parametrization c = testing::unit_circle();
    const auto on0 = points_on_line(c, 0);
    REQUIRE(on0.size() == 2);
    CHECK(compare(on0[0].t, ParamValue::rational(-1)) == 0);
    CHECK(compare(on0[1].t, ParamValue::rational(1)) == 0);
    CHECK(on0[0].y(64).midpoint().to_double() == doctest::Approx(-1));
    CHECK(on0[1].y(64).midpoint().to_double() == doctest::Approx(1));
    CHECK(points_on_line(c, 2).empty());
    const CriticalData d = critical_points(c, critical_polynomial(c), 10);
    const auto on1 = points_on_critical_line(c, d, 1, 10);
    REQUIRE(on1.size() == 1);
    CHECK(compare(on1[0].t, ParamValue::rational(0)) == 0);
  }

  TEST_CASE("connection rule") {
    const std::vector<ParamValue> line_one = {ParamValue::rational(0)};
    const std::vector<ParamValue> infinity = {ParamValue::minus_inf(), ParamValue::plus_inf()};
    CHECK(connect(ParamValue::rational(1), -1, true, line_one) == 0);
    CHECK(connect(ParamValue::rational(1), -1, false, infinity) == 1);
    CHECK(connect(ParamValue::rational(-1), 1, false, infinity) == 0);
    CHECK_THROWS_AS(connect(ParamValue::rational(1), 1, true, line_one), Error);
  }

  TEST_CASE("circle graph") {
    const TopologyGraph g = plane_graph(testing::unit_circle());
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 4);
    CHECK(g.unbounded_edges() == 0);
    CHECK(g.connected_components() == 1);
    for (const auto& v : g.vertices) CHECK(g.degree(v.id) == 2);
    for (auto [x, y] : {std::pair{-1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) CHECK(vertex_at(g, x, y) != nullptr);
    const Vertex* inf = vertex_at(g, -1, 0);
    REQUIRE(inf != nullptr);
    REQUIRE(inf->generators.size() == 2);
    CHECK(inf->generators[0].kind() == ParamValue::Kind::kMinusInf);
    CHECK(inf->generators[1].kind() == ParamValue::Kind::kPlusInf);
    CHECK(g.metadata.escalations == 0);
  }

  TEST_CASE("curve without critical points") {
    const TopologyGraph g = plane_graph(Parametrization({poly({0, 1}), poly({0, 0, 1})}));
    REQUIRE(g.vertices.size() == 1);
    CHECK(vertex_at(g, 0, 0) != nullptr);
    CHECK(g.edges.size() == 2);
    CHECK(g.unbounded_edges() == 2);
  }

  TEST_CASE("cubic with a ramification point") {
    const TopologyGraph g = plane_graph(testing::isolated_cubic());
    const Vertex* ram = vertex_at(g, 1, 0);
    REQUIRE(ram != nullptr);
    CHECK(ram->kind == VertexKind::kCritical);
    CHECK(g.degree(ram->id) == 2);
    for (double y : {-2.0, 2.0}) {
      const Vertex* s = vertex_at(g, 2, y);
      REQUIRE(s != nullptr);
      CHECK(g.degree(s->id) == 2);
    }
    CHECK(g.unbounded_edges() == 2);
  }

  TEST_CASE("nodal and cuspidal cubics") {
    // (t^2 - 1, t^3 - t): node at the origin from t = -1 and t = 1.
    const TopologyGraph node = plane_graph(Parametrization({poly({-1, 0, 1}), poly({0, -1, 0, 1})}));
    const Vertex* n = vertex_at(node, 0, 0);
    REQUIRE(n != nullptr);
    CHECK(n->generators.size() == 2);
    CHECK(node.degree(n->id) == 4);
    // (t^2, t^3): cusp at the origin.
    const TopologyGraph cusp = plane_graph(Parametrization({poly({0, 0, 1}), poly({0, 0, 0, 1})}));
    const Vertex* c = vertex_at(cusp, 0, 0);
    REQUIRE(c != nullptr);
    CHECK(cusp.degree(c->id) == 2);
  }

  TEST_CASE("forced escalation reaches the same graph") {
    PlanarOptions opts;
    opts.inject_failures = 2;
    const TopologyGraph g = plane_graph(testing::unit_circle(), opts);
    CHECK(g.metadata.escalations == 2);
    CHECK(g.metadata.digits_used == 20);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 4);
    opts.inject_failures = 100;
    opts.max_digits = 30;
    try {
      plane_graph(testing::unit_circle(), opts);
      FAIL("escalation did not stop");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kPrecisionExhausted);
    }
  }

  TEST_CASE("deterministic output") {
    const Parametrization c({testing::ratio({1, 2, 0, -1}, {1, 0, 1}), testing::ratio({0, 3, -1}, {1, 0, 1})});
    CHECK(emit_json(plane_graph(c)) == emit_json(plane_graph(c)));
  }
}
