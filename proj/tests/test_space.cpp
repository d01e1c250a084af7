#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "rtop/error.hpp"
#include "rtop/space.hpp"
#include "rtop/topology.hpp"

using namespace rtop;
using testing::poly;

namespace {

TopologyGraph run(const Parametrization& c, IsolatedMode mode = IsolatedMode::kNumeric) {
  AnalyzeOptions opts;
  opts.isolated = mode;
  return analyze(c, opts).graph;
}

bool has_vertex(const TopologyGraph& g, std::initializer_list<double> p) {
  for (const auto& v : g.vertices) {
    bool same = true;
    std::size_t i = 0;
    for (double x : p) same = same && std::abs(v.coords[i++].to_double() - x) < 1e-8;
    if (same) return true;
  }
  return false;
}

std::size_t count_kind(const TopologyGraph& g, VertexKind kind) {
  std::size_t n = 0;
  for (const auto& v : g.vertices) n += v.kind == kind ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("twisted cubic") {
    const TopologyGraph g = run(Parametrization({poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1})}));
    CHECK(g.metadata.dimension == 3);
    CHECK(g.vertices.size() == 1);
    CHECK(has_vertex(g, {0, 0, 0}));
    CHECK(g.unbounded_edges() == 2);
    CHECK(g.edges.size() == 2);
  }

  TEST_CASE("circle lifted by z = y") {
    const Parametrization c = testing::unit_circle();
    const TopologyGraph g = run(Parametrization({c.x(), c.y(), c.y()}));
    CHECK(has_vertex(g, {0, 1, 1}));
    CHECK(has_vertex(g, {-1, 0, 0}));
    CHECK(g.connected_components() == 1);
    CHECK(g.unbounded_edges() == 0);
    for (const auto& v : g.vertices) {
      if (v.kind != VertexKind::kInfinity && v.kind != VertexKind::kIsolated) CHECK(g.degree(v.id) == 2);
    }
  }

  TEST_CASE("isolated points depend on the third coordinate") {
    const Parametrization base = testing::isolated_cubic();
    const TopologyGraph squared = run(Parametrization({base.x(), base.y(), poly({0, 0, 1})}));
    CHECK(count_kind(squared, VertexKind::kIsolated) == 1);
    CHECK(has_vertex(squared, {0, 0, -1}));
    const TopologyGraph linear = run(Parametrization({base.x(), base.y(), poly({0, 1})}));
    CHECK(count_kind(linear, VertexKind::kIsolated) == 0);
  }

  TEST_CASE("one space edge per planar edge") {
    const std::vector<Parametrization> curves = {
        Parametrization({poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1})}),
        Parametrization({poly({-1, 0, 1}), poly({0, -1, 0, 1}), poly({0, 1})}),
        Parametrization({testing::unit_circle().x(), testing::unit_circle().y(), poly({0, 1})}),
    };
    for (const auto& c : curves) {
      const Analysis space = analyze(c, AnalyzeOptions{});
      const Parametrization& p = space.prepared;
      const TopologyGraph plane = build_plane_graph(Parametrization({p.x(), p.y()}), AnalyzeOptions{});
      CHECK(space.graph.edges.size() == plane.edges.size());
      for (const auto& e : space.graph.edges) {
        CHECK(e.from >= 0);
        if (e.bounded) CHECK(space.graph.find(e.to) != nullptr);
      }
    }
  }

  TEST_CASE("improper projection is repaired") {
    const TopologyGraph g = run(Parametrization({poly({0, 0, 1}), poly({0, 0, 0, 0, 1}), poly({0, 1})}));
    CHECK_FALSE(g.metadata.transforms.empty());
    CHECK(g.connected_components() == 1);
    // Vertices are reported in the input frame, on the curve x = z^2, y = z^4.
    for (const auto& v : g.vertices) {
      const double z = v.coords[2].to_double();
      CHECK(v.coords[0].to_double() == doctest::Approx(z * z));
      CHECK(v.coords[1].to_double() == doctest::Approx(z * z * z * z));
    }
  }

  TEST_CASE("hypotheses of a well-placed space curve") {
    CHECK(check_space_hypotheses(Parametrization({poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1})})).empty());
    CHECK_FALSE(check_space_hypotheses(Parametrization({poly({0, 0, 1}), poly({0, 0, 0, 0, 1}), poly({0, 1})})).empty());
  }
}
