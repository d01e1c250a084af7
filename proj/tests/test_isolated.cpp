#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rtop/error.hpp"
#include "rtop/implicit.hpp"
#include "rtop/isolated.hpp"
#include "rtop/topology.hpp"

using namespace rtop;
using testing::bivar;
using testing::poly;

namespace {

std::vector<const Vertex*> isolated_vertices(const TopologyGraph& g) {
  std::vector<const Vertex*> out;
  for (const auto& v : g.vertices) {
    if (v.kind == VertexKind::kIsolated) out.push_back(&v);
  }
  return out;
}

TopologyGraph run(const Parametrization& c, IsolatedMode mode) {
  AnalyzeOptions opts;
  opts.isolated = mode;
  return analyze(c, opts).graph;
}

}  // namespace

TEST_SUITE("isolated") {
  TEST_CASE("complex parts") {
    const ComplexParts cubic = complex_parts(testing::isolated_cubic());
    CHECK(cubic.re[0] == bivar({{2, 0, 1}, {0, 2, -1}, {0, 0, 1}}));
    CHECK(cubic.im[0] == bivar({{1, 1, 2}}));
    CHECK(cubic.re[1] == bivar({{3, 0, 1}, {1, 2, -3}, {1, 0, 1}}));
    CHECK(cubic.im[1] == bivar({{2, 1, 3}, {0, 3, -1}, {0, 1, 1}}));
    const ComplexParts line = complex_parts(Parametrization({poly({0, 1}), poly({0, 0, 1})}));
    CHECK(line.re[0] == bivar({{1, 0, 1}}));
    CHECK(line.im[0] == bivar({{0, 1, 1}}));
  }

  TEST_CASE("imaginary parts vanish on the real axis") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int k = 0; k < 30; ++k) {
      std::vector<RatFunc> comps;
      for (int i = 0; i < 3; ++i) {
        std::vector<mpz_class> num(4);
        std::vector<mpz_class> den(3);
        for (auto& c : num) c = coeff(rng);
        for (auto& c : den) c = coeff(rng);
        if (IntPoly(num).is_zero()) num[1] = 1;
        if (IntPoly(den).is_zero()) den[0] = 1;
        comps.emplace_back(IntPoly(num), IntPoly(den));
      }
      const ComplexParts parts = complex_parts(Parametrization(comps));
      for (const auto& im : parts.im) {
        CHECK(im.eval_s(0).is_zero());
        if (!im.is_zero()) CHECK(im.by_s()[0].is_zero());
      }
    }
  }

  TEST_CASE("numeric search") {
    const TopologyGraph g = run(testing::isolated_cubic(), IsolatedMode::kNumeric);
    const auto cubic = isolated_vertices(g);
    REQUIRE(cubic.size() == 1);
    CHECK(std::abs(cubic[0]->coords[0].to_double()) < 1e-9);
    CHECK(std::abs(cubic[0]->coords[1].to_double()) < 1e-9);
    REQUIRE(cubic[0]->complex_generator.has_value());
    CHECK(std::abs(cubic[0]->complex_generator->im.to_double() - 1) < 1e-9);
    CHECK(isolated_vertices(run(testing::unit_circle(), IsolatedMode::kNumeric)).empty());
    CHECK(isolated_vertices(run(Parametrization({poly({0, 1}), poly({0, 0, 1})}), IsolatedMode::kNumeric)).empty());
  }

  TEST_CASE("certified counts in the plane") {
    CHECK(certified_solution_count(testing::isolated_cubic()) == 2);
    CHECK(certified_solution_count(testing::unit_circle()) == 0);
    CHECK(certified_solution_count(Parametrization({poly({0, 1}), poly({0, 0, 1})})) == 0);
    const TopologyGraph g = run(testing::isolated_cubic(), IsolatedMode::kCertified);
    CHECK(g.metadata.certified_count == 2);
    CHECK(isolated_vertices(g).size() == 1);
  }

  TEST_CASE("certified counts in space") {
    const Parametrization base = testing::isolated_cubic();
    const Parametrization squared({base.x(), base.y(), poly({0, 0, 1})});
    CHECK(certified_solution_count(squared) == 2);
    const TopologyGraph g = run(squared, IsolatedMode::kCertified);
    const auto iso = isolated_vertices(g);
    REQUIRE(iso.size() == 1);
    CHECK(std::abs(iso[0]->coords[2].to_double() + 1) < 1e-9);
    const Parametrization linear({base.x(), base.y(), poly({0, 1})});
    CHECK(certified_solution_count(linear) == 0);
    CHECK(isolated_vertices(run(linear, IsolatedMode::kCertified)).empty());
    CHECK(certified_solution_count(Parametrization({poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1})})) == 0);
  }

  TEST_CASE("numeric and certified modes agree on random curves") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> coeff(-6, 6);
    int compared = 0;
    for (int k = 0; k < 40 && compared < 15; ++k) {
      std::vector<RatFunc> comps;
      for (int i = 0; i < 2; ++i) {
        std::vector<mpz_class> num(4);
        for (auto& c : num) c = coeff(rng);
        if (num[3] == 0) num[3] = 1;
        comps.push_back(RatFunc::polynomial(IntPoly(num)));
      }
      const Parametrization c(comps);
      if (!properness_check(c).proper) continue;
      TopologyGraph numeric;
      TopologyGraph certified;
      try {
        numeric = run(c, IsolatedMode::kNumeric);
        certified = run(c, IsolatedMode::kCertified);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kRepairFailed || e.code() == ErrorCode::kDegenerateSystem) continue;
        throw;
      }
      ++compared;
      const auto a = isolated_vertices(numeric);
      const auto b = isolated_vertices(certified);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(a[i]->coords[j].to_double() - b[i]->coords[j].to_double()) < 1e-8);
      }
      // Every isolated point is a singular point of the implicit equation.
      const auto f = implicitize(c);
      REQUIRE(f.has_value());
      for (const auto* v : b) CHECK(check_vertex(*f, v->coords).to_double() < 1e-6);
    }
    CHECK(compared >= 10);
  }
}
