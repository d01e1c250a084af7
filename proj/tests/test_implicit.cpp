#include "doctest.h"
#include "helpers.hpp"
#include "rtop/implicit.hpp"
#include "rtop/io.hpp"

using namespace rtop;
using testing::bivar;
using testing::poly;
using testing::ratio;
using testing::same_up_to_sign;

TEST_SUITE("implicit") {
  TEST_CASE("small curves") {
    const auto circle = implicitize(testing::unit_circle());
    REQUIRE(circle.has_value());
    CHECK(same_up_to_sign(circle->f, bivar({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}})));
    const auto parabola = implicitize(Parametrization({poly({0, 1}), poly({0, 0, 1})}));
    REQUIRE(parabola.has_value());
    CHECK(same_up_to_sign(parabola->f, bivar({{0, 1, 1}, {2, 0, -1}})));
    const auto cubic = implicitize(testing::isolated_cubic());
    REQUIRE(cubic.has_value());
    // y^2 = x^2 (x - 1)
    CHECK(same_up_to_sign(cubic->f, bivar({{0, 2, 1}, {3, 0, -1}, {2, 0, 1}})));
    CHECK(cubic->total_degree == 3);
    CHECK(cubic->term_count == 3);
  }

  TEST_CASE("vertex check") {
    const auto cubic = implicitize(testing::isolated_cubic());
    REQUIRE(cubic.has_value());
    CHECK(vanishes_exactly(*cubic, 0, 0));
    CHECK(vanishes_exactly(*cubic, 2, 2));
    CHECK_FALSE(vanishes_exactly(*cubic, 1, 1));
    CHECK(check_vertex(*cubic, {BigFloat(0, 64), BigFloat(0, 64)}).sign() == 0);
    CHECK(check_vertex(*cubic, {BigFloat(1, 64), BigFloat(1, 64)}).to_double() == doctest::Approx(1));
  }

  TEST_CASE("degree and term count of larger curves") {
    // Degree 4 numerators over a common quadratic denominator.
    const Parametrization rational({ratio({1, 0, 0, 0, 1}, {1, 0, 1}), ratio({0, 1, 0, -1}, {1, 0, 1})});
    const auto f = implicitize(rational);
    REQUIRE(f.has_value());
    CHECK(f->total_degree <= 4);
    for (int k = -3; k <= 3; ++k) {
      const mpq_class t(k, 2);
      const mpq_class x = (1 + t * t * t * t) / (1 + t * t);
      const mpq_class y = (t - t * t * t) / (1 + t * t);
      CHECK(vanishes_exactly(*f, x, y));
    }
  }

  TEST_CASE("budget exhaustion") {
    const auto f = implicitize(testing::unit_circle(), std::chrono::milliseconds(-1));
    CHECK_FALSE(f.has_value());
  }
}
