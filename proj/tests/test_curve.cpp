#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rtop/error.hpp"

using namespace rtop;
using testing::bivar;
using testing::poly;
using testing::ratio;
using testing::same_up_to_sign;

namespace {

const BivarIntPoly kTMinusS = bivar({{1, 0, 1}, {0, 1, -1}});

bool proportional(const BivarIntPoly& a, const BivarIntPoly& b) { return same_up_to_sign(a.normalized(), b.normalized()); }

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("normalization reduces components") {
    const RatFunc f = ratio({-1, 0, 1}, {-1, 1});
    CHECK(f.num() == IntPoly{1, 1});
    CHECK(f.den() == IntPoly{1});
    CHECK_THROWS_AS(ratio({1}, {0}), Error);
  }

  TEST_CASE("derived polynomials") {
    const Parametrization circle = testing::unit_circle();
    CHECK(proportional(circle.g_tilde(), kTMinusS));
    CHECK(proportional(circle.g1(), bivar({{1, 0, 1}, {0, 1, 1}})));
    CHECK(proportional(circle.g2(), bivar({{0, 0, 1}, {1, 1, -1}})));
    CHECK(circle.q_tilde() == IntPoly{1, 0, 1});

    const Parametrization cubic = testing::isolated_cubic();
    CHECK(proportional(cubic.g1(), bivar({{1, 0, 1}, {0, 1, 1}})));
    CHECK(proportional(cubic.g2(), bivar({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {0, 0, 1}})));
  }

  TEST_CASE("properness") {
    CHECK(properness_check(testing::unit_circle()).proper);
    const ProperResult improper = properness_check(Parametrization({poly({0, 0, 1}), poly({0, 0, 0, 0, 1})}));
    CHECK_FALSE(improper.proper);
    CHECK(proportional(improper.g_tilde, bivar({{2, 0, 1}, {0, 2, -1}})));
    CHECK(properness_check(Parametrization({poly({0, 1}), poly({0, 0, 0, 1})})).proper);
  }

  TEST_CASE("vertical asymptotes") {
    CHECK(vertical_asymptote_check(Parametrization({poly({0, 1}), ratio({1}, {0, 1})})) == AsymptoteCase::kA);
    CHECK(vertical_asymptote_check(Parametrization({ratio({1}, {0, 1}), poly({0, 1})})) == AsymptoteCase::kB);
    CHECK(vertical_asymptote_check(testing::unit_circle()) == AsymptoteCase::kNone);
  }

  TEST_CASE("asymptotes parallel to the z axis") {
    const Parametrization circle = testing::unit_circle();
    CHECK(z_asymptote_check(Parametrization({circle.x(), circle.y(), poly({0, 1})})) == AsymptoteCase::kB);
    CHECK(z_asymptote_check(Parametrization({poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1})})) == AsymptoteCase::kNone);
    CHECK(z_asymptote_check(Parametrization({poly({0, 1}), poly({0, 1}), ratio({1}, {0, 1})})) == AsymptoteCase::kA);
  }

  TEST_CASE("point at infinity") {
    const InfinityPoint circle = point_at_infinity(testing::unit_circle());
    CHECK(circle.exists);
    CHECK(circle.coords == std::vector<mpq_class>{-1, 0});
    CHECK_FALSE(circle.reached);
    CHECK_FALSE(point_at_infinity(Parametrization({poly({0, 1}), poly({0, 0, 1})})).exists);
    const InfinityPoint ex4 = point_at_infinity(Parametrization({ratio({256, 0, 288, 0, -7}, {256, 0, 32, 0, 1}), ratio({0, 256, 0, -80}, {256, 0, 32, 0, 1})}));
    CHECK(ex4.exists);
    CHECK(ex4.coords == std::vector<mpq_class>{-7, 0});
  }

  TEST_CASE("point at infinity is the limit of the parametrization") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int k = 0; k < 30; ++k) {
      std::vector<RatFunc> comps;
      for (int i = 0; i < 2; ++i) {
        std::vector<mpz_class> num(3);
        std::vector<mpz_class> den(3);
        for (auto& c : num) c = coeff(rng);
        for (auto& c : den) c = coeff(rng);
        den[2] = 1 + std::abs(coeff(rng));
        if (IntPoly(num).is_zero()) num[0] = 1;
        comps.emplace_back(IntPoly(num), IntPoly(den));
      }
      const Parametrization c(comps);
      const InfinityPoint p = point_at_infinity(c);
      REQUIRE(p.exists);
      for (int i = 0; i < 2; ++i) {
        const mpq_class v = c.component(i).eval(mpq_class(1000000));
        CHECK(abs(v - p.coords[static_cast<std::size_t>(i)]) < mpq_class(1, 1000));
      }
    }
  }

  TEST_CASE("generalized difference forms vanish on the diagonal") {
    const Parametrization circle = testing::unit_circle();
    for (int i = 0; i < 2; ++i) CHECK(circle.g_tilde_i(i).diagonal_restriction().is_zero());
    const Parametrization cubic = testing::isolated_cubic();
    for (int i = 0; i < 2; ++i) CHECK(cubic.g_tilde_i(i).diagonal_restriction().is_zero());
  }

  TEST_CASE("repair transforms") {
    const Parametrization c({ratio({1}, {0, 1}), poly({0, 1})});
    const Parametrization sheared = repair_transform(c, Transform::shear2d(1));
    CHECK(sheared.x().num() == IntPoly{1, 0, -1});
    CHECK(sheared.x().den() == IntPoly{0, 1});
    CHECK(vertical_asymptote_check(sheared) == AsymptoteCase::kNone);
    const Parametrization swapped = repair_transform(Parametrization({poly({0, 1}), ratio({1}, {0, 1})}), Transform::axis_swap());
    CHECK(swapped.x().num() == IntPoly{1});
    CHECK(swapped.y().num() == IntPoly{0, 1});
    const Parametrization same = repair_transform(testing::unit_circle(), Transform::shear2d(0));
    CHECK(same.x().num() == testing::unit_circle().x().num());
    CHECK(same.y().num() == testing::unit_circle().y().num());
  }

  TEST_CASE("prepare") {
    const Parametrization fixed = prepare(Parametrization({poly({0, 1}), ratio({1}, {0, 1})}));
    CHECK_FALSE(fixed.transforms().empty());
    CHECK(vertical_asymptote_check(fixed) == AsymptoteCase::kNone);
    CHECK(properness_check(fixed).proper);
    CHECK(prepare(testing::unit_circle()).transforms().empty());
    try {
      prepare(Parametrization({poly({0, 0, 1}), poly({0, 0, 0, 0, 1})}));
      FAIL("improper input accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kImproper);
    }
  }

  TEST_CASE("prepared space curves satisfy every hypothesis") {
    const Parametrization circle = testing::unit_circle();
    const Parametrization helix = prepare(Parametrization({circle.x(), circle.y(), poly({0, 1})}));
    CHECK(z_asymptote_check(helix) == AsymptoteCase::kNone);
    CHECK(vertical_asymptote_check(helix.projection()) == AsymptoteCase::kNone);
    CHECK(properness_check(helix.projection()).proper);
  }

  TEST_CASE("mapping back to the original frame inverts the repairs") {
    const Parametrization original({poly({0, 1}), ratio({1}, {0, 1})});
    const Parametrization fixed = prepare(original);
    for (long t : {-3L, -1L, 2L, 5L}) {
      std::vector<mpq_class> p;
      for (const auto& f : fixed.components()) p.push_back(f.eval(mpq_class(t)));
      const std::vector<mpq_class> back = to_original_frame(fixed.transforms(), p);
      CHECK(back[0] == original.x().eval(mpq_class(t)));
      CHECK(back[1] == original.y().eval(mpq_class(t)));
    }
  }
}
