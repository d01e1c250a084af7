#include <random>

#include "doctest.h"
#include "rtop/error.hpp"
#include "rtop/realroots.hpp"

using namespace rtop;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::vector<mpz_class> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

}  // namespace

TEST_SUITE("realroots") {
  TEST_CASE("isolation") {
    const auto r = isolate_real_roots(IntPoly{0, 1, 0, 1});
    REQUIRE(r.size() == 1);
    CHECK(r[0].interval.lo <= 0);
    CHECK(r[0].interval.hi >= 0);
    CHECK(r[0].multiplicity_in_original == 1);
    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
    const auto m = isolate_real_roots(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1});
    REQUIRE(m.size() == 2);
    CHECK(m[0].interval.lo <= -2);
    CHECK(m[0].interval.hi >= -2);
    CHECK(m[0].multiplicity_in_original == 1);
    CHECK(m[1].interval.lo <= 1);
    CHECK(m[1].interval.hi >= 1);
    CHECK(m[1].multiplicity_in_original == 2);
  }

  TEST_CASE("refinement") {
    auto roots = isolate_real_roots(IntPoly{-2, 0, 1});
    REQUIRE(roots.size() == 2);
    const IsolatingInterval sqrt2 = refine(roots[1], mpq_class(1, 1000));
    CHECK(sqrt2.interval.width() <= mpq_class(1, 1000));
    CHECK(sqrt2.interval.lo * sqrt2.interval.lo < 2);
    CHECK(sqrt2.interval.hi * sqrt2.interval.hi > 2);
    const IsolatingInterval again = refine(sqrt2, mpq_class(1, 1000));
    CHECK(again.interval.lo >= sqrt2.interval.lo);
    CHECK(again.interval.hi <= sqrt2.interval.hi);

    const auto zero = refine(isolate_real_roots(IntPoly{0, 1, 0, 1})[0], mpq_class(1, 1000000));
    CHECK(zero.interval.lo <= 0);
    CHECK(zero.interval.hi >= 0);

    const auto one = refine(isolate_real_roots(IntPoly{1, -2, 1})[0], mpq_class(1, 1000000));
    CHECK(one.interval.width() <= mpq_class(1, 1000000));
    CHECK(one.interval.lo <= 1);
    CHECK(one.interval.hi >= 1);
  }

  TEST_CASE("Sturm counts on intervals") {
    CHECK(count_real_roots_in(IntPoly{-2, 0, 1}, Interval(0, 2)) == 1);
    CHECK(count_real_roots_in(IntPoly{0, 1, 0, 1}, Interval(-1, 1)) == 1);
    CHECK(count_real_roots_in(IntPoly{1, 0, 1}, Interval(-10, 10)) == 0);
  }

  TEST_CASE("Hermite counts") {
    CHECK(hermite_count_univariate(IntPoly{1, 0, 1}) == 0);
    CHECK(hermite_count_univariate(IntPoly{-1, 0, 1}) == 2);
    CHECK(hermite_count_univariate(IntPoly{1, -2, 1}) == 1);
    CHECK(newton_power_sums(IntPoly{1, 0, 1}, 3) == std::vector<mpq_class>{2, 0, -2});
    CHECK(newton_power_sums(IntPoly{1, -2, 1}, 3) == std::vector<mpq_class>{2, 2, 2});
  }

  TEST_CASE("Hermite agrees with isolation on random polynomials") {
    std::mt19937 rng(23);
    for (int k = 0; k < 200; ++k) {
      const IntPoly p = random_poly(rng, 10);
      const auto roots = isolate_real_roots(p);
      CHECK(hermite_count_univariate(p) == static_cast<int>(roots.size()));
      int total = 0;
      for (const auto& r : roots) {
        if (r.interval.lo == r.interval.hi) {
          CHECK(r.defining_poly.sign_at(r.interval.lo) == 0);
          ++total;
        } else {
          total += count_real_roots_in(r.defining_poly, r.interval);
        }
      }
      CHECK(total == static_cast<int>(roots.size()));
      CHECK(count_real_roots(squarefree_part(p)) == static_cast<int>(roots.size()));
    }
  }

  TEST_CASE("isolation of high degree polynomials matches Sturm counts") {
    std::mt19937 rng(29);
    for (int k = 0; k < 40; ++k) {
      IntPoly p = random_poly(rng, 60);
      if (k % 2 == 1) {
        // Many rational roots next to a conjugate pair.
        p = IntPoly{1, 0, 1};
        std::uniform_int_distribution<int> root(-40, 40);
        for (int i = 0; i < 30; ++i) p *= IntPoly({-root(rng), 1 + (i % 5)});
      }
      const auto roots = isolate_real_roots(p);
      int distinct = 0;
      for (const auto& [f, mult] : squarefree_decomposition(p)) distinct += count_real_roots(f);
      CHECK(static_cast<int>(roots.size()) == distinct);
      for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].interval.hi < roots[i + 1].interval.lo);
    }
  }

  TEST_CASE("precision context") {
    PrecisionContext ctx;
    ctx.digits = 490;
    ctx.escalate();
    CHECK(ctx.digits == 495);
    ctx.escalate();
    CHECK(ctx.digits == 500);
    CHECK_THROWS_AS(ctx.escalate(), Error);
  }
}
