#include <iostream>

#include "doctest.h"
#include "property_suite.hpp"

TEST_SUITE("properties") {
  TEST_CASE("random proper curves") {
    const testing::PropertyReport r = testing::run_property_suite(20261016, 100);
    for (const auto& n : r.notes) MESSAGE(n);
    CHECK(r.curves == 100);
    CHECK(r.residual_failures == 0);
    CHECK(r.degree_failures == 0);
    CHECK(r.monotone_failures == 0);
    CHECK(r.component_failures == 0);
    CHECK(r.hermite_checked > 0);
    CHECK(r.hermite_failures == 0);
  }
}
