#include <doctest.h>

#include "lowrank/variety.hpp"

using namespace lowrank;

TEST_CASE("dim_lowrank") {
  CHECK(dim_lowrank(4, 1, Variant::General) == 7);
  CHECK(dim_lowrank(4, 1, Variant::Symmetric) == 4);
  for (int n = 1; n <= 8; ++n) CHECK(dim_lowrank(n, n, Variant::General) == n * n);
  CHECK(dim_lowrank(5, 0, Variant::General) == 0);
  CHECK_THROWS(dim_lowrank(3, 4, Variant::General));
}

TEST_CASE("degree_determinantal") {
  CHECK(degree_determinantal(3, 2) == 3);
  CHECK(degree_determinantal(4, 2) == 20);
  CHECK(degree_determinantal(5, 2) == 175);
  for (int n = 1; n <= 10; ++n) CHECK(degree_determinantal(n, n) == 1);
  // Generic n x n matrices of rank <= n-1: the determinant hypersurface.
  for (int n = 2; n <= 10; ++n) CHECK(degree_determinantal(n, n - 1) == n);
}

TEST_CASE("odd degree") {
  CHECK(is_odd_degree(5, 2));
  CHECK_FALSE(is_odd_degree(4, 2));
  CHECK(is_odd_degree(3, 2));
}

TEST_CASE("bounds") {
  CHECK(min_measurement_bound({4, 1, Variant::General, Field::Real}) == 12);
  CHECK(min_measurement_bound({4, 1, Variant::Symmetric, Field::Real}) == 7);
  CHECK(min_measurement_bound({4, 1, Variant::WeakRecovery, Field::Real}) == 8);
  CHECK_THROWS(min_measurement_bound({4, 3, Variant::General, Field::Real}));
}

TEST_CASE("tightness") {
  CHECK(tightness_classify({3, 1, Variant::General, Field::Real}).value == Tightness::TightByTheorem);
  CHECK(tightness_classify({4, 1, Variant::General, Field::Real}).value == Tightness::KnownNotTight);
  CHECK(tightness_classify({6, 1, Variant::General, Field::Real}).value == Tightness::Unknown);
  CHECK(tightness_classify({4, 1, Variant::Symmetric, Field::Real}).value == Tightness::KnownNotTight);
  CHECK(tightness_classify({5, 1, Variant::Symmetric, Field::Real}).value == Tightness::TightByTheorem);
  CHECK(tightness_classify({6, 1, Variant::General, Field::Complex}).value == Tightness::TightByTheorem);
  for (int n = 2; n <= 12; ++n) {
    for (int r = 1; 2 * r <= n; ++r) {
      for (auto v : {Variant::General, Variant::Symmetric, Variant::WeakRecovery}) {
        const auto t = tightness_classify({n, r, v, Field::Real});
        CHECK((t.value == Tightness::Unknown) == t.citation.empty());
      }
    }
  }
}
